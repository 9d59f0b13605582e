#pragma once

#include "subqa/alignment.hpp"
#include "subqa/document.hpp"
#include "subqa/finding.hpp"
#include "subqa/resources.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace subqa {

// One applied correction. `before`/`after` are the cue's full payload, so a
// fixed document can be reproduced by replaying edits onto the original.
struct Edit {
    std::size_t cue_index = 0;
    ErrorCategory category = ErrorCategory::IncorrectSpacing;
    std::string before;
    std::string after;
};

struct FixResult {
    SubtitleDocument doc;
    std::vector<Edit> edits;
};

class PartialSpanUnfixable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

FixResult fix_spacing(const SubtitleDocument& doc, const GuidelineProfile& profile);

FixResult collapse_repetitions(const SubtitleDocument& doc);

// Copies full-payload tags from the source cue onto the target cue. Partial
// source spans are not transferable and produce no edit.
struct MarkupFixOutcome {
    Cue cue;
    std::vector<Edit> edits;
    bool partial_span_flagged = false;
};

MarkupFixOutcome reinsert_source_markup(const AlignedCuePair& pair, const SubtitleDocument& source,
                                        const SubtitleDocument& target);

struct UnitSuggestion {
    double exact = 0.0;
    double display = 0.0; // rounded to nearest 10 below 1000, else nearest 100
    std::string text;     // e.g. "4600 m"
};

UnitSuggestion unit_conversion(double value, const UnitRule& rule);

// Advisory display text only; conversions are never auto-applied.
std::string suggest_unit_conversion(double value, const UnitRule& rule);

// Applies an edit list onto a document (replay check for the Edit invariant).
SubtitleDocument replay_edits(const SubtitleDocument& original, const std::vector<Edit>& edits);

} // namespace subqa
