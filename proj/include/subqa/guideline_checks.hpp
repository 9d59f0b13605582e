#pragma once

#include "subqa/alignment.hpp"
#include "subqa/document.hpp"
#include "subqa/finding.hpp"
#include "subqa/markup.hpp"
#include "subqa/resources.hpp"

#include <string>
#include <vector>

namespace subqa {

// Markup-free view of one cue. Findings index into `joined` (lines joined
// with '\n'), in Unicode scalars.
struct CuePlain {
    std::string joined;
    std::vector<std::string> line_plain;
    std::vector<std::size_t> line_offset; // scalar offset of each line in `joined`
    std::vector<std::vector<MarkupSpan>> line_spans;
};

CuePlain plain_of(const Cue& cue);

Findings check_line_length(const Cue& cue, std::size_t cue_index, const GuidelineProfile& profile);
Findings check_line_count(const Cue& cue, std::size_t cue_index, const GuidelineProfile& profile);
Findings check_reading_speed(const Cue& cue, std::size_t cue_index, const GuidelineProfile& profile);
Findings check_spacing(const Cue& cue, std::size_t cue_index, const GuidelineProfile& profile);
Findings detect_repetitions(const Cue& cue, std::size_t cue_index);
Findings check_compound_length(const Cue& cue, std::size_t cue_index, const LexiconSet& lexicons);

// Compares markup structure of a clean pair: tag kinds, line-break count,
// leading speaker hyphens.
Findings check_markup_integrity(const AlignedCuePair& pair, const SubtitleDocument& source,
                                const SubtitleDocument& target);

Findings detect_mixed_language(const SubtitleDocument& doc, const std::string& primary_lang);

} // namespace subqa
