#pragma once

#include "subqa/alignment.hpp"
#include "subqa/document.hpp"
#include "subqa/finding.hpp"
#include "subqa/resources.hpp"

#include <string>
#include <vector>

namespace subqa {

struct PairContext {
    const SubtitleDocument& source;
    const SubtitleDocument& target;
    const AlignedCuePair& pair; // must be 1-to-1
};

Findings detect_not_translated(const PairContext& ctx, const LexiconSet& lexicons,
                               const std::string& target_lang);

Findings check_spelling(const Cue& cue, std::size_t cue_index, const LexiconSet& lexicons);

Findings check_glossary(const PairContext& ctx, const LexiconSet& lexicons);

Findings check_lexical_consistency(const std::vector<AlignedCuePair>& alignment,
                                   const SubtitleDocument& source, const SubtitleDocument& target,
                                   const LexiconSet& lexicons);

Findings check_profanity(const PairContext& ctx, const LexiconSet& lexicons,
                         const std::string& source_lang, const std::string& target_lang,
                         int tolerance = 1);

Findings check_numbers_units(const PairContext& ctx, const LexiconSet& lexicons);

inline constexpr double kUnitTolerance = 0.10; // relative, covers human rounding

Findings check_addition_omission(const PairContext& ctx, const LexiconSet& lexicons,
                                 double expansion = 1.0);

Findings check_register(const SubtitleDocument& doc, const std::string& language,
                        std::size_t window = 10);

Findings detect_stammering(const PairContext& ctx);

} // namespace subqa
