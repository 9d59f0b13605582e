#pragma once

#include "subqa/document.hpp"
#include "subqa/finding.hpp"

#include <vector>

namespace subqa {

struct AlignedCuePair {
    std::vector<std::size_t> source_indices;
    std::vector<std::size_t> target_indices;
    double overlap = 0.0; // temporal Jaccard of the two interval unions

    bool is_clean(double threshold) const
    {
        return source_indices.size() == 1 && target_indices.size() == 1 && overlap >= threshold;
    }
    bool one_to_one() const
    {
        return source_indices.size() == 1 && target_indices.size() == 1;
    }
};

inline constexpr double kDefaultOverlapThreshold = 0.5;

// Partitions the cues of both documents into pairs by temporal overlap.
// Cross-document cues whose interval Jaccard reaches `threshold` (or where one
// interval contains the other) land in the same pair; unmatched cues become
// singleton pairs with overlap 0. Pairs are ordered by earliest start.
std::vector<AlignedCuePair> align_by_time(const SubtitleDocument& source, const SubtitleDocument& target,
                                          double threshold = kDefaultOverlapThreshold);

// One BlockCountIntegrity finding per pair that is not 1-to-1. The finding's
// cue_index refers to the target document (first target cue of the pair, or
// the first source cue for unmatched-source pairs).
Findings check_block_count(const std::vector<AlignedCuePair>& alignment);

} // namespace subqa
