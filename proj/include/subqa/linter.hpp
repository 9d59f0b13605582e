#pragma once

#include "subqa/document.hpp"
#include "subqa/finding.hpp"
#include "subqa/resources.hpp"

#include <string>

namespace subqa {

struct LintOptions {
    GuidelineProfile profile;
    const LexiconSet* lexicons = nullptr; // optional; lexicon checks no-op without it
    std::string source_lang = "en";
    std::string target_lang;
    double expansion = 1.0;
    int profanity_tolerance = 1;
    double overlap_threshold = 0.5;
};

// All single-document (target-side) detectors, findings ordered by cue index.
Findings lint_document(const SubtitleDocument& doc, const LintOptions& options);

// Alignment plus all paired detectors plus the target-side suite, ordered by
// target cue index.
Findings compare_documents(const SubtitleDocument& source, const SubtitleDocument& target,
                           const LintOptions& options);

bool has_errors(const Findings& findings);

void sort_findings(Findings& findings);

} // namespace subqa
