#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace subqa {

// Stopword and script-range evidence for a handful of languages. Intended for
// cue-length text where anything heavier is not worth the dependency.
struct LanguageEvidence {
    std::string language;
    std::size_t hits = 0;
};

std::vector<std::string> supported_evidence_languages();

// Counts stopword hits (and script-specific characters) per language.
std::map<std::string, std::size_t> language_hits(std::string_view text);

} // namespace subqa
