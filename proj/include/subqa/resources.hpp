#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace subqa {

class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FileNotFound : public ResourceError {
public:
    using ResourceError::ResourceError;
};

class SchemaViolation : public ResourceError {
public:
    using ResourceError::ResourceError;
};

class MissingResource : public ResourceError {
public:
    using ResourceError::ResourceError;
};

class DuplicateGlossaryKey : public ResourceError {
public:
    using ResourceError::ResourceError;
};

enum class SpacingConvention { Attached, Spaced };

struct GuidelineProfile {
    std::string language;
    std::size_t max_chars_per_line = 42;
    std::size_t max_lines_per_block = 3;
    double max_reading_speed = 17.0; // characters per second
    SpacingConvention hyphen_spacing = SpacingConvention::Attached;
    SpacingConvention ellipsis_spacing = SpacingConvention::Attached;
    std::set<std::string> ellipsis_forms = {"...", "…"};
};

enum class UnitSystem { Imperial, Metric };

struct UnitRule {
    std::string source_unit;
    std::set<std::string> source_aliases; // includes target-language names of the same unit
    std::string target_unit;
    double factor = 1.0; // target = source * factor
    UnitSystem system = UnitSystem::Imperial;
};

struct NumberLocale {
    char decimal_separator = '.';
    char thousands_separator = ',';
};

inline constexpr const char* kKeepVerbatim = "keep-verbatim";

struct LexiconSet {
    std::unordered_set<std::string> target_wordlist; // case-folded
    std::unordered_set<std::string> allowlist;       // proper nouns, case-folded
    std::map<std::string, std::string> knp_glossary; // case-folded source term -> rendering
    std::unordered_map<std::string, std::unordered_map<std::string, int>> profanity; // lang -> term -> severity 1..3
    std::vector<UnitRule> units;
    NumberLocale source_number;
    NumberLocale target_number;

    bool in_wordlist(const std::string& folded) const
    {
        return target_wordlist.count(folded) > 0;
    }
};

// Built-in defaults; load_profile overlays a JSON file on top of these.
GuidelineProfile builtin_profile(const std::string& language);

GuidelineProfile load_profile(const std::string& path);

NumberLocale builtin_number_locale(const std::string& language);

// Conversion rules every LexiconSet starts from (feet, miles, gallons, pounds).
std::vector<UnitRule> default_units();

// Loads words.txt / knp/*.json / profanity/<lang>.json / units/<src>-<tgt>.json
// below `dir`. Individual files are optional; the directory itself is not.
LexiconSet load_lexicons(const std::string& dir, const std::string& source_lang, const std::string& target_lang);

struct RegisterRules {
    std::set<std::string> informal; // case-folded markers
    std::set<std::string> formal;   // markers counted only when mid-sentence capitalized
};

std::optional<RegisterRules> builtin_register_rules(const std::string& language);

} // namespace subqa
