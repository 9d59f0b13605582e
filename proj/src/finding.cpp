#include "subqa/finding.hpp"

#include <array>

namespace subqa {
namespace {

constexpr std::array<std::string_view, kErrorCategoryCount> kCategoryNames = {
    "RepeatedPhrase",
    "IncorrectSpacing",
    "NonTextCharacter",
    "BlockCountIntegrity",
    "LineTooLong",
    "TooManyLines",
    "ReadingSpeedExceeded",
    "CompoundWordOOV",
    "MixedLanguage",
    "NotTranslated",
    "Misspelling",
    "GlossaryViolation",
    "LexicalInconsistency",
    "ProfanityMismatch",
    "FormatError",
    "AdditionOmission",
    "RegisterInconsistency",
    "Stammering",
    "Idiom",
    "ContextualMeaning",
    "Nonsensical",
    "OverTranslation",
    "WordOrder",
    "Agreement",
    "WordStructure",
    "CulturalNuance",
    "GrammarIntent",
    "GenreAdaptation",
    "InventedLanguage",
    "Paraphrase",
};

} // namespace

std::string_view to_string(ErrorCategory category)
{
    return kCategoryNames[static_cast<std::size_t>(category)];
}

std::optional<ErrorCategory> category_from_string(std::string_view name)
{
    for (std::size_t i = 0; i < kCategoryNames.size(); ++i)
        if (kCategoryNames[i] == name)
            return static_cast<ErrorCategory>(i);
    return std::nullopt;
}

std::string_view to_string(Severity severity)
{
    switch (severity) {
    case Severity::Error:
        return "error";
    case Severity::Warning:
        return "warning";
    case Severity::Info:
        return "info";
    }
    return "error";
}

std::optional<Severity> severity_from_string(std::string_view name)
{
    if (name == "error")
        return Severity::Error;
    if (name == "warning")
        return Severity::Warning;
    if (name == "info")
        return Severity::Info;
    return std::nullopt;
}

} // namespace subqa
