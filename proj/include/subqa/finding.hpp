#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace subqa {

// Category identifiers are a stable contract: reports written by one release
// must aggregate under the next. Categories past Stammering have no detector
// here; they exist so externally annotated findings can flow through stats.
enum class ErrorCategory {
    RepeatedPhrase,
    IncorrectSpacing,
    NonTextCharacter,
    BlockCountIntegrity,
    LineTooLong,
    TooManyLines,
    ReadingSpeedExceeded,
    CompoundWordOOV,
    MixedLanguage,
    NotTranslated,
    Misspelling,
    GlossaryViolation,
    LexicalInconsistency,
    ProfanityMismatch,
    FormatError,
    AdditionOmission,
    RegisterInconsistency,
    Stammering,
    // Reserved: no automated detector.
    Idiom,
    ContextualMeaning,
    Nonsensical,
    OverTranslation,
    WordOrder,
    Agreement,
    WordStructure,
    CulturalNuance,
    GrammarIntent,
    GenreAdaptation,
    InventedLanguage,
    Paraphrase,
};

inline constexpr std::size_t kErrorCategoryCount = static_cast<std::size_t>(ErrorCategory::Paraphrase) + 1;

std::string_view to_string(ErrorCategory category);
std::optional<ErrorCategory> category_from_string(std::string_view name);

enum class Severity { Error, Warning, Info };

std::string_view to_string(Severity severity);
std::optional<Severity> severity_from_string(std::string_view name);

// Character range in Unicode scalars into a cue's plain (markup-free) text.
struct Span {
    std::size_t start = 0;
    std::size_t end = 0;

    friend bool operator==(const Span&, const Span&) = default;
};

struct Finding {
    ErrorCategory category = ErrorCategory::RepeatedPhrase;
    std::size_t cue_index = 0;
    std::optional<Span> span;
    Severity severity = Severity::Error;
    std::string message;
    std::optional<std::string> suggestion; // replacement text for `span`
};

using Findings = std::vector<Finding>;

} // namespace subqa
