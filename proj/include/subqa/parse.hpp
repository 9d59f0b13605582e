#pragma once

#include "subqa/document.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace subqa {

enum class ParseErrorKind {
    EmptyFile,
    MalformedTimestamp,
    MissingArrowSeparator,
    MalformedBlock,
    StrictViolation,
};

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, const std::string& what)
        : std::runtime_error(what), kind(kind), line(line), column(column)
    {
    }

    ParseErrorKind kind;
    std::size_t line;   // 1-based
    std::size_t column; // 1-based
};

enum class DiagnosticKind {
    OverlapWarning,
    NonMonotonicStart,
    EndNotAfterStart,
    SeparatorMismatch, // '.' vs ',' not matching the declared format
    MissingIndex,
    NonIncreasingIndex,
    SkippedBlock,
};

struct Diagnostic {
    DiagnosticKind kind;
    std::size_t line = 0;
    std::string message;
};

struct ParseResult {
    SubtitleDocument doc;
    std::vector<Diagnostic> diagnostics;
};

struct ParseOptions {
    std::optional<SubtitleFormat> format_hint;
    // Strict mode promotes structural diagnostics to errors.
    bool strict = false;
};

// Accepts HH:MM:SS.mmm, HH:MM:SS,mmm and MM:SS.mmm. Returns the separator seen.
Timestamp parse_timestamp(std::string_view text, std::size_t line, std::size_t col_base, char* separator_out = nullptr);

ParseResult parse_document(std::string_view text, const ParseOptions& options = {});

std::string serialize_document(const SubtitleDocument& doc);

} // namespace subqa
