#pragma once

#include "subqa/resources.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace subqa {

struct Token {
    std::string text;        // exact slice, including internal separators
    std::string core;        // text without leading/trailing punctuation
    std::string core_folded; // case-folded core
    std::size_t start = 0;   // scalar offset of `text` within the input
    std::size_t end = 0;
    bool has_digit = false;
    bool all_caps = false; // every letter uppercase, at least one letter
};

// Whitespace/punctuation tokenizer. Apostrophes and hyphens between letters
// and separators between digits stay inside one token ("We're", "15,000").
std::vector<Token> tokenize(std::string_view text);

struct NumberOccurrence {
    double value = 0.0;
    std::string raw;
    std::size_t start = 0; // scalar offsets
    std::size_t end = 0;
    std::size_t token_index = 0;
};

// Extracts numeric values from `tokens`, interpreting separators per `locale`.
std::vector<NumberOccurrence> extract_numbers(const std::vector<Token>& tokens, const NumberLocale& locale);

} // namespace subqa
