#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace subqa::utf8 {

// Decodes the code point starting at byte offset `i` and advances `i`.
// Invalid sequences decode as U+FFFD and advance one byte.
char32_t decode(std::string_view s, std::size_t& i);

std::size_t scalar_count(std::string_view s);

// Byte offset of the scalar with index `scalar` (scalar_count(s) maps to s.size()).
std::size_t byte_offset(std::string_view s, std::size_t scalar);

std::string encode(char32_t cp);

std::vector<char32_t> decode_all(std::string_view s);

// Simple case fold: ASCII plus Latin-1/Latin Extended-A letters. Enough for the
// European-language lexicons this tool ships; anything else is left untouched.
char32_t fold(char32_t cp);
std::string fold_string(std::string_view s);

bool is_ascii_digit(char32_t cp);
bool is_letter(char32_t cp);

} // namespace subqa::utf8
