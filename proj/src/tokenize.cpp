#include "subqa/tokenize.hpp"

#include "subqa/utf8.hpp"

#include <cstdlib>

namespace subqa {
namespace {

bool is_word_char(char32_t cp)
{
    return utf8::is_letter(cp) || utf8::is_ascii_digit(cp);
}

bool is_apostrophe(char32_t cp)
{
    return cp == '\'' || cp == 0x2019;
}

} // namespace

std::vector<Token> tokenize(std::string_view text)
{
    const std::vector<char32_t> cps = utf8::decode_all(text);
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < cps.size()) {
        if (!is_word_char(cps[i])) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < cps.size()) {
            if (is_word_char(cps[i])) {
                ++i;
                continue;
            }
            // Joiners survive only between two word characters.
            const bool digit_ctx = i > start && utf8::is_ascii_digit(cps[i - 1]) &&
                                   i + 1 < cps.size() && utf8::is_ascii_digit(cps[i + 1]);
            const bool letter_ctx = i > start && utf8::is_letter(cps[i - 1]) &&
                                    i + 1 < cps.size() && utf8::is_letter(cps[i + 1]);
            const bool joiner = (is_apostrophe(cps[i]) && letter_ctx) ||
                                ((cps[i] == ',' || cps[i] == '.') && digit_ctx) ||
                                (cps[i] == '-' && (letter_ctx || digit_ctx ||
                                                   (i > start && i + 1 < cps.size() &&
                                                    is_word_char(cps[i - 1]) && is_word_char(cps[i + 1]))));
            if (!joiner)
                break;
            ++i;
        }
        Token tok;
        tok.start = start;
        tok.end = i;
        for (std::size_t k = start; k < i; ++k) {
            tok.text += utf8::encode(cps[k]);
            if (utf8::is_ascii_digit(cps[k]))
                tok.has_digit = true;
        }
        tok.core = tok.text; // joiners only occur between word chars, no trim needed
        tok.core_folded = utf8::fold_string(tok.core);
        bool any_letter = false, all_upper = true;
        for (std::size_t k = start; k < i; ++k) {
            if (utf8::is_letter(cps[k])) {
                any_letter = true;
                if (utf8::fold(cps[k]) == cps[k])
                    all_upper = false;
            }
        }
        tok.all_caps = any_letter && all_upper;
        tokens.push_back(std::move(tok));
    }
    return tokens;
}

std::vector<NumberOccurrence> extract_numbers(const std::vector<Token>& tokens, const NumberLocale& locale)
{
    std::vector<NumberOccurrence> out;
    for (std::size_t t = 0; t < tokens.size(); ++t) {
        const Token& tok = tokens[t];
        if (!tok.has_digit)
            continue;
        // Only pure numeric tokens (digits plus separators) become values;
        // mixed tokens like "B-52" stay out.
        bool numeric = true;
        for (char c : tok.text)
            if (!(c >= '0' && c <= '9') && c != locale.decimal_separator && c != locale.thousands_separator)
                numeric = false;
        if (!numeric)
            continue;
        std::string normalized;
        for (char c : tok.text) {
            if (c == locale.thousands_separator)
                continue;
            normalized.push_back(c == locale.decimal_separator ? '.' : c);
        }
        if (normalized.empty() || normalized == ".")
            continue;
        NumberOccurrence occ;
        occ.value = std::strtod(normalized.c_str(), nullptr);
        occ.raw = tok.text;
        occ.start = tok.start;
        occ.end = tok.end;
        occ.token_index = t;
        out.push_back(std::move(occ));
    }
    return out;
}

} // namespace subqa
