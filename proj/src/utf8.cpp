#include "subqa/utf8.hpp"

namespace subqa::utf8 {

char32_t decode(std::string_view s, std::size_t& i)
{
    const auto b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) {
        ++i;
        return b0;
    }
    std::size_t len = 0;
    char32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        ++i;
        return 0xFFFD;
    }
    if (i + len > s.size()) {
        ++i;
        return 0xFFFD;
    }
    for (std::size_t k = 1; k < len; ++k) {
        const auto b = static_cast<unsigned char>(s[i + k]);
        if ((b & 0xC0) != 0x80) {
            ++i;
            return 0xFFFD;
        }
        cp = (cp << 6) | (b & 0x3F);
    }
    i += len;
    return cp;
}

std::size_t scalar_count(std::string_view s)
{
    std::size_t i = 0, n = 0;
    while (i < s.size()) {
        decode(s, i);
        ++n;
    }
    return n;
}

std::size_t byte_offset(std::string_view s, std::size_t scalar)
{
    std::size_t i = 0, n = 0;
    while (i < s.size() && n < scalar) {
        decode(s, i);
        ++n;
    }
    return i;
}

std::string encode(char32_t cp)
{
    std::string out;
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
    return out;
}

std::vector<char32_t> decode_all(std::string_view s)
{
    std::vector<char32_t> out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size())
        out.push_back(decode(s, i));
    return out;
}

char32_t fold(char32_t cp)
{
    if (cp >= 'A' && cp <= 'Z')
        return cp + 32;
    // Latin-1 uppercase block, excluding the multiplication sign.
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7)
        return cp + 32;
    // Latin Extended-A alternates upper/lower.
    if (cp >= 0x100 && cp <= 0x177 && (cp % 2) == 0)
        return cp + 1;
    if (cp == 0x1E9E) // capital sharp s
        return 0xDF;
    return cp;
}

std::string fold_string(std::string_view s)
{
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size())
        out += encode(fold(decode(s, i)));
    return out;
}

bool is_ascii_digit(char32_t cp)
{
    return cp >= '0' && cp <= '9';
}

bool is_letter(char32_t cp)
{
    if ((cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z'))
        return true;
    if (cp < 0x80)
        return false;
    // Treat non-ASCII as a letter unless it is a known punctuation/symbol.
    switch (cp) {
    case 0x2026: // ellipsis
    case 0x00BF: // inverted question mark
    case 0x00A1: // inverted exclamation mark
    case 0x2013: // en dash
    case 0x2014: // em dash
    case 0x201C:
    case 0x201D:
    case 0x201E:
    case 0x2018:
    case 0x2019:
    case 0x00AB:
    case 0x00BB:
    case 0x00A0:
    case 0x00B7:
        return false;
    default:
        return true;
    }
}

} // namespace subqa::utf8
