#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace subqa {

enum class MarkupKind { Italic, Bold, Underline, OtherTag };

// A tag pair projected onto the plain (tag-free) text of a line.
// Offsets are Unicode scalar positions. open_text/close_text keep the exact
// source bytes so unknown tags survive a strip/reinsert round trip.
struct MarkupSpan {
    MarkupKind kind = MarkupKind::OtherTag;
    std::string tag_name;
    std::size_t start = 0;
    std::size_t end = 0;
    std::string open_text;
    std::string close_text;
    // Enclosing open tags at the moment this tag opened. Disambiguates a
    // zero-width tag sitting exactly at an enclosing pair's end offset.
    std::size_t depth = 0;

    friend bool operator==(const MarkupSpan&, const MarkupSpan&) = default;
};

class UnbalancedTag : public std::runtime_error {
public:
    UnbalancedTag(std::string tag, std::size_t offset)
        : std::runtime_error("unbalanced tag <" + tag + "> at offset " + std::to_string(offset)),
          tag(std::move(tag)), offset(offset)
    {
    }

    std::string tag;
    std::size_t offset;
};

class SpanOutOfBounds : public std::runtime_error {
public:
    explicit SpanOutOfBounds(const std::string& what) : std::runtime_error(what) {}
};

struct StrippedLine {
    std::string plain;
    std::vector<MarkupSpan> spans; // in tag-open order, properly nested
};

StrippedLine strip_markup(std::string_view line);

std::string reinsert_markup(std::string_view plain, const std::vector<MarkupSpan>& spans);

} // namespace subqa
