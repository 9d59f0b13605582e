#include "subqa/markup.hpp"

#include "subqa/utf8.hpp"

namespace subqa {
namespace {

MarkupKind kind_for(std::string_view name)
{
    if (name == "i")
        return MarkupKind::Italic;
    if (name == "b")
        return MarkupKind::Bold;
    if (name == "u")
        return MarkupKind::Underline;
    return MarkupKind::OtherTag;
}

struct RawTag {
    bool closing = false;
    bool void_tag = false; // <.../> or VTT timestamp tags, no closer expected
    std::string name;
    std::string text; // exact source bytes including angle brackets
};

// Parses a tag starting at byte i (line[i] == '<'). Returns false when the
// '<' does not introduce a well-formed tag and should be kept as literal text.
bool parse_tag(std::string_view line, std::size_t i, RawTag& out, std::size_t& next)
{
    const auto close = line.find('>', i);
    if (close == std::string_view::npos)
        return false;
    std::string_view inner = line.substr(i + 1, close - i - 1);
    if (inner.empty())
        return false;
    out = RawTag{};
    if (inner.front() == '/') {
        out.closing = true;
        inner.remove_prefix(1);
    }
    if (!inner.empty() && inner.back() == '/') {
        out.void_tag = true;
        inner.remove_suffix(1);
    }
    std::size_t name_end = 0;
    while (name_end < inner.size() && inner[name_end] != ' ' && inner[name_end] != '\t')
        ++name_end;
    out.name = std::string(inner.substr(0, name_end));
    if (out.name.empty())
        return false;
    // VTT karaoke timestamp tags have no closer.
    if (!out.name.empty() && out.name[0] >= '0' && out.name[0] <= '9')
        out.void_tag = true;
    out.text = std::string(line.substr(i, close - i + 1));
    next = close + 1;
    return true;
}

} // namespace

StrippedLine strip_markup(std::string_view line)
{
    StrippedLine result;
    struct Open {
        std::size_t span_index;
        std::string name;
        std::size_t plain_offset;
    };
    std::vector<Open> stack;

    std::size_t i = 0;
    std::size_t plain_scalars = 0;
    while (i < line.size()) {
        if (line[i] == '<') {
            RawTag tag;
            std::size_t next = 0;
            if (parse_tag(line, i, tag, next)) {
                if (tag.void_tag && !tag.closing) {
                    MarkupSpan span;
                    span.kind = kind_for(tag.name);
                    span.tag_name = tag.name;
                    span.start = span.end = plain_scalars;
                    span.open_text = tag.text;
                    span.depth = stack.size();
                    result.spans.push_back(std::move(span));
                } else if (!tag.closing) {
                    MarkupSpan span;
                    span.kind = kind_for(tag.name);
                    span.tag_name = tag.name;
                    span.start = plain_scalars;
                    span.open_text = tag.text;
                    span.depth = stack.size();
                    result.spans.push_back(std::move(span));
                    stack.push_back({result.spans.size() - 1, tag.name, plain_scalars});
                } else {
                    if (stack.empty() || stack.back().name != tag.name)
                        throw UnbalancedTag(tag.name, plain_scalars);
                    MarkupSpan& span = result.spans[stack.back().span_index];
                    span.end = plain_scalars;
                    span.close_text = tag.text;
                    stack.pop_back();
                }
                i = next;
                continue;
            }
        }
        std::size_t start = i;
        utf8::decode(line, i);
        result.plain += line.substr(start, i - start);
        ++plain_scalars;
    }
    if (!stack.empty())
        throw UnbalancedTag(stack.back().name, stack.back().plain_offset);
    return result;
}

std::string reinsert_markup(std::string_view plain, const std::vector<MarkupSpan>& spans)
{
    const std::size_t n_scalars = utf8::scalar_count(plain);
    for (const auto& s : spans) {
        if (s.start > s.end || s.end > n_scalars)
            throw SpanOutOfBounds("markup span [" + std::to_string(s.start) + "," +
                                  std::to_string(s.end) + ") exceeds plain text length " +
                                  std::to_string(n_scalars));
    }
    // Spans arrive in tag-open order and must nest; build the containment tree.
    struct Node {
        const MarkupSpan* span = nullptr;
        std::vector<Node> children;
    };
    Node root;
    std::vector<Node*> stack{&root};
    for (const auto& s : spans) {
        while (stack.size() > 1) {
            const MarkupSpan* top = stack.back()->span;
            if (s.start < top->end && top->end < s.end)
                throw SpanOutOfBounds("markup spans partially overlap");
            const bool contained = top->start <= s.start && s.end <= top->end;
            // A tag starting exactly at the top's end offset is ambiguous
            // (inside or right after it); the recorded depth decides.
            const bool after_top = contained && s.start == top->end && stack.size() - 1 > s.depth;
            if (contained && !after_top)
                break;
            stack.pop_back();
        }
        stack.back()->children.push_back(Node{&s, {}});
        stack.push_back(&stack.back()->children.back());
    }

    std::string out;
    const auto slice = [&](std::size_t from, std::size_t to) {
        return plain.substr(utf8::byte_offset(plain, from), utf8::byte_offset(plain, to) - utf8::byte_offset(plain, from));
    };
    const auto render = [&](auto&& self, const Node& node, std::size_t from, std::size_t to) -> void {
        std::size_t pos = from;
        for (const Node& child : node.children) {
            out += slice(pos, child.span->start);
            out += child.span->open_text;
            self(self, child, child.span->start, child.span->end);
            out += child.span->close_text;
            pos = child.span->end;
        }
        out += slice(pos, to);
    };
    render(render, root, 0, n_scalars);
    return out;
}

} // namespace subqa
