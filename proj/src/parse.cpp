#include "subqa/parse.hpp"

#include <charconv>
#include <cstdio>

namespace subqa {
namespace {

constexpr std::string_view kBom = "\xEF\xBB\xBF";

struct Line {
    std::string text;
    std::size_t number; // 1-based
};

std::vector<Line> split_lines(std::string_view text)
{
    std::vector<Line> lines;
    std::size_t pos = 0, number = 1;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view piece = (nl == std::string_view::npos) ? text.substr(pos) : text.substr(pos, nl - pos);
        if (!piece.empty() && piece.back() == '\r')
            piece.remove_suffix(1);
        lines.push_back({std::string(piece), number});
        if (nl == std::string_view::npos)
            break;
        pos = nl + 1;
        ++number;
    }
    // Drop a trailing empty line produced by a final newline.
    if (!lines.empty() && lines.back().text.empty())
        lines.pop_back();
    return lines;
}

bool is_blank(const Line& l)
{
    return l.text.find_first_not_of(" \t") == std::string::npos;
}

bool has_arrow(const std::string& s)
{
    return s.find("-->") != std::string::npos;
}

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    return true;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

} // namespace

Timestamp parse_timestamp(std::string_view text, std::size_t line, std::size_t col_base, char* separator_out)
{
    const auto fail = [&](std::size_t off) -> Timestamp {
        throw ParseError(ParseErrorKind::MalformedTimestamp, line, col_base + off,
                         "malformed timestamp '" + std::string(text) + "'");
    };

    std::vector<std::string_view> colon_parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ':') {
            colon_parts.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    if (colon_parts.size() != 2 && colon_parts.size() != 3)
        fail(0);

    // Last component carries the millisecond fraction: SS.mmm or SS,mmm.
    std::string_view last = colon_parts.back();
    auto sep_pos = last.find_first_of(".,");
    if (sep_pos == std::string_view::npos)
        fail(text.size() - last.size());
    const char sep = last[sep_pos];
    if (separator_out)
        *separator_out = sep;
    std::string_view sec_part = last.substr(0, sep_pos);
    std::string_view ms_part = last.substr(sep_pos + 1);
    if (!all_digits(sec_part) || ms_part.size() != 3 || !all_digits(ms_part))
        fail(text.size() - last.size());

    std::int64_t hours = 0, minutes = 0, seconds = 0, ms = 0;
    const auto to_int = [&](std::string_view p, std::int64_t& out, std::size_t off) {
        if (!all_digits(p) || p.size() > 9)
            fail(off);
        out = 0;
        for (char c : p)
            out = out * 10 + (c - '0');
    };
    std::size_t off = 0;
    if (colon_parts.size() == 3) {
        to_int(colon_parts[0], hours, off);
        off += colon_parts[0].size() + 1;
    }
    to_int(colon_parts[colon_parts.size() - 2], minutes, off);
    to_int(sec_part, seconds, off);
    to_int(ms_part, ms, off);
    if (minutes >= 60 || seconds >= 60)
        fail(0);

    Timestamp ts{((hours * 60 + minutes) * 60 + seconds) * 1000 + ms};
    if (ts.millis > Timestamp::kMax)
        fail(0);
    return ts;
}

std::string format_timestamp(Timestamp ts, SubtitleFormat format)
{
    const char sep = (format == SubtitleFormat::SRT) ? ',' : '.';
    const auto ms = ts.millis % 1000;
    const auto s = (ts.millis / 1000) % 60;
    const auto m = (ts.millis / 60'000) % 60;
    const auto h = ts.millis / 3'600'000;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%02lld:%02lld:%02lld%c%03lld",
                  static_cast<long long>(h), static_cast<long long>(m),
                  static_cast<long long>(s), sep, static_cast<long long>(ms));
    return buf;
}

std::string Cue::raw() const
{
    std::string out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i)
            out.push_back('\n');
        out += lines[i];
    }
    return out;
}

ParseResult parse_document(std::string_view text, const ParseOptions& options)
{
    ParseResult result;
    SubtitleDocument& doc = result.doc;

    if (text.substr(0, kBom.size()) == kBom) {
        doc.had_bom = true;
        text.remove_prefix(kBom.size());
    }
    if (text.find_first_not_of(" \t\r\n") == std::string_view::npos)
        throw ParseError(ParseErrorKind::EmptyFile, 1, 1, "empty subtitle file");

    const auto lines = split_lines(text);
    const bool starts_webvtt = !lines.empty() && lines.front().text.rfind("WEBVTT", 0) == 0;
    doc.format = options.format_hint.value_or(starts_webvtt ? SubtitleFormat::VTT : SubtitleFormat::SRT);

    const auto diag = [&](DiagnosticKind kind, std::size_t line, std::string message) {
        if (options.strict)
            throw ParseError(ParseErrorKind::StrictViolation, line, 1, message);
        result.diagnostics.push_back({kind, line, std::move(message)});
    };

    // Group lines into blocks separated by blank lines.
    std::vector<std::vector<Line>> blocks;
    std::vector<Line> current;
    for (const auto& l : lines) {
        if (is_blank(l)) {
            if (!current.empty())
                blocks.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(l);
        }
    }
    if (!current.empty())
        blocks.push_back(std::move(current));

    std::size_t block_start = 0;
    if (starts_webvtt && doc.format == SubtitleFormat::VTT && !blocks.empty()) {
        std::string header;
        const auto& hb = blocks[0];
        for (std::size_t i = 1; i < hb.size(); ++i) {
            if (i > 1)
                header.push_back('\n');
            header += hb[i].text;
        }
        doc.header = header;
        block_start = 1;
    }

    std::optional<std::uint64_t> prev_index;
    for (std::size_t b = block_start; b < blocks.size(); ++b) {
        const auto& block = blocks[b];
        if (doc.format == SubtitleFormat::VTT &&
            (block[0].text.rfind("NOTE", 0) == 0 || block[0].text.rfind("STYLE", 0) == 0 ||
             block[0].text.rfind("REGION", 0) == 0)) {
            result.diagnostics.push_back({DiagnosticKind::SkippedBlock, block[0].number,
                                          "skipped non-cue block '" + block[0].text + "'"});
            continue;
        }

        std::size_t ts_line = 0;
        while (ts_line < block.size() && ts_line < 2 && !has_arrow(block[ts_line].text))
            ++ts_line;
        if (ts_line >= block.size() || !has_arrow(block[ts_line].text))
            throw ParseError(ParseErrorKind::MissingArrowSeparator, block[0].number, 1,
                             "cue block has no '-->' timestamp line");

        Cue cue;
        if (ts_line == 1) {
            const std::string& id = block[0].text;
            if (all_digits(id)) {
                cue.index = 0;
                for (char c : id)
                    cue.index = *cue.index * 10 + static_cast<std::uint64_t>(c - '0');
            } else if (doc.format == SubtitleFormat::VTT) {
                cue.vtt_id = id;
            } else {
                throw ParseError(ParseErrorKind::MalformedBlock, block[0].number, 1,
                                 "SRT cue identifier is not numeric: '" + id + "'");
            }
        } else if (doc.format == SubtitleFormat::SRT) {
            diag(DiagnosticKind::MissingIndex, block[0].number, "SRT cue without index line");
        }

        const auto& tl = block[ts_line];
        const auto arrow = tl.text.find("-->");
        char sep_start = '.', sep_end = '.';
        cue.start = parse_timestamp(trim(std::string_view(tl.text).substr(0, arrow)), tl.number, 1, &sep_start);
        std::string_view rest = trim(std::string_view(tl.text).substr(arrow + 3));
        const auto settings_pos = rest.find_first_of(" \t");
        std::string_view end_text = (settings_pos == std::string_view::npos) ? rest : rest.substr(0, settings_pos);
        cue.end = parse_timestamp(end_text, tl.number, 1, &sep_end);
        if (settings_pos != std::string_view::npos)
            cue.settings = std::string(trim(rest.substr(settings_pos)));

        const char expected = (doc.format == SubtitleFormat::SRT) ? ',' : '.';
        if (sep_start != expected || sep_end != expected)
            result.diagnostics.push_back({DiagnosticKind::SeparatorMismatch, tl.number,
                                          "timestamp separator does not match declared format"});

        for (std::size_t i = ts_line + 1; i < block.size(); ++i)
            cue.lines.push_back(block[i].text);
        if (cue.lines.empty())
            throw ParseError(ParseErrorKind::MalformedBlock, tl.number, 1,
                             "cue has no payload after timestamp line");

        if (cue.end <= cue.start)
            diag(DiagnosticKind::EndNotAfterStart, tl.number, "cue end is not after cue start");
        if (!doc.cues.empty()) {
            if (cue.start < doc.cues.back().start)
                diag(DiagnosticKind::NonMonotonicStart, tl.number, "cue starts before its predecessor");
            else if (cue.start < doc.cues.back().end)
                diag(DiagnosticKind::OverlapWarning, tl.number, "cue overlaps its predecessor");
        }
        if (doc.format == SubtitleFormat::SRT && cue.index) {
            if (prev_index && *cue.index <= *prev_index)
                diag(DiagnosticKind::NonIncreasingIndex, block[0].number, "SRT cue index not increasing");
            prev_index = cue.index;
        }

        doc.cues.push_back(std::move(cue));
    }

    return result;
}

std::string serialize_document(const SubtitleDocument& doc)
{
    std::string out;
    if (doc.had_bom)
        out += kBom;
    if (doc.format == SubtitleFormat::VTT) {
        out += "WEBVTT";
        if (doc.header && !doc.header->empty()) {
            out.push_back('\n');
            out += *doc.header;
        }
        out += "\n\n";
    }
    std::uint64_t next_index = 1;
    for (std::size_t i = 0; i < doc.cues.size(); ++i) {
        const Cue& cue = doc.cues[i];
        if (i)
            out.push_back('\n');
        if (doc.format == SubtitleFormat::SRT) {
            const std::uint64_t idx = cue.index.value_or(next_index);
            out += std::to_string(idx);
            out.push_back('\n');
            next_index = idx + 1;
        } else if (cue.vtt_id) {
            out += *cue.vtt_id;
            out.push_back('\n');
        } else if (cue.index) {
            out += std::to_string(*cue.index);
            out.push_back('\n');
        }
        out += format_timestamp(cue.start, doc.format);
        out += " --> ";
        out += format_timestamp(cue.end, doc.format);
        if (!cue.settings.empty()) {
            out.push_back(' ');
            out += cue.settings;
        }
        out.push_back('\n');
        out += cue.raw();
        out.push_back('\n');
    }
    return out;
}

} // namespace subqa
