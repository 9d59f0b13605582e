#include "subqa/fixers.hpp"

#include "subqa/guideline_checks.hpp"
#include "subqa/markup.hpp"
#include "subqa/utf8.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

namespace subqa {
namespace {

std::vector<std::string> split_payload(const std::string& payload)
{
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (true) {
        const auto nl = payload.find('\n', pos);
        if (nl == std::string::npos) {
            lines.push_back(payload.substr(pos));
            break;
        }
        lines.push_back(payload.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;
}

// Applies span suggestions (scalar offsets into the cue's joined plain text)
// onto the cue, re-projecting markup around the replaced regions.
Cue apply_suggestions(const Cue& cue, Findings findings)
{
    Cue fixed = cue;
    const CuePlain plain = plain_of(cue);

    std::sort(findings.begin(), findings.end(),
              [](const Finding& a, const Finding& b) { return a.span->start > b.span->start; });

    for (std::size_t li = 0; li < plain.line_plain.size(); ++li) {
        const std::size_t base = plain.line_offset[li];
        const std::size_t len = utf8::scalar_count(plain.line_plain[li]);
        std::vector<char32_t> cps = utf8::decode_all(plain.line_plain[li]);
        std::vector<MarkupSpan> spans = plain.line_spans[li];
        bool changed = false;

        for (const Finding& f : findings) {
            if (!f.span || !f.suggestion)
                continue;
            if (f.span->start < base || f.span->end > base + len)
                continue; // not (fully) on this line
            const std::size_t s = f.span->start - base;
            const std::size_t e = f.span->end - base;
            const std::vector<char32_t> repl = utf8::decode_all(*f.suggestion);
            cps.erase(cps.begin() + static_cast<std::ptrdiff_t>(s),
                      cps.begin() + static_cast<std::ptrdiff_t>(e));
            cps.insert(cps.begin() + static_cast<std::ptrdiff_t>(s), repl.begin(), repl.end());
            const auto remap = [&](std::size_t pos) {
                if (pos <= s)
                    return pos;
                if (pos >= e)
                    return pos - (e - s) + repl.size();
                return std::min(pos - s, repl.size()) + s;
            };
            for (MarkupSpan& span : spans) {
                span.start = remap(span.start);
                span.end = remap(span.end);
            }
            changed = true;
        }
        if (!changed)
            continue;
        std::string new_plain;
        for (char32_t cp : cps)
            new_plain += utf8::encode(cp);
        fixed.lines[li] = reinsert_markup(new_plain, spans);
    }
    return fixed;
}

FixResult fix_by_category(const SubtitleDocument& doc, ErrorCategory category,
                          const std::function<Findings(const Cue&, std::size_t)>& detect)
{
    FixResult result;
    result.doc = doc;
    for (std::size_t ci = 0; ci < result.doc.cues.size(); ++ci) {
        const std::string before = result.doc.cues[ci].raw();
        // Iterate to a fixpoint; one pass can expose a follow-up instance.
        for (int pass = 0; pass < 8; ++pass) {
            const Findings findings = detect(result.doc.cues[ci], ci);
            if (findings.empty())
                break;
            result.doc.cues[ci] = apply_suggestions(result.doc.cues[ci], findings);
        }
        const std::string after = result.doc.cues[ci].raw();
        if (after != before)
            result.edits.push_back({ci, category, before, after});
    }
    return result;
}

} // namespace

FixResult fix_spacing(const SubtitleDocument& doc, const GuidelineProfile& profile)
{
    return fix_by_category(doc, ErrorCategory::IncorrectSpacing,
                           [&](const Cue& cue, std::size_t ci) { return check_spacing(cue, ci, profile); });
}

FixResult collapse_repetitions(const SubtitleDocument& doc)
{
    return fix_by_category(doc, ErrorCategory::RepeatedPhrase,
                           [](const Cue& cue, std::size_t ci) { return detect_repetitions(cue, ci); });
}

MarkupFixOutcome reinsert_source_markup(const AlignedCuePair& pair, const SubtitleDocument& source,
                                        const SubtitleDocument& target)
{
    if (!pair.one_to_one())
        throw std::invalid_argument("reinsert_source_markup requires a 1-to-1 pair");
    const Cue& src = source.cues[pair.source_indices.front()];
    MarkupFixOutcome outcome;
    outcome.cue = target.cues[pair.target_indices.front()];

    // Collect source tags; only tags wrapping a whole source line transfer.
    struct FullTag {
        MarkupKind kind;
        std::string open_text;
        std::string close_text;
    };
    std::vector<FullTag> full_tags;
    for (const std::string& line : src.lines) {
        const StrippedLine stripped = strip_markup(line);
        const std::size_t len = utf8::scalar_count(stripped.plain);
        for (const MarkupSpan& span : stripped.spans) {
            if (span.start == 0 && span.end == len && !span.close_text.empty()) {
                full_tags.push_back({span.kind, span.open_text, span.close_text});
            } else {
                outcome.partial_span_flagged = true;
            }
        }
    }
    if (full_tags.empty() || outcome.partial_span_flagged)
        return outcome;

    const auto target_kinds = [&] {
        std::vector<MarkupKind> kinds;
        for (const std::string& line : outcome.cue.lines)
            for (const MarkupSpan& span : strip_markup(line).spans)
                kinds.push_back(span.kind);
        return kinds;
    }();

    const std::string before = outcome.cue.raw();
    for (const FullTag& tag : full_tags) {
        if (std::find(target_kinds.begin(), target_kinds.end(), tag.kind) != target_kinds.end())
            continue;
        outcome.cue.lines.front() = tag.open_text + outcome.cue.lines.front();
        outcome.cue.lines.back() += tag.close_text;
    }
    const std::string after = outcome.cue.raw();
    if (after != before)
        outcome.edits.push_back({pair.target_indices.front(), ErrorCategory::NonTextCharacter, before, after});
    return outcome;
}

UnitSuggestion unit_conversion(double value, const UnitRule& rule)
{
    UnitSuggestion s;
    s.exact = value * rule.factor;
    const double step = s.exact < 1000.0 ? 10.0 : 100.0;
    s.display = std::floor(s.exact / step + 0.5) * step;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.0f %s", s.display, rule.target_unit.c_str());
    s.text = buf;
    return s;
}

std::string suggest_unit_conversion(double value, const UnitRule& rule)
{
    return unit_conversion(value, rule).text;
}

SubtitleDocument replay_edits(const SubtitleDocument& original, const std::vector<Edit>& edits)
{
    SubtitleDocument doc = original;
    for (const Edit& edit : edits) {
        if (edit.cue_index >= doc.cues.size())
            throw std::out_of_range("edit cue index out of range");
        Cue& cue = doc.cues[edit.cue_index];
        if (cue.raw() != edit.before)
            throw std::runtime_error("edit 'before' text does not match document");
        cue.lines = split_payload(edit.after);
    }
    return doc;
}

} // namespace subqa
