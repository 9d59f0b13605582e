#include "subqa/guideline_checks.hpp"

#include "subqa/langid.hpp"
#include "subqa/tokenize.hpp"
#include "subqa/utf8.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

namespace subqa {
namespace {

std::string format_cps(double cps)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f", cps);
    return buf;
}

bool is_upper_letter(char32_t cp)
{
    return utf8::is_letter(cp) && utf8::fold(cp) != cp;
}

bool is_lower_letter(char32_t cp)
{
    return utf8::is_letter(cp) && utf8::fold(cp) == cp;
}

} // namespace

CuePlain plain_of(const Cue& cue)
{
    CuePlain out;
    for (std::size_t i = 0; i < cue.lines.size(); ++i) {
        StrippedLine stripped = strip_markup(cue.lines[i]);
        if (i) {
            out.joined.push_back('\n');
        }
        out.line_offset.push_back(utf8::scalar_count(out.joined));
        out.joined += stripped.plain;
        out.line_plain.push_back(std::move(stripped.plain));
        out.line_spans.push_back(std::move(stripped.spans));
    }
    return out;
}

Findings check_line_length(const Cue& cue, std::size_t cue_index, const GuidelineProfile& profile)
{
    Findings findings;
    const CuePlain plain = plain_of(cue);
    for (std::size_t i = 0; i < plain.line_plain.size(); ++i) {
        const std::size_t len = utf8::scalar_count(plain.line_plain[i]);
        if (len <= profile.max_chars_per_line)
            continue;
        Finding f;
        f.category = ErrorCategory::LineTooLong;
        f.severity = Severity::Error;
        f.cue_index = cue_index;
        f.span = Span{plain.line_offset[i] + profile.max_chars_per_line, plain.line_offset[i] + len};
        f.message = "line is " + std::to_string(len) + " characters, limit " +
                    std::to_string(profile.max_chars_per_line);
        findings.push_back(std::move(f));
    }
    return findings;
}

Findings check_line_count(const Cue& cue, std::size_t cue_index, const GuidelineProfile& profile)
{
    Findings findings;
    if (cue.lines.size() > profile.max_lines_per_block) {
        Finding f;
        f.category = ErrorCategory::TooManyLines;
        f.severity = Severity::Error;
        f.cue_index = cue_index;
        f.message = "cue has " + std::to_string(cue.lines.size()) + " lines, limit " +
                    std::to_string(profile.max_lines_per_block);
        findings.push_back(std::move(f));
    }
    return findings;
}

Findings check_reading_speed(const Cue& cue, std::size_t cue_index, const GuidelineProfile& profile)
{
    Findings findings;
    const CuePlain plain = plain_of(cue);
    std::size_t chars = 0;
    for (const std::string& line : plain.line_plain)
        chars += utf8::scalar_count(line);
    if (chars == 0)
        return findings;
    const double seconds = cue.duration_seconds();
    if (seconds <= 0.0) {
        Finding f;
        f.category = ErrorCategory::ReadingSpeedExceeded;
        f.severity = Severity::Warning;
        f.cue_index = cue_index;
        f.message = "cue has zero duration, reading speed unmeasurable";
        findings.push_back(std::move(f));
        return findings;
    }
    const double cps = static_cast<double>(chars) / seconds;
    if (cps > profile.max_reading_speed) {
        Finding f;
        f.category = ErrorCategory::ReadingSpeedExceeded;
        f.severity = Severity::Warning;
        f.cue_index = cue_index;
        f.message = "reading speed " + format_cps(cps) + " chars/sec exceeds limit " +
                    format_cps(profile.max_reading_speed);
        findings.push_back(std::move(f));
    }
    return findings;
}

Findings check_spacing(const Cue& cue, std::size_t cue_index, const GuidelineProfile& profile)
{
    Findings findings;
    const CuePlain plain = plain_of(cue);
    const auto add = [&](std::size_t start, std::size_t end, std::string suggestion, std::string message) {
        // Skip candidates overlapping an already recorded span.
        for (const Finding& f : findings)
            if (f.span && start < f.span->end && f.span->start < end)
                return;
        Finding f;
        f.category = ErrorCategory::IncorrectSpacing;
        f.severity = Severity::Error;
        f.cue_index = cue_index;
        f.span = Span{start, end};
        f.suggestion = std::move(suggestion);
        f.message = std::move(message);
        findings.push_back(std::move(f));
    };

    for (std::size_t li = 0; li < plain.line_plain.size(); ++li) {
        const std::vector<char32_t> cps = utf8::decode_all(plain.line_plain[li]);
        const std::size_t base = plain.line_offset[li];

        if (profile.hyphen_spacing == SpacingConvention::Attached) {
            for (std::size_t i = 0; i < cps.size(); ++i) {
                if (cps[i] != '-')
                    continue;
                const bool at_start = i == 0;
                const bool after_space = i > 0 && cps[i - 1] == ' ';
                if (!at_start && !after_space)
                    continue;
                if (i + 1 >= cps.size() || cps[i + 1] != ' ')
                    continue;
                // Mid-line hyphens only count as speaker changes before a capital.
                if (!at_start && (i + 2 >= cps.size() || !is_upper_letter(cps[i + 2])))
                    continue;
                add(base + i, base + i + 2, "-", "space after speaker hyphen");
            }
        }

        for (const std::string& form : profile.ellipsis_forms) {
            const std::vector<char32_t> fc = utf8::decode_all(form);
            for (std::size_t i = 0; i + fc.size() <= cps.size(); ++i) {
                if (!std::equal(fc.begin(), fc.end(), cps.begin() + static_cast<std::ptrdiff_t>(i)))
                    continue;
                // Skip matches inside a longer dot run.
                if ((i > 0 && cps[i - 1] == '.') || (i + fc.size() < cps.size() && cps[i + fc.size()] == '.'))
                    continue;
                const std::size_t after = i + fc.size();
                if (profile.ellipsis_spacing == SpacingConvention::Attached) {
                    if (after + 1 < cps.size() && cps[after] == ' ' && is_lower_letter(cps[after + 1]))
                        add(base + i, base + after + 1, form, "space after ellipsis");
                } else {
                    if (after < cps.size() && is_lower_letter(cps[after]))
                        add(base + i, base + after, form + " ", "missing space after ellipsis");
                }
            }
        }

        for (std::size_t i = 0; i < cps.size();) {
            if (cps[i] == ' ') {
                std::size_t j = i;
                while (j < cps.size() && cps[j] == ' ')
                    ++j;
                if (j - i >= 2)
                    add(base + i, base + j, " ", "multiple consecutive spaces");
                i = j;
            } else {
                ++i;
            }
        }
    }

    std::sort(findings.begin(), findings.end(),
              [](const Finding& a, const Finding& b) { return a.span->start < b.span->start; });
    return findings;
}

Findings detect_repetitions(const Cue& cue, std::size_t cue_index)
{
    Findings findings;
    const CuePlain plain = plain_of(cue);
    const std::vector<Token> tokens = tokenize(plain.joined);
    if (tokens.size() < 2)
        return findings;
    const std::vector<char32_t> cps = utf8::decode_all(plain.joined);

    // gap_ok[i]: between token i and i+1 only spaces and commas. Line breaks
    // end a run, so fixes never merge lines.
    std::vector<bool> gap_ok(tokens.size(), false);
    for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
        bool ok = true;
        for (std::size_t p = tokens[i].end; p < tokens[i + 1].start; ++p)
            if (cps[p] != ' ' && cps[p] != ',')
                ok = false;
        gap_ok[i] = ok;
    }

    std::vector<bool> used(tokens.size(), false);
    for (std::size_t k = 1; k <= 4; ++k) {
        for (std::size_t i = 0; i + 2 * k <= tokens.size(); ++i) {
            const auto group_equal = [&](std::size_t a, std::size_t b) {
                for (std::size_t d = 0; d < k; ++d)
                    if (tokens[a + d].core_folded != tokens[b + d].core_folded)
                        return false;
                return true;
            };
            const auto gaps_valid = [&](std::size_t from, std::size_t to) {
                for (std::size_t p = from; p < to; ++p)
                    if (!gap_ok[p])
                        return false;
                return true;
            };
            std::size_t repeats = 1;
            while (i + (repeats + 1) * k <= tokens.size() && group_equal(i, i + repeats * k) &&
                   gaps_valid(i + repeats * k - 1, i + repeats * k + k - 1))
                ++repeats;
            if (repeats < 2 || !gaps_valid(i, i + k - 1))
                continue;
            const std::size_t last = i + repeats * k - 1;
            bool overlap = false;
            for (std::size_t t = i; t <= last; ++t)
                if (used[t])
                    overlap = true;
            if (overlap)
                continue;
            for (std::size_t t = i; t <= last; ++t)
                used[t] = true;

            // Terminal punctuation directly after the run's last token.
            std::size_t punct_end = tokens[last].end;
            while (punct_end < cps.size() && cps[punct_end] != ' ' && cps[punct_end] != '\n' &&
                   !utf8::is_letter(cps[punct_end]) && !utf8::is_ascii_digit(cps[punct_end]))
                ++punct_end;
            std::string punct;
            for (std::size_t p = tokens[last].end; p < punct_end; ++p)
                punct += utf8::encode(cps[p]);

            std::string first_group;
            for (std::size_t p = tokens[i].start; p < tokens[i + k - 1].end; ++p)
                first_group += utf8::encode(cps[p]);

            Finding f;
            f.category = ErrorCategory::RepeatedPhrase;
            f.severity = Severity::Warning;
            f.cue_index = cue_index;
            f.span = Span{tokens[i].start, punct_end};
            f.suggestion = first_group + punct;
            f.message = "phrase repeated " + std::to_string(repeats) + " times";
            findings.push_back(std::move(f));
            i = last;
        }
    }

    std::sort(findings.begin(), findings.end(),
              [](const Finding& a, const Finding& b) { return a.span->start < b.span->start; });
    return findings;
}

Findings check_compound_length(const Cue& cue, std::size_t cue_index, const LexiconSet& lexicons)
{
    Findings findings;
    const CuePlain plain = plain_of(cue);
    for (const Token& tok : tokenize(plain.joined)) {
        if (tok.has_digit)
            continue;
        if (tok.end - tok.start < 18)
            continue;
        if (lexicons.in_wordlist(tok.core_folded) || lexicons.allowlist.count(tok.core_folded))
            continue;
        Finding f;
        f.category = ErrorCategory::CompoundWordOOV;
        f.severity = Severity::Warning;
        f.cue_index = cue_index;
        f.span = Span{tok.start, tok.end};
        f.message = "long compound '" + tok.core + "' (" + std::to_string(tok.end - tok.start) +
                    " chars) not in wordlist";
        findings.push_back(std::move(f));
    }
    return findings;
}

Findings check_markup_integrity(const AlignedCuePair& pair, const SubtitleDocument& source,
                                const SubtitleDocument& target)
{
    Findings findings;
    if (!pair.one_to_one())
        return findings;
    const Cue& src = source.cues[pair.source_indices.front()];
    const Cue& tgt = target.cues[pair.target_indices.front()];
    const std::size_t cue_index = pair.target_indices.front();

    const auto kinds_of = [](const Cue& cue) {
        std::set<std::string> kinds;
        for (const std::string& line : cue.lines)
            for (const MarkupSpan& span : strip_markup(line).spans) {
                switch (span.kind) {
                case MarkupKind::Italic:
                    kinds.insert("italic");
                    break;
                case MarkupKind::Bold:
                    kinds.insert("bold");
                    break;
                case MarkupKind::Underline:
                    kinds.insert("underline");
                    break;
                case MarkupKind::OtherTag:
                    kinds.insert("tag <" + span.tag_name + ">");
                    break;
                }
            }
        return kinds;
    };
    const auto hyphen_lines = [](const Cue& cue) {
        std::size_t n = 0;
        for (const std::string& line : cue.lines) {
            const std::string plain = strip_markup(line).plain;
            if (!plain.empty() && plain[0] == '-')
                ++n;
        }
        return n;
    };

    for (const std::string& kind : kinds_of(src)) {
        if (kinds_of(tgt).count(kind))
            continue;
        Finding f;
        f.category = ErrorCategory::NonTextCharacter;
        f.severity = Severity::Error;
        f.cue_index = cue_index;
        f.message = "missing " + kind + " present in source";
        findings.push_back(std::move(f));
    }
    if (src.lines.size() != tgt.lines.size()) {
        Finding f;
        f.category = ErrorCategory::NonTextCharacter;
        f.severity = Severity::Error;
        f.cue_index = cue_index;
        f.message = "line-break count " + std::to_string(src.lines.size() - 1) + "→" +
                    std::to_string(tgt.lines.size() - 1);
        findings.push_back(std::move(f));
    }
    if (const auto sh = hyphen_lines(src), th = hyphen_lines(tgt); sh != th) {
        Finding f;
        f.category = ErrorCategory::NonTextCharacter;
        f.severity = Severity::Error;
        f.cue_index = cue_index;
        f.message = "speaker-hyphen count " + std::to_string(sh) + "→" + std::to_string(th);
        findings.push_back(std::move(f));
    }
    return findings;
}

Findings detect_mixed_language(const SubtitleDocument& doc, const std::string& primary_lang)
{
    Findings findings;
    const std::string primary = primary_lang.substr(0, 2);
    for (std::size_t ci = 0; ci < doc.cues.size(); ++ci) {
        const CuePlain plain = plain_of(doc.cues[ci]);
        const auto hits = language_hits(plain.joined);
        const std::size_t primary_hits = hits.count(primary) ? hits.at(primary) : 0;
        std::string best_lang;
        std::size_t best_hits = 0;
        for (const auto& [lang, n] : hits) {
            if (lang == primary)
                continue;
            if (n >= 2 && n >= 2 * primary_hits && n > best_hits) {
                best_lang = lang;
                best_hits = n;
            }
        }
        if (best_lang.empty())
            continue;
        Finding f;
        f.category = ErrorCategory::MixedLanguage;
        f.severity = Severity::Info;
        f.cue_index = ci;
        f.message = "cue looks like '" + best_lang + "' (" + std::to_string(best_hits) +
                    " hits vs " + std::to_string(primary_hits) + " for '" + primary + "')";
        findings.push_back(std::move(f));
    }
    return findings;
}

} // namespace subqa
