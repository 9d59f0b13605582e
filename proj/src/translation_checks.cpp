#include "subqa/translation_checks.hpp"

#include "subqa/fixers.hpp"
#include "subqa/guideline_checks.hpp"
#include "subqa/tokenize.hpp"
#include "subqa/utf8.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <set>
#include <unordered_set>

namespace subqa {
namespace {

// Word-boundary occurrence of a (folded) phrase in a (folded) text.
bool term_occurs(const std::string& folded_text, const std::string& folded_term)
{
    if (folded_term.empty())
        return false;
    std::size_t pos = 0;
    while ((pos = folded_text.find(folded_term, pos)) != std::string::npos) {
        const bool left_ok = pos == 0 || !(std::isalnum(static_cast<unsigned char>(folded_text[pos - 1])) ||
                                           static_cast<unsigned char>(folded_text[pos - 1]) >= 0x80);
        const std::size_t after = pos + folded_term.size();
        const bool right_ok = after >= folded_text.size() ||
                              !(std::isalnum(static_cast<unsigned char>(folded_text[after])) ||
                                static_cast<unsigned char>(folded_text[after]) >= 0x80);
        if (left_ok && right_ok)
            return true;
        pos += 1;
    }
    return false;
}

std::string folded_plain(const Cue& cue)
{
    return utf8::fold_string(plain_of(cue).joined);
}

std::size_t levenshtein(const std::string& a, const std::string& b)
{
    const auto ca = utf8::decode_all(a);
    const auto cb = utf8::decode_all(b);
    std::vector<std::size_t> prev(cb.size() + 1), cur(cb.size() + 1);
    for (std::size_t j = 0; j <= cb.size(); ++j)
        prev[j] = j;
    for (std::size_t i = 1; i <= ca.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= cb.size(); ++j) {
            const std::size_t sub = prev[j - 1] + (ca[i - 1] == cb[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[cb.size()];
}

std::unordered_set<std::string> glossary_tokens(const LexiconSet& lexicons)
{
    std::unordered_set<std::string> out;
    for (const auto& [key, value] : lexicons.knp_glossary) {
        for (const Token& t : tokenize(key))
            out.insert(t.core_folded);
        if (value != kKeepVerbatim)
            for (const Token& t : tokenize(utf8::fold_string(value)))
                out.insert(t.core_folded);
    }
    return out;
}

bool sentence_initial(const std::vector<char32_t>& cps, std::size_t token_start)
{
    for (std::size_t p = token_start; p > 0;) {
        --p;
        const char32_t c = cps[p];
        if (c == ' ' || c == '\n' || c == '"' || c == 0x201C || c == 0x201E || c == '-')
            continue;
        return c == '.' || c == '!' || c == '?' || c == 0x2026;
    }
    return true;
}

int max_profanity(const std::string& folded_text,
                  const std::unordered_map<std::string, int>& table)
{
    int level = 0;
    for (const auto& [term, severity] : table)
        if (severity > level && term_occurs(folded_text, term))
            level = severity;
    return level;
}

struct NumberContext {
    std::vector<Token> tokens;
    std::vector<NumberOccurrence> numbers;
};

NumberContext numbers_of(const Cue& cue, const NumberLocale& locale)
{
    NumberContext ctx;
    ctx.tokens = tokenize(plain_of(cue).joined);
    ctx.numbers = extract_numbers(ctx.tokens, locale);
    return ctx;
}

const UnitRule* imperial_rule_for(const LexiconSet& lexicons, const std::string& folded_word)
{
    for (const UnitRule& rule : lexicons.units) {
        if (rule.system != UnitSystem::Imperial)
            continue;
        if (rule.source_unit == folded_word || rule.source_aliases.count(folded_word))
            return &rule;
    }
    return nullptr;
}

// The three suppression routes for a source value: verbatim/locale-equal
// target number, or a unit-converted match within the relative tolerance.
bool number_accounted_for(double value, const std::vector<NumberOccurrence>& target_numbers,
                          const LexiconSet& lexicons)
{
    for (const NumberOccurrence& t : target_numbers) {
        if (std::abs(t.value - value) < 1e-9)
            return true;
        for (const UnitRule& rule : lexicons.units) {
            const double converted = value * rule.factor;
            if (converted > 0 && std::abs(t.value - converted) / converted <= kUnitTolerance)
                return true;
        }
    }
    return false;
}

} // namespace

Findings detect_not_translated(const PairContext& ctx, const LexiconSet& lexicons,
                               const std::string& target_lang)
{
    Findings findings;
    if (!ctx.pair.one_to_one() || lexicons.target_wordlist.empty())
        return findings;
    const Cue& src = ctx.source.cues[ctx.pair.source_indices.front()];
    const Cue& tgt = ctx.target.cues[ctx.pair.target_indices.front()];
    const std::size_t cue_index = ctx.pair.target_indices.front();

    std::unordered_set<std::string> source_tokens;
    for (const Token& t : tokenize(plain_of(src).joined))
        source_tokens.insert(t.core_folded);
    const auto glossary = glossary_tokens(lexicons);

    const CuePlain tgt_plain = plain_of(tgt);
    const std::vector<char32_t> cps = utf8::decode_all(tgt_plain.joined);
    const bool capitalizes_nouns = target_lang.substr(0, 2) == "de";

    for (const Token& tok : tokenize(tgt_plain.joined)) {
        if (tok.has_digit || tok.end - tok.start < 2)
            continue;
        if (!source_tokens.count(tok.core_folded))
            continue;
        if (lexicons.in_wordlist(tok.core_folded) || lexicons.allowlist.count(tok.core_folded))
            continue;
        if (glossary.count(tok.core_folded))
            continue;
        if (!capitalizes_nouns) {
            // Mid-sentence capitalization reads as a proper noun.
            const char32_t first = cps[tok.start];
            if (utf8::is_letter(first) && utf8::fold(first) != first &&
                !sentence_initial(cps, tok.start))
                continue;
        }
        Finding f;
        f.category = ErrorCategory::NotTranslated;
        f.severity = Severity::Error;
        f.cue_index = cue_index;
        f.span = Span{tok.start, tok.end};
        f.message = "'" + tok.core + "' appears untranslated from the source";
        findings.push_back(std::move(f));
    }
    return findings;
}

Findings check_spelling(const Cue& cue, std::size_t cue_index, const LexiconSet& lexicons)
{
    Findings findings;
    if (lexicons.target_wordlist.empty())
        return findings;
    std::unordered_set<std::string> glossary_targets;
    for (const auto& [key, value] : lexicons.knp_glossary)
        for (const Token& t : tokenize(value == kKeepVerbatim ? key : utf8::fold_string(value)))
            glossary_targets.insert(t.core_folded);

    for (const Token& tok : tokenize(plain_of(cue).joined)) {
        if (tok.has_digit || tok.end - tok.start < 2)
            continue;
        if (lexicons.in_wordlist(tok.core_folded) || lexicons.allowlist.count(tok.core_folded) ||
            glossary_targets.count(tok.core_folded))
            continue;
        Finding f;
        f.category = ErrorCategory::Misspelling;
        f.severity = Severity::Error;
        f.cue_index = cue_index;
        f.span = Span{tok.start, tok.end};
        f.message = "'" + tok.core + "' not found in wordlist";
        findings.push_back(std::move(f));
    }
    return findings;
}

Findings check_glossary(const PairContext& ctx, const LexiconSet& lexicons)
{
    Findings findings;
    if (!ctx.pair.one_to_one() || lexicons.knp_glossary.empty())
        return findings;
    const std::string src = folded_plain(ctx.source.cues[ctx.pair.source_indices.front()]);
    const std::string tgt = folded_plain(ctx.target.cues[ctx.pair.target_indices.front()]);
    for (const auto& [key, value] : lexicons.knp_glossary) {
        if (!term_occurs(src, key))
            continue;
        const std::string required = (value == kKeepVerbatim) ? key : utf8::fold_string(value);
        if (term_occurs(tgt, required))
            continue;
        Finding f;
        f.category = ErrorCategory::GlossaryViolation;
        f.severity = Severity::Error;
        f.cue_index = ctx.pair.target_indices.front();
        f.message = "glossary term '" + key + "' must render as '" +
                    (value == kKeepVerbatim ? key : value) + "'";
        findings.push_back(std::move(f));
    }
    return findings;
}

Findings check_lexical_consistency(const std::vector<AlignedCuePair>& alignment,
                                   const SubtitleDocument& source, const SubtitleDocument& target,
                                   const LexiconSet& lexicons)
{
    Findings findings;
    if (lexicons.knp_glossary.empty())
        return findings;
    // term -> rendering -> cue indices where that rendering was used
    std::map<std::string, std::map<std::string, std::vector<std::size_t>>> usage;
    for (const AlignedCuePair& pair : alignment) {
        if (!pair.one_to_one())
            continue;
        const std::string src = folded_plain(source.cues[pair.source_indices.front()]);
        const Cue& tgt_cue = target.cues[pair.target_indices.front()];
        const std::string tgt = folded_plain(tgt_cue);
        for (const auto& [key, value] : lexicons.knp_glossary) {
            if (!term_occurs(src, key))
                continue;
            const std::string anchor = (value == kKeepVerbatim) ? key : utf8::fold_string(value);
            std::string rendering;
            if (term_occurs(tgt, anchor)) {
                rendering = anchor;
            } else {
                // Closest target token stands in for the rendering actually used.
                std::size_t best = SIZE_MAX;
                for (const Token& tok : tokenize(tgt)) {
                    if (tok.has_digit || tok.end - tok.start < 3)
                        continue;
                    const std::size_t d = levenshtein(tok.core_folded, anchor);
                    if (d < best) {
                        best = d;
                        rendering = tok.core_folded;
                    }
                }
                if (rendering.empty())
                    continue;
            }
            usage[key][rendering].push_back(pair.target_indices.front());
        }
    }
    for (const auto& [term, renderings] : usage) {
        if (renderings.size() < 2)
            continue;
        std::string detail;
        std::size_t first_cue = SIZE_MAX;
        for (const auto& [rendering, cues] : renderings) {
            if (!detail.empty())
                detail += ", ";
            detail += "'" + rendering + "' (cue " + std::to_string(cues.front()) + ")";
            first_cue = std::min(first_cue, cues.front());
        }
        Finding f;
        f.category = ErrorCategory::LexicalInconsistency;
        f.severity = Severity::Info;
        f.cue_index = first_cue;
        f.message = "term '" + term + "' rendered inconsistently: " + detail;
        findings.push_back(std::move(f));
    }
    return findings;
}

Findings check_profanity(const PairContext& ctx, const LexiconSet& lexicons,
                         const std::string& source_lang, const std::string& target_lang,
                         int tolerance)
{
    Findings findings;
    if (!ctx.pair.one_to_one())
        return findings;
    const auto src_table = lexicons.profanity.find(source_lang);
    const auto tgt_table = lexicons.profanity.find(target_lang);
    if (src_table == lexicons.profanity.end() || tgt_table == lexicons.profanity.end())
        return findings;
    const int src_level = max_profanity(folded_plain(ctx.source.cues[ctx.pair.source_indices.front()]),
                                        src_table->second);
    const int tgt_level = max_profanity(folded_plain(ctx.target.cues[ctx.pair.target_indices.front()]),
                                        tgt_table->second);
    if (std::abs(src_level - tgt_level) > tolerance) {
        Finding f;
        f.category = ErrorCategory::ProfanityMismatch;
        f.severity = Severity::Warning;
        f.cue_index = ctx.pair.target_indices.front();
        f.message = "profanity level " + std::to_string(src_level) + " in source vs " +
                    std::to_string(tgt_level) + " in target";
        findings.push_back(std::move(f));
    }
    return findings;
}

Findings check_numbers_units(const PairContext& ctx, const LexiconSet& lexicons)
{
    Findings findings;
    if (!ctx.pair.one_to_one())
        return findings;
    const Cue& src_cue = ctx.source.cues[ctx.pair.source_indices.front()];
    const Cue& tgt_cue = ctx.target.cues[ctx.pair.target_indices.front()];
    const std::size_t cue_index = ctx.pair.target_indices.front();
    const NumberContext src = numbers_of(src_cue, lexicons.source_number);
    const NumberContext tgt = numbers_of(tgt_cue, lexicons.target_number);

    for (const NumberOccurrence& sn : src.numbers) {
        const std::size_t unit_tok = sn.token_index + 1;
        if (unit_tok >= src.tokens.size())
            continue;
        const UnitRule* rule = imperial_rule_for(lexicons, src.tokens[unit_tok].core_folded);
        if (!rule)
            continue;
        // Imperial quantity in the source; the target must not keep the unit.
        for (const NumberOccurrence& tn : tgt.numbers) {
            const std::size_t t_unit = tn.token_index + 1;
            if (t_unit >= tgt.tokens.size())
                continue;
            if (!imperial_rule_for(lexicons, tgt.tokens[t_unit].core_folded))
                continue;
            Finding f;
            f.category = ErrorCategory::FormatError;
            f.severity = Severity::Error;
            f.cue_index = cue_index;
            f.span = Span{tn.start, tgt.tokens[t_unit].end};
            f.suggestion = suggest_unit_conversion(sn.value, *rule);
            f.message = "imperial unit retained: '" + tn.raw + " " + tgt.tokens[t_unit].core + "'";
            findings.push_back(std::move(f));
            break;
        }
    }

    for (const NumberOccurrence& sn : src.numbers) {
        if (number_accounted_for(sn.value, tgt.numbers, lexicons))
            continue;
        Finding f;
        f.category = ErrorCategory::FormatError;
        f.severity = Severity::Error;
        f.cue_index = cue_index;
        f.message = "source number '" + sn.raw + "' has no counterpart in target";
        findings.push_back(std::move(f));
    }
    return findings;
}

Findings check_addition_omission(const PairContext& ctx, const LexiconSet& lexicons,
                                 double expansion)
{
    Findings findings;
    if (!ctx.pair.one_to_one() || expansion <= 0)
        return findings;
    const Cue& src_cue = ctx.source.cues[ctx.pair.source_indices.front()];
    const Cue& tgt_cue = ctx.target.cues[ctx.pair.target_indices.front()];
    const std::size_t cue_index = ctx.pair.target_indices.front();
    const CuePlain src_plain = plain_of(src_cue);
    const CuePlain tgt_plain = plain_of(tgt_cue);

    std::size_t src_len = 0, tgt_len = 0;
    for (const std::string& l : src_plain.line_plain)
        src_len += utf8::scalar_count(l);
    for (const std::string& l : tgt_plain.line_plain)
        tgt_len += utf8::scalar_count(l);
    if (src_len > 0) {
        const double ratio = static_cast<double>(tgt_len) / (static_cast<double>(src_len) * expansion);
        if (ratio < 0.5 || ratio > 2.0) {
            Finding f;
            f.category = ErrorCategory::AdditionOmission;
            f.severity = Severity::Warning;
            f.cue_index = cue_index;
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.2f", ratio);
            f.message = std::string("target/source length ratio ") + buf + " outside [0.5, 2.0]";
            findings.push_back(std::move(f));
        }
    }

    const std::string tgt_folded = utf8::fold_string(tgt_plain.joined);
    const std::vector<Token> src_tokens = tokenize(src_plain.joined);
    const auto tgt_numbers = extract_numbers(tokenize(tgt_plain.joined), lexicons.target_number);
    for (const NumberOccurrence& sn : extract_numbers(src_tokens, lexicons.source_number)) {
        if (number_accounted_for(sn.value, tgt_numbers, lexicons))
            continue;
        Finding f;
        f.category = ErrorCategory::AdditionOmission;
        f.severity = Severity::Warning;
        f.cue_index = cue_index;
        f.message = "number '" + sn.raw + "' from source is missing in target";
        findings.push_back(std::move(f));
    }
    for (const Token& tok : src_tokens) {
        if (!tok.all_caps || tok.has_digit || tok.end - tok.start < 3)
            continue;
        if (term_occurs(tgt_folded, tok.core_folded))
            continue;
        Finding f;
        f.category = ErrorCategory::AdditionOmission;
        f.severity = Severity::Warning;
        f.cue_index = cue_index;
        f.message = "token '" + tok.core + "' from source is missing in target";
        findings.push_back(std::move(f));
    }
    return findings;
}

Findings check_register(const SubtitleDocument& doc, const std::string& language, std::size_t window)
{
    Findings findings;
    const auto rules = builtin_register_rules(language);
    if (!rules)
        return findings;

    enum class Marker { None, Informal, Formal };
    Marker prev = Marker::None;
    std::size_t prev_idx = 0;

    for (std::size_t ci = 0; ci < doc.cues.size(); ++ci) {
        const CuePlain plain = plain_of(doc.cues[ci]);
        const std::vector<char32_t> cps = utf8::decode_all(plain.joined);
        bool informal = false, formal = false;
        for (const Token& tok : tokenize(plain.joined)) {
            if (rules->informal.count(tok.core_folded))
                informal = true;
            if (rules->formal.count(tok.core_folded)) {
                // Formal markers are capitalized; sentence-initial ones are
                // ambiguous with third person and are ignored.
                const char32_t first = cps[tok.start];
                if (utf8::is_letter(first) && utf8::fold(first) != first &&
                    !sentence_initial(cps, tok.start))
                    formal = true;
            }
        }
        const auto report = [&](std::size_t a, std::size_t b) {
            Finding f;
            f.category = ErrorCategory::RegisterInconsistency;
            f.severity = Severity::Info;
            f.cue_index = b;
            f.message = "formal and informal address mixed (cues " + std::to_string(a) + " and " +
                        std::to_string(b) + ")";
            findings.push_back(std::move(f));
        };
        if (informal && formal) {
            report(ci, ci);
        } else if (informal || formal) {
            const Marker current = informal ? Marker::Informal : Marker::Formal;
            if (prev != Marker::None && prev != current && ci - prev_idx <= window)
                report(prev_idx, ci);
            prev = current;
            prev_idx = ci;
        }
    }
    return findings;
}

Findings detect_stammering(const PairContext& ctx)
{
    Findings findings;
    if (!ctx.pair.one_to_one())
        return findings;
    static const std::regex stammer("([A-Za-z])((\\.\\.\\.|…|-)\\1)+",
                                    std::regex::ECMAScript | std::regex::icase);
    const std::string src = plain_of(ctx.source.cues[ctx.pair.source_indices.front()]).joined;
    const std::string tgt = plain_of(ctx.target.cues[ctx.pair.target_indices.front()]).joined;

    const auto has_stammer = [&](const std::string& text) {
        for (auto it = std::sregex_iterator(text.begin(), text.end(), stammer);
             it != std::sregex_iterator(); ++it) {
            const std::size_t end = static_cast<std::size_t>(it->position() + it->length());
            std::size_t byte = end;
            if (byte < text.size()) {
                std::size_t probe = byte;
                if (utf8::is_letter(utf8::decode(text, probe)))
                    return true;
            }
        }
        return false;
    };

    if (has_stammer(src) && !has_stammer(tgt) && tgt.find('[') == std::string::npos) {
        Finding f;
        f.category = ErrorCategory::Stammering;
        f.severity = Severity::Info;
        f.cue_index = ctx.pair.target_indices.front();
        f.message = "source stammering not reflected in target";
        findings.push_back(std::move(f));
    }
    return findings;
}

} // namespace subqa
