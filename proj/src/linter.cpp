#include "subqa/linter.hpp"

#include "subqa/alignment.hpp"
#include "subqa/guideline_checks.hpp"
#include "subqa/translation_checks.hpp"

#include <algorithm>

namespace subqa {
namespace {

void append(Findings& into, Findings more)
{
    into.insert(into.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

} // namespace

void sort_findings(Findings& findings)
{
    std::stable_sort(findings.begin(), findings.end(), [](const Finding& a, const Finding& b) {
        if (a.cue_index != b.cue_index)
            return a.cue_index < b.cue_index;
        const std::size_t as = a.span ? a.span->start : 0;
        const std::size_t bs = b.span ? b.span->start : 0;
        if (as != bs)
            return as < bs;
        return a.category < b.category;
    });
}

bool has_errors(const Findings& findings)
{
    return std::any_of(findings.begin(), findings.end(),
                       [](const Finding& f) { return f.severity == Severity::Error; });
}

Findings lint_document(const SubtitleDocument& doc, const LintOptions& options)
{
    Findings findings;
    for (std::size_t ci = 0; ci < doc.cues.size(); ++ci) {
        const Cue& cue = doc.cues[ci];
        append(findings, check_line_length(cue, ci, options.profile));
        append(findings, check_line_count(cue, ci, options.profile));
        append(findings, check_reading_speed(cue, ci, options.profile));
        append(findings, check_spacing(cue, ci, options.profile));
        append(findings, detect_repetitions(cue, ci));
        if (options.lexicons) {
            append(findings, check_compound_length(cue, ci, *options.lexicons));
            append(findings, check_spelling(cue, ci, *options.lexicons));
        }
    }
    if (!options.target_lang.empty()) {
        append(findings, detect_mixed_language(doc, options.target_lang));
        append(findings, check_register(doc, options.target_lang));
    }
    sort_findings(findings);
    return findings;
}

Findings compare_documents(const SubtitleDocument& source, const SubtitleDocument& target,
                           const LintOptions& options)
{
    Findings findings = lint_document(target, options);
    const auto alignment = align_by_time(source, target, options.overlap_threshold);
    append(findings, check_block_count(alignment));
    for (const AlignedCuePair& pair : alignment) {
        if (!pair.one_to_one())
            continue;
        const PairContext ctx{source, target, pair};
        append(findings, check_markup_integrity(pair, source, target));
        append(findings, detect_stammering(ctx));
        if (options.lexicons) {
            append(findings, detect_not_translated(ctx, *options.lexicons, options.target_lang));
            append(findings, check_glossary(ctx, *options.lexicons));
            append(findings, check_profanity(ctx, *options.lexicons, options.source_lang,
                                             options.target_lang, options.profanity_tolerance));
            append(findings, check_numbers_units(ctx, *options.lexicons));
            append(findings, check_addition_omission(ctx, *options.lexicons, options.expansion));
        }
    }
    if (options.lexicons)
        append(findings, check_lexical_consistency(alignment, source, target, *options.lexicons));
    sort_findings(findings);
    return findings;
}

} // namespace subqa
