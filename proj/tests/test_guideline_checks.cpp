#include <doctest.h>

#include "subqa/guideline_checks.hpp"

#include "fixtures.hpp"

#include <string>

using namespace subqa;
using fixtures::make_cue;
using fixtures::single_doc;

namespace {

const GuidelineProfile kProfile = builtin_profile("de");

} // namespace

TEST_CASE("plain_of joins stripped lines with scalar offsets")
{
    const Cue cue = make_cue("<i>Äh, ja.</i>\n-Nein!", 0, 2000);
    const CuePlain plain = plain_of(cue);
    CHECK(plain.joined == "Äh, ja.\n-Nein!");
    REQUIRE(plain.line_plain.size() == 2);
    CHECK(plain.line_offset[0] == 0);
    CHECK(plain.line_offset[1] == 8);
    CHECK(plain.line_spans[0].size() == 1);
    CHECK(plain.line_spans[1].empty());
}

TEST_CASE("line length limit is 42 characters per line")
{
    const std::string ok(42, 'a');
    CHECK(check_line_length(make_cue(ok, 0, 2000), 0, kProfile).empty());

    const std::string over(43, 'a');
    const Findings findings = check_line_length(make_cue(over, 0, 2000), 7, kProfile);
    REQUIRE(findings.size() == 1);
    CHECK(findings[0].category == ErrorCategory::LineTooLong);
    CHECK(findings[0].severity == Severity::Error);
    CHECK(findings[0].cue_index == 7);
    CHECK(findings[0].span == Span{42, 43});
    CHECK(findings[0].message == "line is 43 characters, limit 42");

    // Length counts rendered characters: markup and umlauts don't distort it.
    const std::string umlauts = "<i>" + std::string(40, 'a') + "öü</i>";
    CHECK(check_line_length(make_cue(umlauts, 0, 2000), 0, kProfile).empty());
}

TEST_CASE("machine translations of the length fixtures exceed the limit")
{
    const std::size_t expected[] = {59, 54, 67, 51};
    std::size_t i = 0;
    for (const fixtures::Row& row : fixtures::rows()) {
        if (row.designated != fixtures::Check::LineLength)
            continue;
        const Findings mt = check_line_length(make_cue(row.mt, 0, 6000), 0, kProfile);
        REQUIRE(mt.size() == 1);
        CHECK(mt[0].message ==
              "line is " + std::to_string(expected[i]) + " characters, limit 42");
        CHECK(check_line_length(make_cue(row.human, 0, 6000), 0, kProfile).empty());
        ++i;
    }
    CHECK(i == 4);
}

TEST_CASE("line count limit is 3 lines per cue")
{
    CHECK(check_line_count(make_cue("a\nb\nc", 0, 2000), 0, kProfile).empty());
    const Findings findings = check_line_count(make_cue("a\nb\nc\nd", 0, 2000), 0, kProfile);
    REQUIRE(findings.size() == 1);
    CHECK(findings[0].category == ErrorCategory::TooManyLines);
    CHECK(findings[0].message == "cue has 4 lines, limit 3");
}

TEST_CASE("reading speed in characters per second")
{
    // 40 chars in 2 s = 20.0 cps, above the 17 cps limit.
    const Findings fast = check_reading_speed(make_cue(std::string(40, 'a'), 0, 2000), 0, kProfile);
    REQUIRE(fast.size() == 1);
    CHECK(fast[0].category == ErrorCategory::ReadingSpeedExceeded);
    CHECK(fast[0].severity == Severity::Warning);
    CHECK(fast[0].message == "reading speed 20.0 chars/sec exceeds limit 17.0");

    // Exactly at the limit passes.
    CHECK(check_reading_speed(make_cue(std::string(34, 'a'), 0, 2000), 0, kProfile).empty());

    // Zero duration cannot be measured.
    const Findings zero = check_reading_speed(make_cue("abc", 1000, 1000), 0, kProfile);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].message == "cue has zero duration, reading speed unmeasurable");
}

TEST_CASE("spacing: speaker hyphens must attach")
{
    const Findings findings = check_spacing(make_cue("- Danke. - Oh, Junge.", 0, 2000), 3, kProfile);
    REQUIRE(findings.size() == 2);
    CHECK(findings[0].category == ErrorCategory::IncorrectSpacing);
    CHECK(findings[0].span == Span{0, 2});
    CHECK(findings[0].suggestion == "-");
    CHECK(findings[1].span == Span{9, 11});
    CHECK(findings[1].suggestion == "-");

    // Hyphens inside words or before lowercase are untouched.
    CHECK(check_spacing(make_cue("Sebright-Henne - und mehr", 0, 2000), 0, kProfile).empty());
    CHECK(check_spacing(make_cue("-Danke. -Oh, Junge.", 0, 2000), 0, kProfile).empty());
}

TEST_CASE("spacing: ellipses must attach to a following lowercase word")
{
    const Findings findings =
        check_spacing(make_cue("... und eine silberne Sebright-Henne.", 0, 2000), 0, kProfile);
    REQUIRE(findings.size() == 1);
    CHECK(findings[0].span == Span{0, 4});
    CHECK(findings[0].suggestion == "...");
    CHECK(findings[0].message == "space after ellipsis");

    CHECK(check_spacing(make_cue("...und eine silberne Sebright-Henne.", 0, 2000), 0, kProfile).empty());
    // A new sentence after a trailing ellipsis is fine.
    CHECK(check_spacing(make_cue("Na ja... Dann los.", 0, 2000), 0, kProfile).empty());
    // The precomposed ellipsis is covered too.
    const Findings uni = check_spacing(make_cue("… und los.", 0, 2000), 0, kProfile);
    REQUIRE(uni.size() == 1);
    CHECK(uni[0].suggestion == "…");
}

TEST_CASE("spacing: runs of spaces collapse")
{
    const Findings findings = check_spacing(make_cue("Es  könnte   auch", 0, 2000), 0, kProfile);
    REQUIRE(findings.size() == 2);
    CHECK(findings[0].span == Span{2, 4});
    CHECK(findings[0].suggestion == " ");
    CHECK(findings[1].span == Span{10, 13});
}

TEST_CASE("repetition: adjacent duplicate words collapse to the first occurrence")
{
    const Findings los = detect_repetitions(make_cue("Los, los, los!", 0, 2000), 0);
    REQUIRE(los.size() == 1);
    CHECK(los[0].category == ErrorCategory::RepeatedPhrase);
    CHECK(los[0].span == Span{0, 14});
    CHECK(los[0].suggestion == "Los!");
    CHECK(los[0].message == "phrase repeated 3 times");

    const Findings ja = detect_repetitions(make_cue("Ja, ja.", 0, 2000), 0);
    REQUIRE(ja.size() == 1);
    CHECK(ja[0].suggestion == "Ja.");

    const Findings sehr =
        detect_repetitions(make_cue("also ist es sehr, sehr frustrierend.", 0, 2000), 0);
    REQUIRE(sehr.size() == 1);
    CHECK(sehr[0].span == Span{12, 22});
    CHECK(sehr[0].suggestion == "sehr");
}

TEST_CASE("repetition: repeated phrases up to four tokens")
{
    const Findings findings =
        detect_repetitions(make_cue("sehr gut, sehr gut, danke.", 0, 2000), 0);
    REQUIRE(findings.size() == 1);
    CHECK(findings[0].suggestion == "sehr gut,");
    CHECK(findings[0].message == "phrase repeated 2 times");
}

TEST_CASE("repetition: legitimate repeats are not flagged")
{
    // Other words between the occurrences.
    CHECK(detect_repetitions(make_cue("das Boot im Boot", 0, 2000), 0).empty());
    // Sentence punctuation between the occurrences.
    CHECK(detect_repetitions(make_cue("Geh da rüber! Beeil dich! Geh da rüber.", 0, 2000), 0).empty());
    // A line break ends a run.
    CHECK(detect_repetitions(make_cue("Ja\nJa", 0, 2000), 0).empty());
}

TEST_CASE("compound words of 18+ characters outside the wordlist are reported")
{
    LexiconSet lex;
    lex.target_wordlist = {"streichholzbrief"};
    const Findings findings =
        check_compound_length(make_cue("ein Übereinstimmungsordner eben", 0, 2000), 0, lex);
    REQUIRE(findings.size() == 1);
    CHECK(findings[0].category == ErrorCategory::CompoundWordOOV);
    CHECK(findings[0].severity == Severity::Warning);
    CHECK(findings[0].message == "long compound 'Übereinstimmungsordner' (22 chars) not in wordlist");

    // Known long words pass.
    lex.target_wordlist.insert("übereinstimmungsordner");
    CHECK(check_compound_length(make_cue("ein Übereinstimmungsordner eben", 0, 2000), 0, lex).empty());
    // Words below 18 characters never trigger.
    CHECK(check_compound_length(make_cue("ein Streichholzheft", 0, 2000), 0, lex).empty());
}

TEST_CASE("markup integrity flags missing tags, line breaks and hyphens")
{
    const auto pair_of = [](const std::string& src, const std::string& tgt) {
        SubtitleDocument source = single_doc(src);
        SubtitleDocument target = single_doc(tgt);
        const auto pairs = align_by_time(source, target);
        return check_markup_integrity(pairs.at(0), source, target);
    };

    const Findings italic = pair_of("<i>that lurked beneath everyday palace life.</i>",
                                    "die unter dem alltäglichen Palastleben lauerten.");
    REQUIRE(italic.size() == 1);
    CHECK(italic[0].category == ErrorCategory::NonTextCharacter);
    CHECK(italic[0].message == "missing italic present in source");

    const Findings breaks = pair_of("that swirl around the undersea ledges\nand mountains.",
                                    ", die sich um die Unterwasservorsprünge und Berge drehen.");
    REQUIRE(breaks.size() == 1);
    CHECK(breaks[0].message == "line-break count 1→0");

    const Findings hyphens = pair_of("-It's a boy.\n-Is he okay?", "Es ist ein Junge.\nIst er okay?");
    REQUIRE(hyphens.size() == 1);
    CHECK(hyphens[0].message == "speaker-hyphen count 2→0");

    CHECK(pair_of("<i>palace life.</i>", "<i>das Palastleben.</i>").empty());
}

TEST_CASE("mixed language spots foreign cues in a German document")
{
    SubtitleDocument doc;
    doc.cues.push_back(make_cue("Das ist ein ganz normaler Satz.", 0, 2000));
    doc.cues.push_back(make_cue("¿Dónde está la estación?", 3000, 5000));
    const Findings findings = detect_mixed_language(doc, "de");
    REQUIRE(findings.size() == 1);
    CHECK(findings[0].category == ErrorCategory::MixedLanguage);
    CHECK(findings[0].severity == Severity::Info);
    CHECK(findings[0].cue_index == 1);
    CHECK(findings[0].message.find("'es'") != std::string::npos);
}
