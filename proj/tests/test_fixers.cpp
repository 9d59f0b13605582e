#include <doctest.h>

#include "subqa/fixers.hpp"

#include "subqa/guideline_checks.hpp"

#include "fixtures.hpp"

#include <string>

using namespace subqa;
using fixtures::make_cue;
using fixtures::single_doc;

namespace {

const GuidelineProfile kProfile = builtin_profile("de");

std::string fixed_spacing(const std::string& payload)
{
    return fix_spacing(single_doc(payload), kProfile).doc.cues[0].raw();
}

std::string collapsed(const std::string& payload)
{
    return collapse_repetitions(single_doc(payload)).doc.cues[0].raw();
}

} // namespace

TEST_CASE("spacing fixer reproduces the reference spacing byte for byte")
{
    CHECK(fixed_spacing("- Danke. - Oh, Junge.") == "-Danke. -Oh, Junge.");
    CHECK(fixed_spacing("... und eine silberne Sebright-Henne.") ==
          "...und eine silberne Sebright-Henne.");
    CHECK(fixed_spacing("... dass es mehr Wasser im System gab.") ==
          "...dass es mehr Wasser im System gab.");
    // Already-clean payloads stay untouched.
    CHECK(fixed_spacing("-Danke. -Oh, Junge.") == "-Danke. -Oh, Junge.");
}

TEST_CASE("repetition fixer reproduces the reference collapse byte for byte")
{
    CHECK(collapsed("Los, los, los!") == "Los!");
    CHECK(collapsed("Ja, ja.") == "Ja.");
    CHECK(collapsed("also ist es sehr, sehr frustrierend.") == "also ist es sehr frustrierend.");
}

TEST_CASE("fixers record one edit per changed cue with full payloads")
{
    SubtitleDocument doc;
    doc.cues.push_back(make_cue("- Danke. - Oh, Junge.", 0, 3000));
    doc.cues.push_back(make_cue("Schon sauber.", 4000, 7000));

    const FixResult result = fix_spacing(doc, kProfile);
    REQUIRE(result.edits.size() == 1);
    CHECK(result.edits[0].cue_index == 0);
    CHECK(result.edits[0].category == ErrorCategory::IncorrectSpacing);
    CHECK(result.edits[0].before == "- Danke. - Oh, Junge.");
    CHECK(result.edits[0].after == "-Danke. -Oh, Junge.");

    // Replaying the edit list reproduces the fixed document.
    const SubtitleDocument replayed = replay_edits(doc, result.edits);
    CHECK(replayed.cues[0].raw() == result.doc.cues[0].raw());
    CHECK(replayed.cues[1].raw() == doc.cues[1].raw());

    // Replay refuses edits whose before-image does not match.
    std::vector<Edit> stale = result.edits;
    stale[0].before = "something else";
    CHECK_THROWS_AS(replay_edits(doc, stale), std::runtime_error);
    stale[0].before = result.edits[0].before;
    stale[0].cue_index = 9;
    CHECK_THROWS_AS(replay_edits(doc, stale), std::out_of_range);
}

TEST_CASE("fixers preserve markup around the edited region")
{
    CHECK(fixed_spacing("<i>- Danke. - Oh, Junge.</i>") == "<i>-Danke. -Oh, Junge.</i>");
    CHECK(collapsed("<i>Los, los, los!</i>") == "<i>Los!</i>");
}

TEST_CASE("fixers are idempotent and close their own findings")
{
    const char* cases[] = {"- Danke. - Oh, Junge.", "... und eine silberne Sebright-Henne.",
                           "Los, los, los!", "Ja, ja.", "also ist es sehr, sehr frustrierend.",
                           "Es  doppelt  und - Dann", "Na, na, na, gut, gut."};
    for (const char* text : cases) {
        SubtitleDocument doc = single_doc(text);
        const SubtitleDocument once = collapse_repetitions(fix_spacing(doc, kProfile).doc).doc;
        const SubtitleDocument twice =
            collapse_repetitions(fix_spacing(once, kProfile).doc).doc;
        CHECK(once.cues[0].raw() == twice.cues[0].raw());

        CHECK(check_spacing(once.cues[0], 0, kProfile).empty());
        CHECK(detect_repetitions(once.cues[0], 0).empty());
    }
}

TEST_CASE("markup fixer wraps the target in the source's full-payload tags")
{
    SubtitleDocument source = single_doc("<i>that lurked beneath everyday palace life.</i>");
    SubtitleDocument target = single_doc("die unter dem alltäglichen Palastleben lauerten.");
    const auto pairs = align_by_time(source, target);

    const MarkupFixOutcome outcome = reinsert_source_markup(pairs.at(0), source, target);
    CHECK_FALSE(outcome.partial_span_flagged);
    CHECK(outcome.cue.raw() == "<i>die unter dem alltäglichen Palastleben lauerten.</i>");
    REQUIRE(outcome.edits.size() == 1);
    CHECK(outcome.edits[0].category == ErrorCategory::NonTextCharacter);

    // Applying it again is a no-op: the tag kind is already present.
    SubtitleDocument fixed = target;
    fixed.cues[0] = outcome.cue;
    const MarkupFixOutcome again = reinsert_source_markup(pairs.at(0), source, fixed);
    CHECK(again.edits.empty());
    CHECK(again.cue.raw() == outcome.cue.raw());
}

TEST_CASE("partial source spans are flagged, not transferred")
{
    SubtitleDocument source = single_doc("But it could also be short for <i>specularius,</i>");
    SubtitleDocument target = single_doc("Aber es könnte auch kurz Forspekularius sein,");
    const auto pairs = align_by_time(source, target);
    const MarkupFixOutcome outcome = reinsert_source_markup(pairs.at(0), source, target);
    CHECK(outcome.partial_span_flagged);
    CHECK(outcome.edits.empty());
    CHECK(outcome.cue.raw() == target.cues[0].raw());
}

TEST_CASE("unit conversions round for display")
{
    const UnitRule feet{"feet", {"ft", "fuß"}, "m", 0.3048, UnitSystem::Imperial};
    const UnitRule gallons{"gallons", {"gal"}, "L", 3.78541, UnitSystem::Imperial};

    const UnitSuggestion high = unit_conversion(15000, feet);
    CHECK(high.exact == doctest::Approx(4572.0));
    CHECK(high.display == doctest::Approx(4600.0));
    CHECK(high.text == "4600 m");

    const UnitSuggestion low = unit_conversion(900, feet);
    CHECK(low.exact == doctest::Approx(274.32));
    CHECK(low.display == doctest::Approx(270.0));
    CHECK(low.text == "270 m");

    const UnitSuggestion tank = unit_conversion(50, gallons);
    CHECK(tank.exact == doctest::Approx(189.2705));
    CHECK(tank.text == "190 L");

    CHECK(suggest_unit_conversion(900, feet) == "270 m");
}
