#pragma once

// Hand-checked English→German cue fixtures. Each row carries a source cue, a
// machine translation exhibiting one defect class, and the human translation
// used as the clean reference. Rows with designated == Check::None exist only
// for the clean-reference suite.

#include "subqa/document.hpp"
#include "subqa/finding.hpp"
#include "subqa/resources.hpp"
#include "subqa/tokenize.hpp"

#include <string>
#include <vector>

namespace fixtures {

enum class Check {
    None,
    Repetition,
    Spacing,
    Markup,
    LineLength,
    Glossary,
    Spelling,
    NotTranslated,
    NumbersUnits,
};

struct Row {
    const char* id;
    const char* source;
    const char* mt;
    const char* human;
    Check designated;
    subqa::ErrorCategory expected;
};

inline const std::vector<Row>& rows()
{
    using subqa::ErrorCategory;
    static const std::vector<Row> r = {
        {"repeat-1", "so it's very, very frustrating.",
         "also ist es sehr, sehr frustrierend.",
         "also ist es äußerst frustrierend.",
         Check::Repetition, ErrorCategory::RepeatedPhrase},
        {"repeat-2", "Go, go, go!",
         "Los, los, los!",
         "Los!",
         Check::Repetition, ErrorCategory::RepeatedPhrase},
        {"repeat-3", "Get over there! Hurry up! Get over there.",
         "Geh da rüber! Beeil dich! Geh da rüber.",
         "Geht da rüber! Beeilt euch!",
         Check::None, ErrorCategory::RepeatedPhrase},
        {"repeat-4", "Yes, yes.",
         "Ja, ja.",
         "Ja.",
         Check::Repetition, ErrorCategory::RepeatedPhrase},

        {"spacing-1", "-Thank you. -Oh, boy.",
         "- Danke. - Oh, Junge.",
         "-Danke. -Oh, Junge.",
         Check::Spacing, ErrorCategory::IncorrectSpacing},
        {"spacing-2", "...and a silver Sebright hen.",
         "... und eine silberne Sebright-Henne.",
         "...und eine silberne Sebright-Henne.",
         Check::Spacing, ErrorCategory::IncorrectSpacing},
        {"spacing-3", "...that there was more water in the system.",
         "... dass es mehr Wasser im System gab.",
         "...dass es mehr Wasser im System gab.",
         Check::Spacing, ErrorCategory::IncorrectSpacing},

        {"markup-1", "<i>that lurked beneath everyday palace life.</i>",
         "die unter dem alltäglichen Palastleben lauerten.",
         "<i>das im alltäglichen Palastleben lauerte.</i>",
         Check::Markup, ErrorCategory::NonTextCharacter},
        {"markup-2", "But it could also be short for <i>specularius,</i>",
         "Aber es könnte auch kurz Forspekularius sein,",
         "Es könnte auch kurz für <i>specularius</i> sein,",
         Check::Markup, ErrorCategory::NonTextCharacter},
        {"markup-3", "that swirl around the undersea ledges\nand mountains.",
         ", die sich um die Unterwasservorsprünge und Berge drehen.",
         "die um die Vorsprünge und Berge\nunter Wasser wirbeln.",
         Check::Markup, ErrorCategory::NonTextCharacter},

        {"length-1", "Come by and drive it whenever you want.",
         "Kommen Sie vorbei und fahren Sie es, wann immer Sie wollen.",
         "Komm jederzeit zum Fahren vorbei.",
         Check::LineLength, ErrorCategory::LineTooLong},
        {"length-2", "I chose to hide it from everyone.",
         "Ich habe mich entschieden, es vor allen zu verstecken.",
         "entschied ich mich, es zu verstecken.",
         Check::LineLength, ErrorCategory::LineTooLong},
        {"length-3", "with the men guilty of those crimes.",
         "mit den Männern, die sich dieser Verbrechen schuldig gemacht haben.",
         "mit den Schuldigen dieser Verbrechen.",
         Check::LineLength, ErrorCategory::LineTooLong},
        {"length-4", "Nothing but an ordinary match folder.",
         "Nichts als ein gewöhnlicher Übereinstimmungsordner.",
         "Nur ein gewöhnlicher Streichholzbrief.",
         Check::LineLength, ErrorCategory::LineTooLong},

        {"omission-1", "world-wide problems that go beyond",
         "weltweite Probleme, die über",
         "um weltweite Probleme, die über",
         Check::None, ErrorCategory::AdditionOmission},
        {"omission-2", "in the direction of world government for the Antichrist.",
         "in Richtung der Weltregierung für den Antichristen.",
         "in Richtung der Weltregierung\nfür den Antichristen steuern.",
         Check::None, ErrorCategory::AdditionOmission},
        {"omission-3", "The Trilateral Commission is widely seen",
         "Die Trilaterale Kommission ist weit verbreitet",
         "Die Trilaterale Kommission wird allgemein",
         Check::None, ErrorCategory::AdditionOmission},

        {"knp-1", "CALIGULA WITH MARY BEARD",
         "CALIGULA MIT MARY BART",
         "CALIGULA MIT MARY BEARD",
         Check::Glossary, ErrorCategory::GlossaryViolation},

        {"spell-1", "on small pieces of limestone, on ostraca.",
         "auf kleinen Stücken Kalkstein, auf Ostraca.",
         "auf kleinen Stücken Kalkstein,\nauf Ostraka.",
         Check::Spelling, ErrorCategory::Misspelling},
        {"spell-2", "The look in his eyes--",
         "Der Blick in seine Augen...",
         "Der Blick in seinen Augen...",
         Check::None, ErrorCategory::Misspelling},
        {"spell-3", "all at once.",
         "alle auf einmal.",
         "alles auf einmal.",
         Check::None, ErrorCategory::Misspelling},
        {"spell-4", "that accident.",
         "diesen Unfall.",
         "dieser Unfall.",
         Check::None, ErrorCategory::Misspelling},

        {"untranslated-1", "The true school for Che's New Man",
         "Die wahre Schule für Ches New Man",
         "Die wahre Schule für Ches Neuen Menschen",
         Check::NotTranslated, ErrorCategory::NotTranslated},
        {"untranslated-2", "It was a kind of paean,",
         "Es war eine Art Paean,",
         "Es war eine Art Lobgesang,",
         Check::NotTranslated, ErrorCategory::NotTranslated},
        {"untranslated-3", "They all have their little quirks.",
         "Sie haben alle ihre kleinen Quirks.",
         "Sie haben alle ihre kleinen Eigenarten.",
         Check::NotTranslated, ErrorCategory::NotTranslated},

        {"units-1", "which from 15,000 feet must've looked\nto my bomb aimer like a dinky toy,",
         "die von 15.000 Fuß muss auf meine\nBombenauslöser wie ein dinky Spielzeug,",
         "das aus 4500 m Höhe für den Schützen\nwohl wie ein schäbiges Spielzeug aussah,",
         Check::NumbersUnits, subqa::ErrorCategory::FormatError},
        {"units-2", "even though it was 900 feet long.",
         "obwohl es 900 Fuß lang war.",
         "obwohl es fast 300 m lang war.",
         Check::NumbersUnits, subqa::ErrorCategory::FormatError},
        {"units-3", "and a Mosquito tank of 50 gallons,\none on top of the other,",
         "und einen Moskitonistank von 50 Gallonen,\neiner über dem anderen,",
         "und ein Mosquitotank für fast 200 Liter,\neiner über dem anderen,",
         Check::NumbersUnits, subqa::ErrorCategory::FormatError},

        {"merge-solo", "One cry meant you were hungry...",
         "Ein Schrei bedeutete, dass du Hunger hattest...",
         "Ein Schrei bedeutet, ich habe Hunger.",
         Check::None, subqa::ErrorCategory::BlockCountIntegrity},
    };
    return r;
}

// Two source cues a human rendered as one block; the mechanical translation
// kept the original block boundaries.
struct MergeCase {
    const char* source_a = "-It's a boy.";
    const char* source_b = "How is he? Is he okay?";
    const char* human = "-Es ist ein Junge!\n-Wie geht es ihm? Ist er okay?";
};

inline subqa::Cue make_cue(const std::string& payload, long long start_ms, long long end_ms)
{
    subqa::Cue cue;
    cue.start = {start_ms};
    cue.end = {end_ms};
    std::size_t pos = 0;
    while (true) {
        const auto nl = payload.find('\n', pos);
        if (nl == std::string::npos) {
            cue.lines.push_back(payload.substr(pos));
            break;
        }
        cue.lines.push_back(payload.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return cue;
}

inline subqa::SubtitleDocument single_doc(const std::string& payload)
{
    subqa::SubtitleDocument doc;
    doc.cues.push_back(make_cue(payload, 0, 6000));
    return doc;
}

// Every human cue in one document, sequentially timed.
inline subqa::SubtitleDocument human_reference_doc()
{
    subqa::SubtitleDocument doc;
    long long t = 0;
    for (const Row& row : rows()) {
        doc.cues.push_back(make_cue(row.human, t, t + 5600));
        t += 6000;
    }
    doc.cues.push_back(make_cue(MergeCase{}.human, t, t + 5600));
    return doc;
}

// Wordlist drawn from the human cues themselves, plus the KNP entry the
// glossary fixture depends on.
inline subqa::LexiconSet fixture_lexicons()
{
    subqa::LexiconSet lex;
    lex.units = subqa::default_units();
    lex.source_number = subqa::builtin_number_locale("en");
    lex.target_number = subqa::builtin_number_locale("de");
    lex.knp_glossary["mary beard"] = subqa::kKeepVerbatim;
    const auto add_words = [&lex](const std::string& text) {
        for (const subqa::Token& tok : subqa::tokenize(text))
            if (!tok.core_folded.empty())
                lex.target_wordlist.insert(tok.core_folded);
    };
    for (const Row& row : rows())
        add_words(row.human);
    add_words(MergeCase{}.human);
    return lex;
}

} // namespace fixtures
