#include "subqa/langid.hpp"

#include "subqa/tokenize.hpp"
#include "subqa/utf8.hpp"

#include <unordered_map>
#include <unordered_set>

namespace subqa {
namespace {

const std::unordered_map<std::string, std::unordered_set<std::string>>& stopwords()
{
    static const std::unordered_map<std::string, std::unordered_set<std::string>> table = {
        {"en",
         {"the", "be", "to", "of", "and", "a", "in", "that", "have", "i", "it", "for", "not", "on",
          "with", "he", "as", "you", "do", "at", "this", "but", "his", "by", "from", "they", "we",
          "say", "her", "she", "or", "an", "will", "my", "one", "all", "would", "there", "their",
          "what", "so", "up", "out", "if", "about", "who", "get", "which", "go", "me", "when",
          "can", "like", "time", "no", "just", "him", "know", "take", "into", "your", "some",
          "could", "them", "see", "other", "than", "then", "now", "only", "come", "its", "over",
          "also", "back", "after", "use", "two", "how", "our", "well", "way", "even", "new",
          "want", "because", "any", "these", "give", "day", "most", "us", "is", "was", "are",
          "been", "has", "had", "were", "said", "did", "having", "may", "am"}},
        {"de",
         {"der", "die", "das", "und", "in", "zu", "den", "mit", "von", "sich", "des", "auf",
          "für", "ist", "im", "dem", "nicht", "ein", "eine", "als", "auch", "es", "an", "werden",
          "aus", "er", "hat", "dass", "sie", "nach", "wird", "bei", "einer", "um", "am", "sind",
          "noch", "wie", "einem", "über", "einen", "so", "zum", "war", "haben", "nur", "oder",
          "aber", "vor", "zur", "bis", "mehr", "durch", "man", "sein", "wurde", "sei", "ich",
          "du", "wir", "ihr", "mich", "mir", "dich", "uns", "euch", "was", "wenn", "kein",
          "keine", "schon", "ja", "nein", "doch", "da", "hier", "jetzt", "dann", "also"}},
        {"es",
         {"de", "la", "que", "el", "en", "y", "a", "los", "del", "se", "las", "por", "un",
          "para", "con", "no", "una", "su", "al", "lo", "como", "más", "pero", "sus", "le",
          "ya", "o", "este", "sí", "porque", "esta", "entre", "cuando", "muy", "sin", "sobre",
          "también", "me", "hasta", "hay", "donde", "quien", "desde", "todo", "nos", "durante",
          "todos", "uno", "les", "ni", "contra", "otros", "ese", "eso", "ante", "ellos", "e",
          "esto", "mí", "antes", "algunos", "qué", "unos", "yo", "otro", "otras", "otra", "él",
          "tanto", "esa", "estos", "mucho", "quienes", "nada", "muchos", "cual", "poco", "ella",
          "estar", "estas", "algunas", "algo", "nosotros", "es", "está", "dónde", "cómo",
          "está", "son", "fue", "ser"}},
        {"fr",
         {"le", "de", "un", "être", "et", "à", "il", "avoir", "ne", "je", "son", "que", "se",
          "qui", "ce", "dans", "en", "du", "elle", "au", "pour", "pas", "vous", "par", "sur",
          "faire", "plus", "dire", "me", "on", "mon", "lui", "nous", "comme", "mais", "pouvoir",
          "avec", "tout", "y", "aller", "voir", "bien", "où", "sans", "tu", "ou", "leur",
          "si", "deux", "moi", "vouloir", "te", "femme", "venir", "quand", "grand", "celui",
          "notre", "devoir", "là", "jour", "prendre", "même", "votre", "rien", "les", "des",
          "une", "est", "sont", "était", "cette", "ces", "aux", "été", "être"}},
    };
    return table;
}

} // namespace

std::vector<std::string> supported_evidence_languages()
{
    std::vector<std::string> langs;
    for (const auto& [lang, _] : stopwords())
        langs.push_back(lang);
    langs.push_back("zh");
    langs.push_back("ar");
    langs.push_back("ru");
    return langs;
}

std::map<std::string, std::size_t> language_hits(std::string_view text)
{
    std::map<std::string, std::size_t> hits;
    for (const Token& tok : tokenize(text)) {
        for (const auto& [lang, words] : stopwords())
            if (words.count(tok.core_folded))
                ++hits[lang];
    }
    std::size_t i = 0;
    while (i < text.size()) {
        const char32_t cp = utf8::decode(text, i);
        if (cp >= 0x4E00 && cp <= 0x9FFF)
            ++hits["zh"];
        else if (cp >= 0x0600 && cp <= 0x06FF)
            ++hits["ar"];
        else if (cp >= 0x0400 && cp <= 0x04FF)
            ++hits["ru"];
        else if (cp == 0x00BF || cp == 0x00A1) // ¿ ¡
            ++hits["es"];
    }
    return hits;
}

} // namespace subqa
