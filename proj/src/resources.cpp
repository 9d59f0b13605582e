#include "subqa/resources.hpp"

#include "subqa/utf8.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace subqa {
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string read_file(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw FileNotFound("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json parse_json_file(const fs::path& path)
{
    try {
        return json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw SchemaViolation(path.string() + ": " + e.what());
    }
}

SpacingConvention spacing_from(const json& j, const char* key, SpacingConvention fallback)
{
    if (!j.contains(key))
        return fallback;
    const std::string v = j.at(key).get<std::string>();
    if (v == "attached")
        return SpacingConvention::Attached;
    if (v == "spaced")
        return SpacingConvention::Spaced;
    throw SchemaViolation(std::string("invalid value for '") + key + "': " + v);
}

void validate(const GuidelineProfile& p)
{
    if (p.max_chars_per_line < 1)
        throw SchemaViolation("max_chars_per_line must be >= 1");
    if (p.max_lines_per_block < 1)
        throw SchemaViolation("max_lines_per_block must be >= 1");
    if (!(p.max_reading_speed > 0))
        throw SchemaViolation("max_reading_speed must be > 0");
}

} // namespace

GuidelineProfile builtin_profile(const std::string& language)
{
    GuidelineProfile p;
    p.language = language;
    // All shipped profiles use the 42/3 rendering box and attached hyphen and
    // ellipsis conventions; reading speed defaults to 17 characters per second.
    return p;
}

GuidelineProfile load_profile(const std::string& path)
{
    const json j = parse_json_file(path);
    GuidelineProfile p = builtin_profile(j.value("language", std::string{}));
    if (j.contains("max_chars_per_line")) {
        const auto v = j.at("max_chars_per_line").get<long long>();
        if (v < 1)
            throw SchemaViolation("max_chars_per_line must be >= 1");
        p.max_chars_per_line = static_cast<std::size_t>(v);
    }
    if (j.contains("max_lines_per_block")) {
        const auto v = j.at("max_lines_per_block").get<long long>();
        if (v < 1)
            throw SchemaViolation("max_lines_per_block must be >= 1");
        p.max_lines_per_block = static_cast<std::size_t>(v);
    }
    if (j.contains("max_reading_speed"))
        p.max_reading_speed = j.at("max_reading_speed").get<double>();
    p.hyphen_spacing = spacing_from(j, "hyphen_spacing", p.hyphen_spacing);
    p.ellipsis_spacing = spacing_from(j, "ellipsis_spacing", p.ellipsis_spacing);
    if (j.contains("ellipsis_forms")) {
        p.ellipsis_forms.clear();
        for (const auto& f : j.at("ellipsis_forms"))
            p.ellipsis_forms.insert(f.get<std::string>());
    }
    validate(p);
    return p;
}

NumberLocale builtin_number_locale(const std::string& language)
{
    const std::string lang = language.substr(0, 2);
    if (lang == "de" || lang == "es" || lang == "pt" || lang == "it" || lang == "fr")
        return NumberLocale{',', '.'};
    return NumberLocale{'.', ','};
}

std::vector<UnitRule> default_units()
{
    return {
        {"feet", {"foot", "ft", "fuß"}, "m", 0.3048, UnitSystem::Imperial},
        {"miles", {"mile", "mi", "meilen", "meile"}, "km", 1.60934, UnitSystem::Imperial},
        {"gallons", {"gallon", "gal", "gallonen", "gallone"}, "L", 3.78541, UnitSystem::Imperial},
        {"pounds", {"pound", "lb", "lbs", "pfund"}, "kg", 0.453592, UnitSystem::Imperial},
        {"inches", {"inch", "in", "zoll"}, "cm", 2.54, UnitSystem::Imperial},
        {"yards", {"yard", "yd"}, "m", 0.9144, UnitSystem::Imperial},
    };
}

LexiconSet load_lexicons(const std::string& dir, const std::string& source_lang, const std::string& target_lang)
{
    const fs::path root(dir);
    if (!fs::is_directory(root))
        throw MissingResource("lexicon directory not found: " + dir);

    LexiconSet lex;
    lex.units = default_units();
    lex.source_number = builtin_number_locale(source_lang);
    lex.target_number = builtin_number_locale(target_lang);

    const auto load_wordfile = [](const fs::path& path, std::unordered_set<std::string>& into) {
        std::ifstream in(path);
        std::string word;
        while (std::getline(in, word)) {
            while (!word.empty() && (word.back() == '\r' || word.back() == ' '))
                word.pop_back();
            if (!word.empty() && word[0] != '#')
                into.insert(utf8::fold_string(word));
        }
    };
    load_wordfile(root / "lexicons" / target_lang / "words.txt", lex.target_wordlist);
    load_wordfile(root / "lexicons" / target_lang / "allow.txt", lex.allowlist);

    const fs::path knp_dir = root / "knp";
    if (fs::is_directory(knp_dir)) {
        for (const auto& entry : fs::directory_iterator(knp_dir)) {
            if (entry.path().extension() != ".json")
                continue;
            const json j = parse_json_file(entry.path());
            for (const auto& [key, value] : j.items()) {
                if (key.empty())
                    throw SchemaViolation(entry.path().string() + ": empty glossary key");
                const std::string folded = utf8::fold_string(key);
                if (lex.knp_glossary.count(folded))
                    throw DuplicateGlossaryKey("duplicate glossary key '" + key + "' in " + entry.path().string());
                lex.knp_glossary[folded] = value.get<std::string>();
            }
        }
    }

    for (const std::string& lang : {source_lang, target_lang}) {
        const fs::path pf = root / "profanity" / (lang + ".json");
        if (!fs::exists(pf))
            continue;
        const json j = parse_json_file(pf);
        auto& table = lex.profanity[lang];
        for (const auto& [term, severity] : j.items()) {
            const int s = severity.get<int>();
            if (s < 1 || s > 3)
                throw SchemaViolation(pf.string() + ": severity for '" + term + "' must be 1..3");
            table[utf8::fold_string(term)] = s;
        }
    }

    const fs::path units_file = root / "units" / (source_lang + "-" + target_lang + ".json");
    if (fs::exists(units_file)) {
        const json j = parse_json_file(units_file);
        for (const auto& ju : j) {
            UnitRule rule;
            rule.source_unit = utf8::fold_string(ju.at("source_unit").get<std::string>());
            rule.target_unit = ju.at("target_unit").get<std::string>();
            rule.factor = ju.at("factor").get<double>();
            if (!(rule.factor > 0))
                throw SchemaViolation(units_file.string() + ": factor must be > 0");
            rule.system = ju.value("system", std::string("imperial")) == "metric" ? UnitSystem::Metric
                                                                                  : UnitSystem::Imperial;
            if (ju.contains("aliases"))
                for (const auto& a : ju.at("aliases"))
                    rule.source_aliases.insert(utf8::fold_string(a.get<std::string>()));
            // File rules override the built-in rule of the same source unit.
            std::erase_if(lex.units, [&](const UnitRule& r) { return r.source_unit == rule.source_unit; });
            lex.units.push_back(std::move(rule));
        }
    }

    return lex;
}

std::optional<RegisterRules> builtin_register_rules(const std::string& language)
{
    if (language.substr(0, 2) != "de")
        return std::nullopt;
    RegisterRules rules;
    rules.informal = {"du", "dich", "dir", "dein", "deine", "deinem", "deinen", "deiner", "deines",
                      "euch", "euer", "eure", "eurem", "euren",
                      // frequent informal plural imperatives
                      "werft", "kommt", "lasst", "gebt", "nehmt"};
    rules.formal = {"sie", "ihnen", "ihr", "ihre", "ihrem", "ihren", "ihrer", "ihres"};
    return rules;
}

} // namespace subqa
