#include "subqa/report.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace subqa {
using nlohmann::json;

namespace {

std::string two_decimals(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::map<ErrorCategory, CategoryStat> stats_for(const Findings& findings, std::size_t cue_count,
                                                std::set<std::size_t>& dirty_cues)
{
    std::map<ErrorCategory, std::set<std::size_t>> cues_per_category;
    for (const Finding& f : findings) {
        if (f.cue_index >= cue_count)
            throw IndexOutOfRange("finding cue index " + std::to_string(f.cue_index) +
                                  " >= cue count " + std::to_string(cue_count));
        cues_per_category[f.category].insert(f.cue_index);
        dirty_cues.insert(f.cue_index);
    }
    std::map<ErrorCategory, CategoryStat> stats;
    for (const auto& [category, cues] : cues_per_category) {
        CategoryStat s;
        s.cue_count = cues.size();
        s.percentage = cue_count ? round2(100.0 * static_cast<double>(cues.size()) /
                                          static_cast<double>(cue_count))
                                 : 0.0;
        stats[category] = s;
    }
    return stats;
}

json finding_to_json(const Finding& f)
{
    json jf;
    jf["category"] = std::string(to_string(f.category));
    jf["cue_index"] = f.cue_index;
    jf["severity"] = std::string(to_string(f.severity));
    jf["message"] = f.message;
    if (f.span) {
        jf["span"] = {{"start", f.span->start}, {"end", f.span->end}};
    }
    if (f.suggestion)
        jf["suggestion"] = *f.suggestion;
    return jf;
}

Finding finding_from_json(const json& jf)
{
    Finding f;
    const auto cat = category_from_string(jf.at("category").get<std::string>());
    if (!cat)
        throw UnknownCategory("unknown category '" + jf.at("category").get<std::string>() + "'");
    f.category = *cat;
    f.cue_index = jf.at("cue_index").get<std::size_t>();
    if (jf.contains("severity")) {
        const auto sev = severity_from_string(jf.at("severity").get<std::string>());
        if (!sev)
            throw ReportSchemaViolation("unknown severity '" + jf.at("severity").get<std::string>() + "'");
        f.severity = *sev;
    }
    f.message = jf.value("message", std::string{});
    if (jf.contains("span"))
        f.span = Span{jf.at("span").at("start").get<std::size_t>(),
                      jf.at("span").at("end").get<std::size_t>()};
    if (jf.contains("suggestion"))
        f.suggestion = jf.at("suggestion").get<std::string>();
    return f;
}

} // namespace

double round2(double value)
{
    return std::floor(value * 100.0 + 0.5) / 100.0;
}

QaReport aggregate(const std::vector<FileFindings>& files, const std::string& source_lang,
                   const std::string& target_lang)
{
    QaReport report;
    report.source_lang = source_lang;
    report.target_lang = target_lang;

    std::map<ErrorCategory, std::size_t> totals;
    std::size_t dirty_total = 0;
    for (const FileFindings& file : files) {
        std::set<std::size_t> dirty;
        FileReport fr;
        fr.file = file.file;
        fr.total_cues = file.cue_count;
        fr.per_category = stats_for(file.findings, file.cue_count, dirty);
        fr.clean_percentage = file.cue_count
                                  ? round2(100.0 * static_cast<double>(file.cue_count - dirty.size()) /
                                           static_cast<double>(file.cue_count))
                                  : 0.0;
        for (const auto& [category, stat] : fr.per_category)
            totals[category] += stat.cue_count;
        dirty_total += dirty.size();
        report.total_cues += file.cue_count;
        report.per_file.push_back(std::move(fr));
    }
    for (const auto& [category, count] : totals) {
        CategoryStat s;
        s.cue_count = count;
        s.percentage = report.total_cues ? round2(100.0 * static_cast<double>(count) /
                                                  static_cast<double>(report.total_cues))
                                         : 0.0;
        report.per_category[category] = s;
    }
    report.clean_percentage =
        report.total_cues ? round2(100.0 * static_cast<double>(report.total_cues - dirty_total) /
                                   static_cast<double>(report.total_cues))
                          : 0.0;
    return report;
}

std::string emit_report(const QaReport& report, ReportFormat format)
{
    switch (format) {
    case ReportFormat::Json: {
        json j;
        j["schema_version"] = kReportSchemaVersion;
        j["language_pair"] = {{"source", report.source_lang}, {"target", report.target_lang}};
        j["total_cues"] = report.total_cues;
        j["clean_percentage"] = report.clean_percentage;
        j["empty_corpus"] = report.total_cues == 0;
        json cats = json::object();
        for (const auto& [category, stat] : report.per_category)
            cats[std::string(to_string(category))] = {{"cue_count", stat.cue_count},
                                                      {"percentage", stat.percentage}};
        j["per_category"] = cats;
        json files = json::array();
        for (const FileReport& fr : report.per_file) {
            json jf;
            jf["file"] = fr.file;
            jf["total_cues"] = fr.total_cues;
            jf["clean_percentage"] = fr.clean_percentage;
            json fc = json::object();
            for (const auto& [category, stat] : fr.per_category)
                fc[std::string(to_string(category))] = {{"cue_count", stat.cue_count},
                                                        {"percentage", stat.percentage}};
            jf["per_category"] = fc;
            files.push_back(std::move(jf));
        }
        j["per_file"] = files;
        return j.dump(2) + "\n";
    }
    case ReportFormat::Csv: {
        std::string out = "category,cue_count,percentage\n";
        for (const auto& [category, stat] : report.per_category)
            out += std::string(to_string(category)) + "," + std::to_string(stat.cue_count) + "," +
                   two_decimals(stat.percentage) + "\n";
        return out;
    }
    case ReportFormat::Text: {
        std::ostringstream out;
        out << "Corpus: " << report.total_cues << " cues";
        if (!report.source_lang.empty() || !report.target_lang.empty())
            out << " (" << report.source_lang << " -> " << report.target_lang << ")";
        out << "\n";
        if (report.total_cues == 0)
            out << "empty corpus\n";
        out << "Clean cues: " << two_decimals(report.clean_percentage) << "%\n";
        std::vector<std::pair<ErrorCategory, CategoryStat>> ranked(report.per_category.begin(),
                                                                   report.per_category.end());
        std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
            return a.second.cue_count > b.second.cue_count;
        });
        for (const auto& [category, stat] : ranked) {
            char line[128];
            std::snprintf(line, sizeof(line), "  %-24s %6zu cues  %6.2f%%\n",
                          std::string(to_string(category)).c_str(), stat.cue_count, stat.percentage);
            out << line;
        }
        return out.str();
    }
    case ReportFormat::PlotData: {
        std::string out;
        for (const auto& [category, stat] : report.per_category)
            out += std::string(to_string(category)) + "," + two_decimals(stat.percentage) + "\n";
        out += "Clean," + two_decimals(report.clean_percentage) + "\n";
        return out;
    }
    }
    return {};
}

QaReport report_from_json(const std::string& json_text)
{
    const json j = json::parse(json_text);
    QaReport report;
    report.total_cues = j.at("total_cues").get<std::size_t>();
    report.clean_percentage = j.at("clean_percentage").get<double>();
    report.source_lang = j.at("language_pair").at("source").get<std::string>();
    report.target_lang = j.at("language_pair").at("target").get<std::string>();
    for (const auto& [name, stat] : j.at("per_category").items()) {
        const auto cat = category_from_string(name);
        if (!cat)
            throw UnknownCategory("unknown category '" + name + "'");
        report.per_category[*cat] = {stat.at("cue_count").get<std::size_t>(),
                                     stat.at("percentage").get<double>()};
    }
    for (const auto& jf : j.at("per_file")) {
        FileReport fr;
        fr.file = jf.at("file").get<std::string>();
        fr.total_cues = jf.at("total_cues").get<std::size_t>();
        fr.clean_percentage = jf.at("clean_percentage").get<double>();
        for (const auto& [name, stat] : jf.at("per_category").items()) {
            const auto cat = category_from_string(name);
            if (!cat)
                throw UnknownCategory("unknown category '" + name + "'");
            fr.per_category[*cat] = {stat.at("cue_count").get<std::size_t>(),
                                     stat.at("percentage").get<double>()};
        }
        report.per_file.push_back(std::move(fr));
    }
    return report;
}

std::string findings_to_json(const Findings& findings)
{
    json j;
    j["schema_version"] = kFindingsSchemaVersion;
    json arr = json::array();
    for (const Finding& f : findings)
        arr.push_back(finding_to_json(f));
    j["findings"] = arr;
    return j.dump(2) + "\n";
}

Findings findings_from_json(const std::string& json_text)
{
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ReportSchemaViolation(e.what());
    }
    if (!j.contains("findings") || !j.at("findings").is_array())
        throw ReportSchemaViolation("findings JSON must contain a 'findings' array");
    Findings out;
    for (const auto& jf : j.at("findings"))
        out.push_back(finding_from_json(jf));
    return out;
}

Findings ingest_annotations(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ReportSchemaViolation("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return findings_from_json(buf.str());
}

} // namespace subqa
