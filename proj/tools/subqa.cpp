#include "subqa/fixers.hpp"
#include "subqa/linter.hpp"
#include "subqa/parse.hpp"
#include "subqa/report.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitClean = 0;
constexpr int kExitFindings = 1;
constexpr int kExitInputError = 2;

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string resources_root(const std::string& flag)
{
    if (!flag.empty())
        return flag;
    if (const char* env = std::getenv("SUBQA_RESOURCES"))
        return env;
    return "resources";
}

subqa::GuidelineProfile resolve_profile(const std::string& profile_arg, const std::string& target_lang,
                                        const std::string& resources)
{
    std::string arg = profile_arg.empty() ? target_lang : profile_arg;
    if (arg.empty())
        arg = "de";
    if (arg.size() > 5 || fs::exists(arg)) // a path, not a language code
        return subqa::load_profile(arg);
    const fs::path shipped = fs::path(resources) / "profiles" / (arg + ".json");
    if (fs::exists(shipped))
        return subqa::load_profile(shipped.string());
    return subqa::builtin_profile(arg);
}

std::optional<subqa::LexiconSet> resolve_lexicons(const std::string& dir, const std::string& source_lang,
                                                  const std::string& target_lang)
{
    if (dir.empty())
        return std::nullopt;
    try {
        return subqa::load_lexicons(dir, source_lang, target_lang);
    } catch (const subqa::ResourceError& e) {
        std::cerr << "subqa: lexicons unavailable, lexicon checks disabled: " << e.what() << "\n";
        return std::nullopt;
    }
}

subqa::ParseResult parse_file(const std::string& path, bool strict)
{
    subqa::ParseOptions options;
    options.strict = strict;
    return subqa::parse_document(read_file(path), options);
}

void print_findings_text(const subqa::Findings& findings, std::ostream& out)
{
    for (const subqa::Finding& f : findings) {
        out << "cue " << f.cue_index << " [" << subqa::to_string(f.severity) << "] "
            << subqa::to_string(f.category) << ": " << f.message;
        if (f.suggestion)
            out << " (suggestion: \"" << *f.suggestion << "\")";
        out << "\n";
    }
}

int emit_findings(const subqa::Findings& findings, const std::string& format)
{
    if (format == "json")
        std::cout << subqa::findings_to_json(findings);
    else
        print_findings_text(findings, std::cout);
    return subqa::has_errors(findings) ? kExitFindings : kExitClean;
}

struct CommonFlags {
    std::string profile;
    std::string lexicons;
    std::string resources;
    std::string source_lang = "en";
    std::string target_lang = "de";
    std::string format = "text";
    bool strict = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags)
{
    cmd->add_option("--profile", flags.profile, "Guideline profile: language code or JSON path");
    cmd->add_option("--lexicons", flags.lexicons, "Lexicon resources directory");
    cmd->add_option("--resources", flags.resources, "Resources root (default $SUBQA_RESOURCES or ./resources)");
    cmd->add_option("--source-lang", flags.source_lang, "Source language code");
    cmd->add_option("--target-lang", flags.target_lang, "Target language code");
    cmd->add_option("--format", flags.format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("--strict", flags.strict, "Treat structural warnings as errors");
}

subqa::LintOptions lint_options(const CommonFlags& flags, const std::optional<subqa::LexiconSet>& lexicons)
{
    subqa::LintOptions options;
    options.profile = resolve_profile(flags.profile, flags.target_lang, resources_root(flags.resources));
    options.lexicons = lexicons ? &*lexicons : nullptr;
    options.source_lang = flags.source_lang;
    options.target_lang = flags.target_lang;
    return options;
}

int run_lint(const std::string& target_file, const CommonFlags& flags)
{
    const auto parsed = parse_file(target_file, flags.strict);
    for (const auto& d : parsed.diagnostics)
        std::cerr << target_file << ":" << d.line << ": warning: " << d.message << "\n";
    const auto lexicons = resolve_lexicons(flags.lexicons, flags.source_lang, flags.target_lang);
    const auto findings = subqa::lint_document(parsed.doc, lint_options(flags, lexicons));
    return emit_findings(findings, flags.format);
}

int run_compare(const std::string& source_file, const std::string& target_file, const CommonFlags& flags)
{
    const auto source = parse_file(source_file, flags.strict);
    const auto target = parse_file(target_file, flags.strict);
    for (const auto& d : source.diagnostics)
        std::cerr << source_file << ":" << d.line << ": warning: " << d.message << "\n";
    for (const auto& d : target.diagnostics)
        std::cerr << target_file << ":" << d.line << ": warning: " << d.message << "\n";
    const auto lexicons = resolve_lexicons(flags.lexicons, flags.source_lang, flags.target_lang);
    const auto findings = subqa::compare_documents(source.doc, target.doc, lint_options(flags, lexicons));
    return emit_findings(findings, flags.format);
}

int run_fix(const std::string& target_file, const std::vector<std::string>& apply,
            const std::string& source_file, const std::string& out_path, bool dry_run, bool in_place,
            const CommonFlags& flags)
{
    for (const std::string& fixer : apply)
        if (fixer != "spacing" && fixer != "repetition" && fixer != "markup") {
            std::cerr << "subqa: unknown fixer '" << fixer << "'\n";
            return kExitInputError;
        }
    const bool wants_markup = std::find(apply.begin(), apply.end(), "markup") != apply.end();
    if (wants_markup && source_file.empty()) {
        std::cerr << "subqa: the markup fixer requires --source\n";
        return kExitInputError;
    }

    auto parsed = parse_file(target_file, flags.strict);
    const auto profile = resolve_profile(flags.profile, flags.target_lang, resources_root(flags.resources));

    std::vector<subqa::Edit> edits;
    subqa::SubtitleDocument doc = parsed.doc;
    for (const std::string& fixer : apply) {
        if (fixer == "spacing") {
            auto result = subqa::fix_spacing(doc, profile);
            doc = std::move(result.doc);
            edits.insert(edits.end(), result.edits.begin(), result.edits.end());
        } else if (fixer == "repetition") {
            auto result = subqa::collapse_repetitions(doc);
            doc = std::move(result.doc);
            edits.insert(edits.end(), result.edits.begin(), result.edits.end());
        } else {
            const auto source = parse_file(source_file, flags.strict);
            const auto alignment = subqa::align_by_time(source.doc, doc);
            for (const auto& pair : alignment) {
                if (!pair.one_to_one())
                    continue;
                auto outcome = subqa::reinsert_source_markup(pair, source.doc, doc);
                if (outcome.partial_span_flagged)
                    std::cerr << "subqa: cue " << pair.target_indices.front()
                              << ": partial source markup span, flag-only\n";
                doc.cues[pair.target_indices.front()] = std::move(outcome.cue);
                edits.insert(edits.end(), outcome.edits.begin(), outcome.edits.end());
            }
        }
    }

    json log;
    log["schema_version"] = 1;
    log["edits"] = json::array();
    for (const subqa::Edit& e : edits)
        log["edits"].push_back({{"cue_index", e.cue_index},
                                {"category", std::string(subqa::to_string(e.category))},
                                {"before", e.before},
                                {"after", e.after}});
    std::cout << log.dump(2) << "\n";

    if (dry_run)
        return kExitClean;

    std::string destination = out_path;
    if (destination.empty()) {
        if (!in_place) {
            std::cerr << "subqa: refusing to overwrite input; pass --out or --in-place\n";
            return kExitInputError;
        }
        destination = target_file;
    } else if (!in_place && fs::exists(destination) && fs::equivalent(destination, target_file)) {
        std::cerr << "subqa: refusing to overwrite input; pass --in-place\n";
        return kExitInputError;
    }
    std::ofstream out(destination, std::ios::binary);
    out << subqa::serialize_document(doc);
    return kExitClean;
}

struct StatsInput {
    std::string name;
    subqa::FileFindings file;
};

subqa::FileFindings stats_from_annotations(const std::string& path)
{
    subqa::FileFindings file;
    file.file = path;
    file.findings = subqa::ingest_annotations(path);
    const json j = json::parse(read_file(path));
    if (j.contains("total_cues")) {
        file.cue_count = j.at("total_cues").get<std::size_t>();
    } else {
        for (const auto& f : file.findings)
            file.cue_count = std::max(file.cue_count, f.cue_index + 1);
    }
    return file;
}

int run_stats(const std::vector<std::string>& inputs, const std::string& format, unsigned jobs,
              const CommonFlags& flags)
{
    std::vector<std::string> annotation_files;
    std::vector<std::pair<std::string, std::string>> pairs; // source, target

    for (const std::string& input : inputs) {
        if (fs::is_directory(input)) {
            std::vector<std::string> entries;
            for (const auto& entry : fs::directory_iterator(input))
                entries.push_back(entry.path().string());
            std::sort(entries.begin(), entries.end());
            for (const std::string& path : entries) {
                if (path.ends_with(".json")) {
                    annotation_files.push_back(path);
                    continue;
                }
                // Pairing convention <name>.<lang>.vtt / .srt
                for (const char* ext : {".vtt", ".srt"}) {
                    const std::string tgt_suffix = "." + flags.target_lang + ext;
                    if (!path.ends_with(tgt_suffix))
                        continue;
                    const std::string stem = path.substr(0, path.size() - tgt_suffix.size());
                    const std::string src = stem + "." + flags.source_lang + ext;
                    if (fs::exists(src))
                        pairs.emplace_back(src, path);
                }
            }
        } else if (input.ends_with(".json")) {
            annotation_files.push_back(input);
        } else {
            std::cerr << "subqa: stats input must be a directory or findings JSON: " << input << "\n";
            return kExitInputError;
        }
    }

    std::vector<subqa::FileFindings> files;
    try {
        for (const std::string& path : annotation_files)
            files.push_back(stats_from_annotations(path));
    } catch (const std::exception& e) {
        std::cerr << "subqa: " << e.what() << "\n";
        return kExitInputError;
    }

    const auto lexicons = resolve_lexicons(flags.lexicons, flags.source_lang, flags.target_lang);
    const auto options = lint_options(flags, lexicons);
    const auto process_pair = [&](const std::pair<std::string, std::string>& pair) {
        subqa::FileFindings file;
        file.file = pair.second;
        const auto source = parse_file(pair.first, flags.strict);
        const auto target = parse_file(pair.second, flags.strict);
        file.cue_count = target.doc.cues.size();
        file.findings = subqa::compare_documents(source.doc, target.doc, options);
        return file;
    };

    try {
        if (jobs <= 1) {
            for (const auto& pair : pairs)
                files.push_back(process_pair(pair));
        } else {
            std::vector<std::future<subqa::FileFindings>> futures;
            for (const auto& pair : pairs)
                futures.push_back(std::async(std::launch::async, process_pair, pair));
            for (auto& fut : futures)
                files.push_back(fut.get());
        }
    } catch (const std::exception& e) {
        std::cerr << "subqa: " << e.what() << "\n";
        return kExitInputError;
    }

    const auto report = subqa::aggregate(files, flags.source_lang, flags.target_lang);
    subqa::ReportFormat rf = subqa::ReportFormat::Text;
    if (format == "json")
        rf = subqa::ReportFormat::Json;
    else if (format == "csv")
        rf = subqa::ReportFormat::Csv;
    else if (format == "plotdata")
        rf = subqa::ReportFormat::PlotData;
    std::cout << subqa::emit_report(report, rf);
    return kExitClean;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Subtitle translation QA toolkit"};
    app.require_subcommand(1);

    CommonFlags lint_flags, compare_flags, fix_flags, stats_flags;

    std::string lint_target;
    auto* lint = app.add_subcommand("lint", "Run single-document checks on a subtitle file");
    lint->add_option("target", lint_target, "Subtitle file")->required();
    add_common(lint, lint_flags);

    std::string cmp_source, cmp_target;
    auto* compare = app.add_subcommand("compare", "Run paired checks on a source/target file pair");
    compare->add_option("source", cmp_source, "Source subtitle file")->required();
    compare->add_option("target", cmp_target, "Target subtitle file")->required();
    add_common(compare, compare_flags);

    std::string fix_target, fix_source, fix_out;
    std::vector<std::string> fix_apply;
    bool dry_run = false, in_place = false;
    auto* fix = app.add_subcommand("fix", "Apply mechanical fixers");
    fix->add_option("target", fix_target, "Subtitle file to fix")->required();
    fix->add_option("--apply", fix_apply, "Fixers: spacing, repetition, markup")
        ->delimiter(',')
        ->required();
    fix->add_option("--source", fix_source, "Source file (required by the markup fixer)");
    fix->add_option("--out", fix_out, "Output path");
    fix->add_flag("--dry-run", dry_run, "Print edits, write nothing");
    fix->add_flag("--in-place", in_place, "Allow overwriting the input file");
    add_common(fix, fix_flags);

    std::vector<std::string> stats_inputs;
    std::string stats_format = "text";
    unsigned jobs = 1;
    auto* stats = app.add_subcommand("stats", "Aggregate findings into a QA report");
    stats->add_option("inputs", stats_inputs, "Directories or findings JSON files")->required();
    stats->add_option("--report-format", stats_format, "Report format: text, json, csv, plotdata")
        ->check(CLI::IsMember({"text", "json", "csv", "plotdata"}));
    stats->add_option("--jobs", jobs, "Concurrent file pairs");
    add_common(stats, stats_flags);

    CLI11_PARSE(app, argc, argv);

    try {
        if (lint->parsed())
            return run_lint(lint_target, lint_flags);
        if (compare->parsed())
            return run_compare(cmp_source, cmp_target, compare_flags);
        if (fix->parsed())
            return run_fix(fix_target, fix_apply, fix_source, fix_out, dry_run, in_place, fix_flags);
        if (stats->parsed())
            return run_stats(stats_inputs, stats_format, jobs, stats_flags);
    } catch (const subqa::ParseError& e) {
        std::cerr << "subqa: parse error at line " << e.line << ", column " << e.column << ": "
                  << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "subqa: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
