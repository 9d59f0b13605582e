#pragma once

#include "subqa/finding.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace subqa {

class UnknownCategory : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ReportSchemaViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IndexOutOfRange : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CategoryStat {
    std::size_t cue_count = 0; // cues with >= 1 finding of the category
    double percentage = 0.0;   // cue_count / total_cues * 100, two decimals
};

struct FileFindings {
    std::string file;
    std::size_t cue_count = 0;
    Findings findings;
};

struct FileReport {
    std::string file;
    std::size_t total_cues = 0;
    std::map<ErrorCategory, CategoryStat> per_category;
    double clean_percentage = 0.0;
};

struct QaReport {
    std::size_t total_cues = 0;
    std::map<ErrorCategory, CategoryStat> per_category;
    double clean_percentage = 0.0;
    std::vector<FileReport> per_file;
    std::string source_lang;
    std::string target_lang;
};

// Half-up rounding to two decimals, for stable report diffs.
double round2(double value);

QaReport aggregate(const std::vector<FileFindings>& files, const std::string& source_lang,
                   const std::string& target_lang);

enum class ReportFormat { Json, Csv, Text, PlotData };

std::string emit_report(const QaReport& report, ReportFormat format);

QaReport report_from_json(const std::string& json_text);

inline constexpr int kFindingsSchemaVersion = 1;
inline constexpr int kReportSchemaVersion = 1;

std::string findings_to_json(const Findings& findings);

// Reads a findings-JSON file (the schema emitted by findings_to_json); this is
// how externally annotated corpora enter the stats pipeline.
Findings ingest_annotations(const std::string& path);

Findings findings_from_json(const std::string& json_text);

} // namespace subqa
