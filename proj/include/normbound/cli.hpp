#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "normbound/verdict.hpp"

namespace normbound::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "normbound.report/1";
inline constexpr const char* kBatchSchema = "normbound.batch/1";

enum class Format { Json, Csv, Text };

struct ParsedIdeal {
  MonomialIdeal ideal;
  std::string label;
  std::vector<std::string> notices;  // e.g. redundant generators dropped
};

/// Reads an ideal file {"variables": [...], "generators": [[...], ...],
/// "label": "..."}. Errors name the offending line or field.
ParsedIdeal parse_ideal(std::istream& in, const std::string& source = "<stdin>");
ParsedIdeal parse_ideal(const std::filesystem::path& path);
ParsedIdeal parse_ideal_json(const Json& doc, const std::string& source);

/// Inverse of parse_ideal for canonical ideals.
Json ideal_json(const MonomialIdeal& ideal, const std::string& label = {});

Json report_json(const AnalysisReport& report);
std::string render(const AnalysisReport& report, Format format);

/// 0 all evaluated checks hold, 2 failing check or internal violation,
/// 3 fit budget exhausted.
int exit_code(const AnalysisReport& report);

struct HilbertRows {
  bool degree_mode = false;
  std::vector<std::array<Integer, 2>> rows;  // n = 1..N: powers, closure powers
};
HilbertRows hilbert_rows(const MonomialIdeal& ideal, int max_power);
std::string hilbert_csv(const HilbertRows& table);

struct BatchEntry {
  std::string source;
  std::optional<Json> ideal;  // inline ideal, otherwise read from source
};

/// A directory of *.json files, or a manifest: a JSON array whose items are
/// paths (relative to the manifest) or inline ideal objects.
std::vector<BatchEntry> batch_entries(const std::filesystem::path& path);

struct BatchResult {
  std::vector<AnalysisReport> reports;  // sorted by label
  std::vector<std::pair<std::string, std::string>> errors;  // source, message
};

BatchResult run_batch(const std::vector<BatchEntry>& entries, const AnalysisConfig& config, unsigned workers);
Json batch_json(const BatchResult& batch, const AnalysisConfig& config);
std::string render(const BatchResult& batch, const AnalysisConfig& config, Format format);
int exit_code(const BatchResult& batch);

/// Worker count: NORMBOUND_THREADS if set, else hardware concurrency.
unsigned worker_cap();

/// Full command line without the program name. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace normbound::cli
