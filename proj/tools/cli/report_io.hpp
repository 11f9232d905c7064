#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cgauge/report.hpp"

namespace cgauge::cli {

inline constexpr int kSchemaVersion = 1;

/// Plot-ready table written as series.csv.
struct Series {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// One suite run plus everything that is written next to it.
struct SuiteResult {
  VerificationReport report;
  std::vector<SuiteResult> members;
  std::optional<Series> series;
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();
  std::string error;  ///< non-empty on a numerical failure

  /// True when this suite or any member failed an asserted check or hit a
  /// numerical failure.
  bool failed() const;
};

/// Decimal string with 17 significant digits ("inf", "-inf", "nan" kept).
std::string format17(double v);

nlohmann::ordered_json to_json(const SuiteResult& result);

/// CSV with a header row, comma separators and LF line endings.
std::string to_csv(const Series& series);

/// Writes report.json and, when present, series.csv into dir.
void write_outputs(const SuiteResult& result, const std::filesystem::path& dir);

}  // namespace cgauge::cli
