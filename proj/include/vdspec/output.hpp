#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "vdspec/scenarios.hpp"

namespace vdspec {

/// Locale-independent scientific notation with 16 significant digits;
/// "nan" / "inf" / "-inf" for non-finite values.
std::string format_number(double value);

/// Write `contents` to a sibling temp file, then rename over `path`.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view contents);

/// spectra.csv: k, exact, cvd, qvd, bqvd_discrete, bqvd_continuous on the
/// signed detector k grid. qvd is 0 for k < 0; cvd is the nearest-bin value.
std::string spectra_csv(const ScenarioResult& result);

/// cvd_bins.csv: k (bin centre), density.
std::string cvd_bins_csv(const ScenarioResult& result);

nlohmann::json report_to_json(const ComparisonReport& report);
nlohmann::json result_to_json(const ScenarioResult& result);

/// Writes spectra.csv, cvd_bins.csv and report.json into `dir`
/// (created if missing).
void write_outputs(const ScenarioResult& result,
                   const std::filesystem::path& dir);

/// Parsed CSV with a header row and numeric columns.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;

  /// Column index by name; throws ValidationError if absent.
  std::size_t column(std::string_view name) const;
};

CsvTable read_csv(const std::filesystem::path& path);

}  // namespace vdspec
