#include "vdspec/output.hpp"

#include <unistd.h>

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "vdspec/config.hpp"

namespace vdspec {

using nlohmann::json;

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value,
                                 std::chars_format::scientific, 15);
  return std::string(buf, res.ptr);
}

void write_file_atomic(const std::filesystem::path& path,
                       std::string_view contents) {
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp.string() + " for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw Error("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string spectra_csv(const ScenarioResult& r) {
  const auto& k = r.exact.k_values;
  const std::size_t n_pos = (k.size() - 1) / 2;  // index of k = 0
  std::string s = "k,exact,cvd,qvd,bqvd_discrete,bqvd_continuous\n";
  s.reserve(k.size() * 6 * 24);
  for (std::size_t i = 0; i < k.size(); ++i) {
    const double qvd = i >= n_pos ? r.qvd.density[i - n_pos] : 0.0;
    for (double v : {k[i], r.exact.density[i], r.cvd_on_grid.density[i], qvd,
                     r.bqvd_discrete.density[i], r.bqvd_continuous.density[i]}) {
      s += format_number(v);
      s += ',';
    }
    s.back() = '\n';
  }
  return s;
}

std::string cvd_bins_csv(const ScenarioResult& r) {
  std::string s = "k,density\n";
  for (std::size_t i = 0; i < r.cvd.size(); ++i) {
    s += format_number(r.cvd.k_values[i]);
    s += ',';
    s += format_number(r.cvd.density[i]);
    s += '\n';
  }
  return s;
}

json report_to_json(const ComparisonReport& rep) {
  // +/-inf region bounds serialize as null
  return {{"region", {rep.region.lo, rep.region.hi}},
          {"support_floor", rep.support_floor},
          {"support_points", rep.support_points},
          {"l1", rep.l1},
          {"l2_rel", rep.l2_rel},
          {"sup_rel", rep.sup_rel},
          {"overlap", rep.overlap},
          {"peak_k_a", rep.peak_k_a},
          {"peak_k_b", rep.peak_k_b}};
}

json result_to_json(const ScenarioResult& r) {
  const auto& d = r.diagnostics;
  json j;
  j["tool"] = "vdspec";
  j["version"] = VDSPEC_VERSION;
  j["config"] = config_to_json(r.config);
  j["diagnostics"] = {{"cvd_skipped_samples", d.cvd_skipped_samples},
                      {"initial_norm", d.initial_norm},
                      {"max_norm_drift", d.max_norm_drift},
                      {"residual_t0", d.residual_t0},
                      {"residual_T", d.residual_T},
                      {"window_complete", d.window_complete},
                      {"max_abs_psi0", d.max_abs_psi0},
                      {"threads", d.threads},
                      {"n_k", r.exact.size()}};
  j["reports"] = {{"cvd", report_to_json(r.cvd_report)},
                  {"qvd", report_to_json(r.qvd_report)},
                  {"bqvd_discrete", report_to_json(r.bqvd_discrete_report)},
                  {"bqvd_continuous", report_to_json(r.bqvd_continuous_report)}};
  j["totals"] = {{"exact_power", total_power(r.exact)},
                 {"qvd_power", total_power(r.qvd)},
                 {"bqvd_discrete_power", total_power(r.bqvd_discrete)},
                 {"cvd_mass", histogram_mass(r.cvd)}};
  return j;
}

void write_outputs(const ScenarioResult& result,
                   const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  write_file_atomic(dir / "spectra.csv", spectra_csv(result));
  write_file_atomic(dir / "cvd_bins.csv", cvd_bins_csv(result));
  write_file_atomic(dir / "report.json", result_to_json(result).dump(2) + "\n");
}

std::size_t CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return i;
  throw ValidationError("no column named '" + std::string(name) + "'");
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_number(const std::string& cell, std::size_t line_no) {
  if (cell == "nan") return std::nan("");
  if (cell == "inf") return HUGE_VAL;
  if (cell == "-inf") return -HUGE_VAL;
  double v = 0.0;
  const auto* end = cell.data() + cell.size();
  const auto res = std::from_chars(cell.data(), end, v);
  if (res.ec != std::errc() || res.ptr != end)
    throw ValidationError("bad number '" + cell + "' on line " +
                          std::to_string(line_no));
  return v;
}

}  // namespace

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read " + path.string());
  CsvTable t;
  std::string line;
  if (!std::getline(in, line)) throw ValidationError(path.string() + " is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  t.header = split(line);
  t.columns.resize(t.header.size());
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != t.header.size())
      throw ValidationError(path.string() + ": wrong column count on line " +
                            std::to_string(line_no));
    for (std::size_t c = 0; c < cells.size(); ++c)
      t.columns[c].push_back(parse_number(cells[c], line_no));
  }
  return t;
}

}  // namespace vdspec
