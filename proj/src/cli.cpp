#include "vdspec/cli.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <optional>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "vdspec/config.hpp"
#include "vdspec/output.hpp"

namespace vdspec::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// VDSPEC_THREADS, if set to a positive integer.
std::optional<int> thread_cap() {
  const char* env = std::getenv("VDSPEC_THREADS");
  if (env == nullptr || *env == '\0') return std::nullopt;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1)
    throw ValidationError("must be a positive integer", "VDSPEC_THREADS");
  return static_cast<int>(v);
}

int cmd_list(bool as_json, std::ostream& out) {
  if (as_json) {
    json arr = json::array();
    for (const auto& e : catalog())
      arr.push_back({{"name", e.name}, {"description", e.description}});
    out << arr.dump(2) << "\n";
  } else {
    for (const auto& e : catalog())
      out << e.name << "  " << e.description << "\n";
  }
  return kExitOk;
}

struct RunJob {
  ScenarioConfig cfg;
  fs::path dir;
};

int run_one(const RunJob& job, std::ostream& out, std::ostream& err,
            std::mutex& io) {
  try {
    const auto result = run_scenario(job.cfg);
    write_outputs(result, job.dir);
    std::lock_guard lock(io);
    out << job.cfg.name << ": wrote " << job.dir.string()
        << " (bqvd l2_rel=" << result.bqvd_discrete_report.l2_rel
        << ", qvd l2_rel=" << result.qvd_report.l2_rel << ")\n";
    return kExitOk;
  } catch (const ValidationError& e) {
    std::lock_guard lock(io);
    err << "error: " << job.cfg.name << ": " << e.what() << "\n";
    return kExitConfig;
  } catch (const NumericalError& e) {
    std::lock_guard lock(io);
    err << "numerical failure: " << job.cfg.name << ": " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::lock_guard lock(io);
    err << "error: " << job.cfg.name << ": " << e.what() << "\n";
    return kExitConfig;
  }
}

int cmd_run(std::vector<std::string> scenarios, const std::string& config,
            const std::string& out_dir, std::optional<std::size_t> zero_pad,
            bool parallel, std::ostream& out, std::ostream& err) {
  std::vector<RunJob> jobs;
  try {
    if (scenarios.empty() == config.empty())
      throw ValidationError("give exactly one of --scenario or --config");
    if (std::find(scenarios.begin(), scenarios.end(), "all") !=
        scenarios.end()) {
      scenarios.clear();
      for (const auto& e : catalog()) scenarios.emplace_back(e.name);
    }
    if (!config.empty()) {
      jobs.push_back({load_run_config(config), out_dir});
    } else {
      for (const auto& name : scenarios)
        jobs.push_back({build_scenario(name), out_dir});
      if (jobs.size() > 1)
        for (auto& j : jobs) j.dir = fs::path(out_dir) / j.cfg.name;
    }
    if (zero_pad) {
      for (auto& j : jobs) {
        j.cfg.zero_pad_factor = *zero_pad;
        j.cfg.validate();
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  std::optional<int> cap;
  try {
    cap = thread_cap();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  if (cap) omp_set_num_threads(*cap);

  std::mutex io;
  std::vector<int> codes(jobs.size(), kExitOk);
  if (!parallel || jobs.size() == 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i)
      codes[i] = run_one(jobs[i], out, err, io);
  } else {
    const int hw = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    const auto workers = static_cast<std::size_t>(
        std::min<int>(cap.value_or(hw), static_cast<int>(jobs.size())));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        omp_set_num_threads(1);
        for (std::size_t i = next++; i < jobs.size(); i = next++)
          codes[i] = run_one(jobs[i], out, err, io);
      });
    }
    for (auto& t : pool) t.join();
  }
  return *std::max_element(codes.begin(), codes.end());
}

Spectrum column_spectrum(const CsvTable& t, const std::string& col) {
  Spectrum s;
  s.k_values = t.columns.at(t.column("k"));
  const std::size_t c = col.empty() ? 1 : t.column(col);
  if (c >= t.columns.size())
    throw ValidationError("file has no data column");
  s.density = t.columns[c];
  return s;
}

int cmd_compare(const std::string& path_a, const std::string& path_b,
                const std::string& col_a, const std::string& col_b,
                KInterval region, double floor, double tol, std::ostream& out,
                std::ostream& err) {
  ComparisonReport rep;
  try {
    const auto a = column_spectrum(read_csv(path_a), col_a);
    const auto b = column_spectrum(read_csv(path_b), col_b);
    rep = compare(a, b, region, floor);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  json j = report_to_json(rep);
  j["tol"] = tol;
  j["pass"] = rep.l2_rel < tol;
  out << j.dump(2) << "\n";
  return rep.l2_rel < tol ? kExitOk : kExitTolerance;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Virtual-detector momentum spectra for 1-D wavepackets",
               "vdspec"};
  app.require_subcommand(1);

  bool list_json = false;
  auto* list = app.add_subcommand("list", "List the benchmark scenarios");
  list->add_flag("--json", list_json, "Machine-readable output");

  std::vector<std::string> scenarios;
  std::string config, out_dir;
  std::optional<std::size_t> zero_pad;
  bool parallel = false;
  auto* run_cmd = app.add_subcommand("run", "Run scenarios and write spectra");
  run_cmd->add_option("--scenario", scenarios,
                      "Catalog scenario name (repeatable, or 'all')");
  run_cmd->add_option("--config", config, "JSON run config");
  run_cmd->add_option("--out", out_dir, "Output directory")->required();
  run_cmd->add_option("--zero-pad", zero_pad, "Zero-padding factor")
      ->check(CLI::PositiveNumber);
  run_cmd->add_flag("--parallel", parallel,
                    "Run several scenarios concurrently");

  std::string path_a, path_b, col_a, col_b;
  double kmin = -std::numeric_limits<double>::infinity();
  double kmax = std::numeric_limits<double>::infinity();
  double floor = 1e-3, tol = 0.03;
  auto* cmp = app.add_subcommand("compare", "Compare two spectra CSV columns");
  cmp->add_option("path_a", path_a, "CSV with the spectrum under test")
      ->required();
  cmp->add_option("path_b", path_b, "CSV with the reference spectrum")
      ->required();
  cmp->add_option("--col-a", col_a, "Column of path_a (default: second)");
  cmp->add_option("--col-b", col_b, "Column of path_b (default: second)");
  cmp->add_option("--kmin", kmin, "Lower edge of the k region");
  cmp->add_option("--kmax", kmax, "Upper edge of the k region");
  cmp->add_option("--floor", floor, "Support floor relative to the peak");
  cmp->add_option("--tol", tol, "Pass threshold on l2_rel");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  if (list->parsed()) return cmd_list(list_json, out);
  if (run_cmd->parsed())
    return cmd_run(scenarios, config, out_dir, zero_pad, parallel, out, err);
  return cmd_compare(path_a, path_b, col_a, col_b, {kmin, kmax}, floor, tol,
                     out, err);
}

}  // namespace vdspec::cli
