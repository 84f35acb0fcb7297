#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vdspec/analysis.hpp"
#include "vdspec/detectors.hpp"
#include "vdspec/propagator.hpp"

namespace vdspec {

struct PacketTerm {
  GaussianParams params;
  complex coefficient{1.0, 0.0};
};

/// Everything needed to reproduce one benchmark run.
struct ScenarioConfig {
  std::string name;
  Grid1D grid;
  std::vector<PacketTerm> packets;
  double dt = 1.0;
  std::size_t n_steps = 1000;
  TapConfig tap;
  PotentialSpec potential;
  std::size_t zero_pad_factor = 4;
  double cvd_bin_width = 0.005;
  double rho_floor = 1e-12;
  double support_floor = 1e-3;
  // run_scenario fails when the tap residual at t = T exceeds this fraction
  // of the peak tap amplitude
  double window_abort_fraction = 1e-2;

  void validate() const;
};

struct CatalogEntry {
  std::string_view name;
  std::string_view description;
};

/// The four benchmark scenarios, sorted by name.
const std::vector<CatalogEntry>& catalog();

/// Throws ValidationError listing the catalog for unknown names.
ScenarioConfig build_scenario(std::string_view name);

/// Coefficient-weighted sum of the configured packets at t = 0.
Wavefunction initial_state(const ScenarioConfig& cfg);

struct ScenarioDiagnostics {
  std::size_t cvd_skipped_samples = 0;
  double initial_norm = 0.0;
  double max_norm_drift = 0.0;
  // tap envelope max(|psi0|, |psi+|, |psi-|) at t = 0 and t = T relative to
  // its peak over the run
  double residual_t0 = 0.0;
  double residual_T = 0.0;
  bool window_complete = false;  // both residuals < 1e-6
  double max_abs_psi0 = 0.0;
  int threads = 1;
};

struct ScenarioResult {
  ScenarioConfig config;
  DetectorRecord record;  // phase-unwound
  Spectrum exact;         // signed detector k grid
  Spectrum cvd;           // sparse histogram
  Spectrum cvd_on_grid;   // cvd resampled onto exact.k_values
  Spectrum qvd;
  Spectrum bqvd_discrete;
  Spectrum bqvd_continuous;
  ComparisonReport cvd_report;
  ComparisonReport qvd_report;
  ComparisonReport bqvd_discrete_report;
  ComparisonReport bqvd_continuous_report;
  ScenarioDiagnostics diagnostics;
};

/// Relative tap residuals at the window edges.
std::pair<double, double> window_residuals(const DetectorRecord& record);

/// Propagate, extract every spectrum and compare each against the exact
/// reference. Throws NumericalError on non-finite states or when the tap
/// residual at t = T exceeds cfg.window_abort_fraction.
ScenarioResult run_scenario(const ScenarioConfig& cfg);

}  // namespace vdspec
