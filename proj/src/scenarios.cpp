#include "vdspec/scenarios.hpp"

#include <algorithm>
#include <cmath>

#include "vdspec/kernels.hpp"

namespace vdspec {

namespace {

constexpr std::size_t kCatalogPoints = 32768;
constexpr double kCatalogDx = 0.1;
constexpr double kCatalogSigma = 50.0;

ScenarioConfig catalog_defaults(std::string name) {
  ScenarioConfig cfg;
  cfg.name = std::move(name);
  cfg.grid = Grid1D::centered(kCatalogPoints, kCatalogDx);
  cfg.dt = 1.0;
  cfg.n_steps = 1000;
  cfg.tap = {0.0, kCatalogDx};
  return cfg;
}

}  // namespace

void ScenarioConfig::validate() const {
  grid.validate();
  EvolutionConfig{dt, n_steps, potential}.validate();
  resolve_tap(grid, tap);
  if (packets.empty()) throw ValidationError("at least one packet", "packets");
  for (std::size_t i = 0; i < packets.size(); ++i) {
    const auto& p = packets[i].params;
    const std::string key = "packets[" + std::to_string(i) + "]";
    if (!(p.sigma_x >= 4.0 * grid.dx))
      throw ValidationError("sigma_x must be at least 4 dx", key);
    if (p.x0 < grid.x_min || p.x0 > grid.x_max())
      throw ValidationError("x0 lies outside the domain", key);
    if (boundary_amplitude_ratio(grid, p) > 1e-12)
      throw ValidationError("packet does not fit inside the domain", key);
    const auto& c = packets[i].coefficient;
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()) ||
        !std::isfinite(p.k0) || !std::isfinite(p.global_phase))
      throw ValidationError("non-finite packet parameter", key);
  }
  if (zero_pad_factor < 1)
    throw ValidationError("must be at least 1", "zero_pad_factor");
  if (!(cvd_bin_width > 0.0))
    throw ValidationError("must be positive", "cvd_bin_width");
  if (!(rho_floor >= 0.0)) throw ValidationError("must be >= 0", "rho_floor");
  if (!(support_floor >= 0.0 && support_floor < 1.0))
    throw ValidationError("must be in [0, 1)", "support_floor");
  if (!(window_abort_fraction > 0.0))
    throw ValidationError("must be positive", "window_abort_fraction");
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"co_propagating",
       "k0=1 from x0=-250 and k0=0.5 from x0=-125; centroids meet at x=0, "
       "t=250"},
      {"counter_antisymmetric",
       "k0=+/-0.5 from x0=-/+250 with opposite sign; psi(0,t) = 0"},
      {"counter_symmetric",
       "k0=+/-0.5 from x0=-/+250 with equal sign; even state"},
      {"single_gaussian", "one packet, x0=-250, sigma_x=50, k0=1"},
  };
  return entries;
}

ScenarioConfig build_scenario(std::string_view name) {
  const double r = 1.0 / std::sqrt(2.0);
  ScenarioConfig cfg = catalog_defaults(std::string(name));
  if (name == "single_gaussian") {
    cfg.packets = {{{-250.0, kCatalogSigma, 1.0, 0.0}, 1.0}};
  } else if (name == "counter_symmetric") {
    cfg.packets = {{{-250.0, kCatalogSigma, 0.5, 0.0}, r},
                   {{250.0, kCatalogSigma, -0.5, 0.0}, r}};
  } else if (name == "counter_antisymmetric") {
    cfg.packets = {{{-250.0, kCatalogSigma, 0.5, 0.0}, r},
                   {{250.0, kCatalogSigma, -0.5, 0.0}, -r}};
  } else if (name == "co_propagating") {
    cfg.packets = {{{-250.0, kCatalogSigma, 1.0, 0.0}, r},
                   {{-125.0, kCatalogSigma, 0.5, 0.0}, r}};
  } else {
    std::string known;
    for (const auto& e : catalog()) {
      if (!known.empty()) known += ", ";
      known += e.name;
    }
    throw ValidationError("unknown scenario '" + std::string(name) +
                              "'; known scenarios: " + known,
                          "scenario");
  }
  cfg.validate();
  return cfg;
}

Wavefunction initial_state(const ScenarioConfig& cfg) {
  Wavefunction wf{cfg.grid, vector_complex(cfg.grid.n_points), 0.0};
  for (const auto& term : cfg.packets) {
    wf = superpose(wf, gaussian_packet(cfg.grid, term.params), 1.0,
                   term.coefficient);
  }
  return wf;
}

std::pair<double, double> window_residuals(const DetectorRecord& record) {
  auto envelope = [&](std::size_t n) {
    return std::max({std::abs(record.psi0[n]), std::abs(record.psi_plus[n]),
                     std::abs(record.psi_minus[n])});
  };
  double peak = 0.0;
  for (std::size_t n = 0; n < record.size(); ++n)
    peak = std::max(peak, envelope(n));
  if (peak == 0.0) return {0.0, 0.0};
  return {envelope(0) / peak, envelope(record.size() - 1) / peak};
}

ScenarioResult run_scenario(const ScenarioConfig& cfg) {
  cfg.validate();
  ScenarioResult res;
  res.config = cfg;

  const Wavefunction wf0 = initial_state(cfg);
  const TapConfig taps[] = {cfg.tap};
  auto prop = propagate(wf0, {cfg.dt, cfg.n_steps, cfg.potential}, taps);
  res.record = phase_unwind(prop.records.front());

  auto& diag = res.diagnostics;
  diag.initial_norm = wf0.squared_norm();
  diag.max_norm_drift = prop.max_norm_drift;
  std::tie(diag.residual_t0, diag.residual_T) = window_residuals(res.record);
  diag.window_complete = diag.residual_t0 < 1e-6 && diag.residual_T < 1e-6;
  for (const auto& z : res.record.psi0)
    diag.max_abs_psi0 = std::max(diag.max_abs_psi0, std::abs(z));
  diag.threads = kernels::omp::max_threads();
  if (diag.residual_T > cfg.window_abort_fraction)
    throw NumericalError("window incomplete: tap residual at t=T is " +
                         std::to_string(diag.residual_T) + " of peak");

  const std::size_t pad = cfg.zero_pad_factor;
  res.bqvd_discrete = bqvd_spectrum_discrete(res.record, pad);
  res.bqvd_continuous = bqvd_spectrum_continuous(res.record, pad);
  res.qvd = qvd_spectrum(res.record, pad);
  res.cvd = cvd_spectrum(res.record, cfg.cvd_bin_width, cfg.rho_floor);
  diag.cvd_skipped_samples = res.cvd.skipped_samples;

  res.exact = exact_spectrum(wf0, res.bqvd_discrete.k_values);
  res.cvd_on_grid = resample_histogram(res.cvd, res.exact.k_values);

  const KInterval all{};
  const double floor = cfg.support_floor;
  res.bqvd_discrete_report = compare(res.bqvd_discrete, res.exact, all, floor);
  res.bqvd_continuous_report =
      compare(res.bqvd_continuous, res.exact, all, floor);
  res.qvd_report = compare(res.qvd, restrict_to(res.exact, {0.0}), all, floor);
  res.cvd_report = compare(res.cvd_on_grid, res.exact, all, floor);
  return res;
}

}  // namespace vdspec
