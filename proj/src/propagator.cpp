#include "vdspec/propagator.hpp"

#include <cmath>

#include "vdspec/kernels.hpp"

namespace vdspec {

double PotentialSpec::operator()(double t) const {
  switch (kind) {
    case Kind::zero:
      return 0.0;
    case Kind::constant:
      return value;
    case Kind::time_dependent:
      return value_fn ? value_fn(t) : 0.0;
  }
  return 0.0;
}

void EvolutionConfig::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt))
    throw ValidationError("must be positive and finite", "dt");
  if (n_steps < 1) throw ValidationError("must be at least 1", "n_steps");
  if (potential.kind == PotentialSpec::Kind::constant &&
      !std::isfinite(potential.value))
    throw ValidationError("must be finite", "potential_value");
}

double fft_wavenumber(std::size_t j, std::size_t n, double dx) {
  const auto sj = static_cast<double>(j);
  const auto sn = static_cast<double>(n);
  const double signed_j = (2 * j < n) ? sj : sj - sn;
  return 2.0 * kPi * signed_j / (sn * dx);
}

KineticStepper::KineticStepper(const Grid1D& grid, double dt,
                               const Units& units)
    : fft_(grid.n_points), multiplier_(grid.n_points) {
  const double inv_n = 1.0 / static_cast<double>(grid.n_points);
  const double c = units.hbar * dt / (2.0 * units.mass);
  for (std::size_t j = 0; j < grid.n_points; ++j) {
    const double k = fft_wavenumber(j, grid.n_points, grid.dx);
    multiplier_[j] = std::polar(inv_n, -c * k * k);
  }
}

void KineticStepper::step() {
  fft_.forward();
  kernels::omp::multiply(fft_.buffer(), multiplier_);
  fft_.backward();
}

namespace {

void require_finite(std::span<const complex> psi) {
  for (const auto& z : psi)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw NumericalError("non-finite amplitude in wavefunction");
}

double squared_norm(std::span<const complex> psi, double dx) {
  double s = 0.0;
  for (const auto& z : psi) s += std::norm(z);
  return s * dx;
}

void scale(std::span<complex> psi, complex factor) {
  for (auto& z : psi) z *= factor;
}

}  // namespace

Wavefunction free_step(const Wavefunction& wf, double dt, const Units& units) {
  require_finite(wf.amplitudes);
  KineticStepper stepper(wf.grid, dt, units);
  std::copy(wf.amplitudes.begin(), wf.amplitudes.end(),
            stepper.state().begin());
  stepper.step();
  Wavefunction out{wf.grid,
                   vector_complex(stepper.state().begin(),
                                  stepper.state().end()),
                   wf.time + dt};
  return out;
}

double potential_phase(const PotentialSpec& potential, double t, double dt,
                       const Units& units) {
  switch (potential.kind) {
    case PotentialSpec::Kind::zero:
      return 0.0;
    case PotentialSpec::Kind::constant:
      return potential.value * dt / units.hbar;
    case PotentialSpec::Kind::time_dependent:
      break;
  }
  const double v0 = potential(t);
  const double vm = potential(t + 0.5 * dt);
  const double v1 = potential(t + dt);
  if (!std::isfinite(v0) || !std::isfinite(vm) || !std::isfinite(v1))
    throw NumericalError("potential is not finite near t=" +
                         std::to_string(t));
  return dt / 6.0 * (v0 + 4.0 * vm + v1) / units.hbar;
}

std::pair<Wavefunction, double> apply_uniform_potential(
    const Wavefunction& wf, const PotentialSpec& potential, double t,
    double dt, const Units& units) {
  const double phi = potential_phase(potential, t, dt, units);
  Wavefunction out = wf;
  if (phi != 0.0) scale(out.amplitudes, std::polar(1.0, -phi));
  return {std::move(out), phi};
}

PropagationResult propagate(const Wavefunction& wf0,
                            const EvolutionConfig& cfg,
                            std::span<const TapConfig> taps,
                            const Units& units) {
  wf0.grid.validate();
  cfg.validate();
  if (wf0.amplitudes.size() != wf0.grid.n_points)
    throw ValidationError("amplitude count does not match the grid");
  require_finite(wf0.amplitudes);

  std::vector<TapIndices> idx;
  idx.reserve(taps.size());
  for (const auto& tap : taps) idx.push_back(resolve_tap(wf0.grid, tap));

  const std::size_t n_samples = cfg.n_steps + 1;
  PropagationResult result;
  result.records.resize(taps.size());
  for (std::size_t i = 0; i < taps.size(); ++i) {
    auto& r = result.records[i];
    r.tap = taps[i];
    r.dt = cfg.dt;
    r.times.reserve(n_samples);
    r.psi0.reserve(n_samples);
    r.psi_plus.reserve(n_samples);
    r.psi_minus.reserve(n_samples);
    r.rho.reserve(n_samples);
    r.current.reserve(n_samples);
    r.v0_phase.reserve(n_samples);
  }

  KineticStepper stepper(wf0.grid, cfg.dt, units);
  auto psi = stepper.state();
  std::copy(wf0.amplitudes.begin(), wf0.amplitudes.end(), psi.begin());

  const double dx = wf0.grid.dx;
  const double norm0 = squared_norm(psi, dx);
  double t = wf0.time;
  double phase = 0.0;

  auto sample = [&] {
    for (std::size_t i = 0; i < idx.size(); ++i) {
      auto& r = result.records[i];
      const auto& ix = idx[i];
      const auto local = measure_local(psi[ix.centre - 1], psi[ix.centre],
                                       psi[ix.centre + 1], dx, units);
      r.times.push_back(t);
      r.psi0.push_back(psi[ix.centre]);
      r.psi_plus.push_back(psi[ix.plus]);
      r.psi_minus.push_back(psi[ix.minus]);
      r.rho.push_back(local.rho);
      r.current.push_back(local.current);
      r.v0_phase.push_back(phase);
    }
  };

  sample();
  const bool has_potential = !cfg.potential.is_zero();
  const double half = 0.5 * cfg.dt;
  auto half_kick = [&](double start, std::size_t step) {
    double phi = 0.0;
    try {
      phi = potential_phase(cfg.potential, start, half, units);
    } catch (const NumericalError&) {
      throw NumericalError("potential is not finite", step);
    }
    scale(psi, std::polar(1.0, -phi));
    phase += phi;
  };
  for (std::size_t n = 0; n < cfg.n_steps; ++n) {
    if (has_potential) half_kick(t, n + 1);
    stepper.step();
    if (has_potential) half_kick(t + half, n + 1);
    t = wf0.time + static_cast<double>(n + 1) * cfg.dt;

    const double norm = squared_norm(psi, dx);
    if (!std::isfinite(norm))
      throw NumericalError("non-finite wavefunction during propagation", n + 1);
    result.max_norm_drift = std::max(result.max_norm_drift,
                                     std::abs(norm - norm0));
    sample();
  }

  result.final_state = Wavefunction{
      wf0.grid, vector_complex(psi.begin(), psi.end()), t};
  return result;
}

complex analytic_free_gaussian(const GaussianParams& p, double x, double t,
                               const Units& units) {
  const double s2 = p.sigma_x * p.sigma_x;
  const double velocity = units.hbar * p.k0 / units.mass;
  const complex width{1.0, units.hbar * t / (2.0 * units.mass * s2)};
  const double u = x - p.x0 - velocity * t;
  const complex exponent =
      -u * u / (4.0 * s2 * width) +
      complex{0.0, p.k0 * (x - p.x0) -
                       units.hbar * p.k0 * p.k0 * t / (2.0 * units.mass) +
                       p.global_phase};
  return std::pow(2.0 * kPi * s2, -0.25) / std::sqrt(width) *
         std::exp(exponent);
}

}  // namespace vdspec
