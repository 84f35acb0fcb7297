#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "vdspec/core.hpp"
#include "vdspec/fft.hpp"
#include "vdspec/record.hpp"

namespace vdspec {

/// Spatially uniform potential V0(t).
struct PotentialSpec {
  enum class Kind { zero, constant, time_dependent };

  Kind kind = Kind::zero;
  double value = 0.0;                    // used by Kind::constant
  std::function<double(double)> value_fn;  // used by Kind::time_dependent

  static PotentialSpec zero() { return {}; }
  static PotentialSpec constant(double v) { return {Kind::constant, v, {}}; }
  static PotentialSpec time_dependent(std::function<double(double)> fn) {
    return {Kind::time_dependent, 0.0, std::move(fn)};
  }

  bool is_zero() const noexcept {
    return kind == Kind::zero || (kind == Kind::constant && value == 0.0);
  }
  double operator()(double t) const;
};

struct EvolutionConfig {
  double dt = 1.0;
  std::size_t n_steps = 1;
  PotentialSpec potential;

  void validate() const;
};

/// exp(-i hbar k^2 dt / 2m) through a forward/backward FFT pair on one
/// fixed grid. The 1/N normalization is folded into the multiplier.
class KineticStepper {
 public:
  KineticStepper(const Grid1D& grid, double dt, const Units& units = {});

  /// Work buffer holding the state between steps.
  std::span<complex> state() noexcept { return fft_.buffer(); }
  std::span<const complex> state() const noexcept { return fft_.buffer(); }

  /// Advance state() by dt.
  void step();

 private:
  Fft fft_;
  vector_complex multiplier_;
};

/// Angular wavenumber of FFT mode j on an n-point grid with spacing dx.
double fft_wavenumber(std::size_t j, std::size_t n, double dx);

/// One exact free-particle step of length dt (dt may be negative).
Wavefunction free_step(const Wavefunction& wf, double dt,
                       const Units& units = {});

/// Simpson estimate of (1/hbar) * integral of V0 over [t, t + dt].
double potential_phase(const PotentialSpec& potential, double t, double dt,
                       const Units& units = {});

/// Multiply by exp(-i Phi) with Phi = potential_phase(potential, t, dt);
/// returns the new state and Phi.
std::pair<Wavefunction, double> apply_uniform_potential(
    const Wavefunction& wf, const PotentialSpec& potential, double t,
    double dt, const Units& units = {});

struct PropagationResult {
  std::vector<DetectorRecord> records;  // one per tap, in input order
  Wavefunction final_state;
  double max_norm_drift = 0.0;  // max_n |norm(t_n) - norm(0)|
};

/// Strang-split evolution for cfg.n_steps steps, sampling every tap at
/// t = t0, t0 + dt, ..., t0 + n_steps dt (n_steps + 1 samples).
/// Throws NumericalError with the step index if the state stops being
/// finite.
PropagationResult propagate(const Wavefunction& wf0,
                            const EvolutionConfig& cfg,
                            std::span<const TapConfig> taps,
                            const Units& units = {});

/// Closed-form free evolution of gaussian_packet(p) at (x, t).
complex analytic_free_gaussian(const GaussianParams& p, double x, double t,
                               const Units& units = {});

}  // namespace vdspec
