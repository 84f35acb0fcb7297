#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "vdspec/core.hpp"
#include "vdspec/record.hpp"

namespace vdspec {

enum class SpectrumKind { exact, cvd, qvd, bqvd_discrete, bqvd_continuous };

std::string_view to_string(SpectrumKind kind);

/// Per-bin flags.
enum SpectrumFlag : std::uint8_t {
  kFlagNone = 0,
  kFlagZeroMomentum = 1,  // k = 0: no flux, direction undefined
  kFlagSingular = 2,      // sin(k dx_sep) = 0: decomposition undefined
};

/// Momentum spectrum. `density` is |psi~(k)|^2 per unit k. Histograms (the
/// CVD) set `bin_width` and list only occupied bins.
struct Spectrum {
  SpectrumKind kind = SpectrumKind::exact;
  vector_real k_values;
  vector_real density;
  std::optional<vector_complex> amplitude;
  std::vector<std::uint8_t> flags;
  double bin_width = 0.0;
  std::size_t skipped_samples = 0;

  std::size_t size() const noexcept { return k_values.size(); }
};

/// Temporal Fourier amplitude on omega_j = 2 pi j / (n_pad dt).
struct TemporalAmplitude {
  vector_real omegas;
  vector_complex values;
};

/// Rightward/leftward amplitudes at wavenumber k, referenced to the primary
/// tap: f0 = r + l and f1 = r e^{ik d} + l e^{-ik d}.
struct DirectionalComponents {
  double k = 0.0;
  complex r;
  complex l;
};

/// Multiply each complex sample by exp(+i v0_phase[n]) and zero v0_phase.
DetectorRecord phase_unwind(const DetectorRecord& record);

/// f(omega_j) = dt/sqrt(2 pi) sum_n series[n] exp(+i omega_j t_n), with
/// t_n = t0 + n dt, via an FFT of the zero-padded series. Keeps
/// omega_j in [0, pi/dt].
TemporalAmplitude temporal_spectrum(std::span<const complex> series, double dt,
                                    std::size_t zero_pad_factor,
                                    double t0 = 0.0);

/// Same transform, every bin, omegas ascending over [-pi/dt, pi/dt).
TemporalAmplitude temporal_spectrum_full(std::span<const complex> series,
                                         double dt,
                                         std::size_t zero_pad_factor,
                                         double t0 = 0.0);

/// Padded transform length used for a series of length n.
std::size_t padded_length(std::size_t n, std::size_t zero_pad_factor);

/// k = sqrt(2 m omega) / hbar. Throws ValidationError for omega < 0.
double omega_to_k(double omega, const Units& units = {});

/// Solve the two-point system for the directional amplitudes.
/// Throws SingularPointError when |sin(k dx_sep)| < 1e-12.
DirectionalComponents directional_components(complex f0, complex f1, double k,
                                             double dx_sep);

/// Two-point spectrum from the exact finite-separation decomposition.
/// Signed k grid; the k = 0 bin has zero density and kFlagZeroMomentum.
Spectrum bqvd_spectrum_discrete(const DetectorRecord& record,
                                std::size_t zero_pad_factor,
                                const Units& units = {});

/// Two-point spectrum in the dx_sep -> 0 form, using the central-difference
/// derivative (psi_plus - psi_minus) / (2 dx_sep).
Spectrum bqvd_spectrum_continuous(const DetectorRecord& record,
                                  std::size_t zero_pad_factor,
                                  const Units& units = {});

/// Single-point spectrum (hbar k / m) f0(omega(k)) on k >= 0.
Spectrum qvd_spectrum(const DetectorRecord& record,
                      std::size_t zero_pad_factor, const Units& units = {});

/// Flux-weighted histogram of k = m j / (hbar rho). Samples with
/// rho <= rho_floor are skipped and counted.
Spectrum cvd_spectrum(const DetectorRecord& record, double bin_width,
                      double rho_floor, const Units& units = {});

/// Sum of bin weights of a histogram (density * bin_width).
double histogram_mass(const Spectrum& histogram);

/// Look up each k in a sparse histogram by nearest bin centre.
Spectrum resample_histogram(const Spectrum& histogram,
                            std::span<const double> k_values);

/// Signed detector k grid: -k_max .. 0 .. k_max with k_j = omega_to_k(omega_j).
vector_real detector_k_grid(std::size_t n_samples, double dt,
                            std::size_t zero_pad_factor,
                            const Units& units = {});

}  // namespace vdspec
