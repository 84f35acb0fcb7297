#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace vdspec {

using complex = std::complex<double>;
using vector_real = std::vector<double>;
using vector_complex = std::vector<complex>;

inline constexpr double kPi = 3.14159265358979323846;

// Errors. ValidationError carries the name of the offending config key when
// there is one; NumericalError carries the propagation step when known.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& msg, std::string key = {})
      : Error(key.empty() ? msg : key + ": " + msg), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& msg,
                          std::optional<std::size_t> step = std::nullopt)
      : Error(step ? msg + " (step " + std::to_string(*step) + ")" : msg),
        step_(step) {}
  std::optional<std::size_t> step() const noexcept { return step_; }

 private:
  std::optional<std::size_t> step_;
};

class SingularPointError : public Error {
 public:
  using Error::Error;
};

/// Physical constants. Atomic units by default.
struct Units {
  double hbar = 1.0;
  double mass = 1.0;

  void validate() const;
};

/// Uniform periodic 1-D grid; sample m sits at x_min + m*dx.
struct Grid1D {
  std::size_t n_points = 0;
  double dx = 0.0;
  double x_min = 0.0;

  double x(std::size_t m) const noexcept {
    return x_min + static_cast<double>(m) * dx;
  }
  double length() const noexcept { return static_cast<double>(n_points) * dx; }
  double x_max() const noexcept { return x(n_points - 1); }

  /// Index of the sample at position `pos`, if `pos` lies on the grid
  /// (to within 1e-6 dx).
  std::optional<std::size_t> index_of(double pos) const noexcept;

  /// Grid of `n_points` samples spaced by `dx`, centred so that x = 0 is the
  /// sample with index n_points/2.
  static Grid1D centered(std::size_t n_points, double dx);

  void validate() const;
  bool operator==(const Grid1D&) const = default;
};

struct Wavefunction {
  Grid1D grid;
  vector_complex amplitudes;
  double time = 0.0;

  /// Sum |psi|^2 dx.
  double squared_norm() const;
};

struct GaussianParams {
  double x0 = 0.0;
  double sigma_x = 1.0;
  double k0 = 0.0;
  double global_phase = 0.0;
};

struct LocalMeasurement {
  double rho = 0.0;
  double current = 0.0;
};

/// Ratio |psi(edge)| / |psi(x0)| of the closed-form packet at the nearer
/// domain edge.
double boundary_amplitude_ratio(const Grid1D& grid, const GaussianParams& p);

/// Normalized Gaussian (2 pi sx^2)^(-1/4) exp(-(x-x0)^2/(4 sx^2)
/// + i k0 (x-x0) + i phase) sampled on `grid` at t = 0.
///
/// Throws ValidationError when sigma_x < 4 dx (undersampled) or when the
/// packet (8 sigma_x) is wider than the domain. Prints a warning to
/// std::clog when the boundary amplitude exceeds 1e-12 of the peak.
Wavefunction gaussian_packet(const Grid1D& grid, const GaussianParams& p);

/// Pointwise ca*a + cb*b. Not renormalized.
Wavefunction superpose(const Wavefunction& a, const Wavefunction& b,
                       complex ca, complex cb);

/// Density and central-difference probability current at an interior index.
LocalMeasurement measure_local(const Wavefunction& wf, std::size_t x_index,
                               const Units& units = {});

/// Same as above on a raw triple of neighbouring samples.
LocalMeasurement measure_local(complex minus, complex centre, complex plus,
                               double dx, const Units& units = {});

}  // namespace vdspec
