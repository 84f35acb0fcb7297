#include "vdspec/core.hpp"

#include <cmath>
#include <iostream>

namespace vdspec {

void Units::validate() const {
  if (!(hbar > 0.0) || !std::isfinite(hbar))
    throw ValidationError("must be positive and finite", "hbar");
  if (!(mass > 0.0) || !std::isfinite(mass))
    throw ValidationError("must be positive and finite", "mass");
}

std::optional<std::size_t> Grid1D::index_of(double pos) const noexcept {
  if (n_points == 0 || !(dx > 0.0)) return std::nullopt;
  const double f = (pos - x_min) / dx;
  const double r = std::round(f);
  if (r < 0.0 || r >= static_cast<double>(n_points)) return std::nullopt;
  if (std::abs(f - r) > 1e-6) return std::nullopt;
  return static_cast<std::size_t>(r);
}

Grid1D Grid1D::centered(std::size_t n_points, double dx) {
  Grid1D g{n_points, dx, -static_cast<double>(n_points / 2) * dx};
  g.validate();
  return g;
}

void Grid1D::validate() const {
  if (n_points < 2 || n_points % 2 != 0)
    throw ValidationError("must be even and >= 2", "n_points");
  if (!(dx > 0.0) || !std::isfinite(dx))
    throw ValidationError("must be positive and finite", "dx");
  if (!std::isfinite(x_min)) throw ValidationError("must be finite", "x_min");
}

double Wavefunction::squared_norm() const {
  double s = 0.0;
  for (const auto& a : amplitudes) s += std::norm(a);
  return s * grid.dx;
}

double boundary_amplitude_ratio(const Grid1D& grid, const GaussianParams& p) {
  const double d = std::min(std::abs(grid.x_min - p.x0),
                            std::abs(grid.x_max() - p.x0));
  return std::exp(-d * d / (4.0 * p.sigma_x * p.sigma_x));
}

Wavefunction gaussian_packet(const Grid1D& grid, const GaussianParams& p) {
  grid.validate();
  if (!(p.sigma_x > 0.0)) throw ValidationError("must be positive", "sigma_x");
  if (p.sigma_x < 4.0 * grid.dx)
    throw ValidationError("undersampled packet, need sigma_x >= 4 dx",
                          "sigma_x");
  if (8.0 * p.sigma_x > grid.length())
    throw ValidationError("packet is wider than the domain", "sigma_x");
  if (p.x0 < grid.x_min || p.x0 > grid.x_max())
    throw ValidationError("packet centre lies outside the domain", "x0");

  if (boundary_amplitude_ratio(grid, p) > 1e-12) {
    std::clog << "warning: Gaussian at x0=" << p.x0
              << " has non-negligible amplitude at the domain boundary\n";
  }

  const double s2 = p.sigma_x * p.sigma_x;
  const double norm = std::pow(2.0 * kPi * s2, -0.25);
  Wavefunction wf{grid, vector_complex(grid.n_points), 0.0};
  for (std::size_t m = 0; m < grid.n_points; ++m) {
    const double u = grid.x(m) - p.x0;
    wf.amplitudes[m] = norm * std::exp(-u * u / (4.0 * s2)) *
                       std::polar(1.0, p.k0 * u + p.global_phase);
  }
  return wf;
}

Wavefunction superpose(const Wavefunction& a, const Wavefunction& b,
                       complex ca, complex cb) {
  if (!(a.grid == b.grid) || a.amplitudes.size() != b.amplitudes.size())
    throw ValidationError("cannot superpose wavefunctions on different grids");
  if (a.time != b.time)
    throw ValidationError("cannot superpose wavefunctions at different times");
  Wavefunction out{a.grid, vector_complex(a.amplitudes.size()), a.time};
  for (std::size_t i = 0; i < out.amplitudes.size(); ++i)
    out.amplitudes[i] = ca * a.amplitudes[i] + cb * b.amplitudes[i];
  return out;
}

LocalMeasurement measure_local(complex minus, complex centre, complex plus,
                               double dx, const Units& units) {
  const complex grad = (plus - minus) / (2.0 * dx);
  return {std::norm(centre),
          units.hbar / units.mass * std::imag(std::conj(centre) * grad)};
}

LocalMeasurement measure_local(const Wavefunction& wf, std::size_t x_index,
                               const Units& units) {
  if (x_index == 0 || x_index + 1 >= wf.amplitudes.size())
    throw ValidationError("probability current needs an interior grid point",
                          "x_index");
  return measure_local(wf.amplitudes[x_index - 1], wf.amplitudes[x_index],
                       wf.amplitudes[x_index + 1], wf.grid.dx, units);
}

}  // namespace vdspec
