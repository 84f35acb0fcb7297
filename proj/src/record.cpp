#include "vdspec/record.hpp"

#include <cmath>

namespace vdspec {

TapIndices resolve_tap(const Grid1D& grid, const TapConfig& tap) {
  if (!(tap.dx_sep > 0.0))
    throw ValidationError("detector separation must be positive", "dx_sep");
  const double ratio = tap.dx_sep / grid.dx;
  if (std::abs(ratio - std::round(ratio)) > 1e-6 || std::round(ratio) < 1.0)
    throw ValidationError("detector separation must be a multiple of dx",
                          "dx_sep");
  const auto sep = static_cast<std::size_t>(std::round(ratio));

  const auto centre = grid.index_of(tap.x_detector);
  if (!centre)
    throw ValidationError("x=" + std::to_string(tap.x_detector) +
                              " is not a grid point",
                          "x_detector");
  if (*centre < sep + 1 || *centre + sep + 2 > grid.n_points)
    throw ValidationError("x=" + std::to_string(tap.x_detector) +
                              " is too close to the boundary; the detector "
                              "and both neighbours must be interior points",
                          "x_detector");
  return {*centre, *centre + sep, *centre - sep};
}

void DetectorRecord::validate() const {
  const std::size_t n = times.size();
  if (n < 2) throw ValidationError("record needs at least two samples");
  if (psi0.size() != n || psi_plus.size() != n || psi_minus.size() != n ||
      rho.size() != n || current.size() != n || v0_phase.size() != n)
    throw ValidationError("record sequences have different lengths");
  if (!(dt > 0.0)) throw ValidationError("must be positive", "dt");
  for (std::size_t i = 1; i < n; ++i) {
    const double expected = times[0] + static_cast<double>(i) * dt;
    if (std::abs(times[i] - expected) > 1e-9 * (1.0 + std::abs(expected)))
      throw ValidationError("record times are not uniformly spaced by dt");
  }
}

}  // namespace vdspec
