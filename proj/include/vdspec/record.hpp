#pragma once

#include "vdspec/core.hpp"

namespace vdspec {

/// Detector placement: the primary point and the separation of its two
/// neighbours. Both must land on grid samples.
struct TapConfig {
  double x_detector = 0.0;
  double dx_sep = 0.1;
};

/// Grid indices resolved from a TapConfig.
struct TapIndices {
  std::size_t centre = 0;
  std::size_t plus = 0;   // x_detector + dx_sep
  std::size_t minus = 0;  // x_detector - dx_sep
};

/// Resolve a tap against a grid. Throws ValidationError naming the
/// offending key when a point is off-grid or not interior.
TapIndices resolve_tap(const Grid1D& grid, const TapConfig& tap);

/// Time series recorded at one tap.
struct DetectorRecord {
  TapConfig tap;
  double dt = 1.0;
  vector_real times;
  vector_complex psi0;
  vector_complex psi_plus;
  vector_complex psi_minus;
  vector_real rho;
  vector_real current;
  // cumulative (1/hbar) * integral of V0 up to times[n]
  vector_real v0_phase;

  std::size_t size() const noexcept { return times.size(); }
  void validate() const;
};

}  // namespace vdspec
