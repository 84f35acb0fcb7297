#pragma once

#include <limits>
#include <span>

#include "vdspec/core.hpp"
#include "vdspec/detectors.hpp"

namespace vdspec {

struct KInterval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  bool contains(double k) const noexcept { return k >= lo && k <= hi; }
};

/// Error metrics of spectrum `a` against reference `b` over the support set
/// {k in region : max(a, b) >= floor * peak}, peak being the largest density
/// of either spectrum in the region.
///
/// l1 = sum |a - b|, l2_rel = ||a - b|| / ||a||, sup_rel = max|a - b| / max a,
/// overlap = <a, b> / (||a|| ||b||). l1 and overlap are symmetric in a and b;
/// l2_rel and sup_rel are not. l2_rel and sup_rel are +inf when a vanishes
/// on the support set but b does not.
struct ComparisonReport {
  KInterval region;
  double support_floor = 0.0;
  std::size_t support_points = 0;
  double l1 = 0.0;
  double l2_rel = 0.0;
  double sup_rel = 0.0;
  double overlap = 0.0;
  double peak_k_a = 0.0;
  double peak_k_b = 0.0;
};

/// psi~(k) = dx / sqrt(2 pi) sum_m psi(x_m) exp(-i k x_m) at each k.
Spectrum exact_spectrum(const Wavefunction& wf0,
                        std::span<const double> k_values);

/// |psi~(k)|^2 of gaussian_packet(p): sqrt(2 sx^2 / pi) exp(-2 sx^2 (k-k0)^2).
double analytic_gaussian_spectrum(const GaussianParams& p, double k);

/// Complex momentum amplitude of gaussian_packet(p) in the same convention as
/// exact_spectrum.
complex analytic_gaussian_amplitude(const GaussianParams& p, double k);

/// Throws ValidationError if the k grids differ by more than 1e-12 or the
/// support set is empty.
ComparisonReport compare(const Spectrum& a, const Spectrum& b,
                         KInterval region = {}, double support_floor = 1e-3);

/// Points of `s` with k inside `region`.
Spectrum restrict_to(const Spectrum& s, KInterval region);

/// Index of the largest density within `region` (first one on ties).
std::size_t peak_index(const Spectrum& s, KInterval region = {});

/// Plain sum of the densities.
double total_power(const Spectrum& s);

}  // namespace vdspec
