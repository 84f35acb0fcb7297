#include "vdspec/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "vdspec/kernels.hpp"

namespace vdspec {

Spectrum exact_spectrum(const Wavefunction& wf0,
                        std::span<const double> k_values) {
  Spectrum s;
  s.kind = SpectrumKind::exact;
  s.k_values.assign(k_values.begin(), k_values.end());
  vector_complex amp(k_values.size());
  kernels::omp::semidiscrete_transform(wf0.amplitudes, wf0.grid.x_min,
                                       wf0.grid.dx, k_values,
                                       wf0.grid.dx / std::sqrt(2.0 * kPi), amp);
  s.density.resize(amp.size());
  for (std::size_t i = 0; i < amp.size(); ++i) s.density[i] = std::norm(amp[i]);
  s.flags.assign(amp.size(), kFlagNone);
  s.amplitude = std::move(amp);
  return s;
}

double analytic_gaussian_spectrum(const GaussianParams& p, double k) {
  const double s2 = p.sigma_x * p.sigma_x;
  const double dk = k - p.k0;
  return std::sqrt(2.0 * s2 / kPi) * std::exp(-2.0 * s2 * dk * dk);
}

complex analytic_gaussian_amplitude(const GaussianParams& p, double k) {
  const double s2 = p.sigma_x * p.sigma_x;
  const double dk = k - p.k0;
  return std::pow(2.0 * s2 / kPi, 0.25) * std::exp(-s2 * dk * dk) *
         std::polar(1.0, p.global_phase - k * p.x0);
}

ComparisonReport compare(const Spectrum& a, const Spectrum& b,
                         KInterval region, double support_floor) {
  if (a.size() != b.size())
    throw ValidationError("spectra are on different k grids");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a.k_values[i] - b.k_values[i]) > 1e-12)
      throw ValidationError("spectra are on different k grids");

  ComparisonReport rep;
  rep.region = region;
  rep.support_floor = support_floor;

  double peak = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (region.contains(a.k_values[i]))
      peak = std::max({peak, a.density[i], b.density[i]});

  double diff2 = 0.0, a2 = 0.0, b2 = 0.0, ab = 0.0, max_diff = 0.0, max_a = 0.0;
  double best_a = -1.0, best_b = -1.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double k = a.k_values[i];
    if (!region.contains(k)) continue;
    const double da = a.density[i], db = b.density[i];
    if (da > best_a) best_a = da, rep.peak_k_a = k;
    if (db > best_b) best_b = db, rep.peak_k_b = k;
    if (std::max(da, db) < support_floor * peak || peak == 0.0) continue;
    ++rep.support_points;
    const double d = da - db;
    rep.l1 += std::abs(d);
    diff2 += d * d;
    a2 += da * da;
    b2 += db * db;
    ab += da * db;
    max_diff = std::max(max_diff, std::abs(d));
    max_a = std::max(max_a, da);
  }
  if (rep.support_points == 0)
    throw ValidationError("comparison support set is empty");

  constexpr double inf = std::numeric_limits<double>::infinity();
  rep.l2_rel = a2 > 0.0 ? std::sqrt(diff2 / a2) : (diff2 > 0.0 ? inf : 0.0);
  rep.sup_rel = max_a > 0.0 ? max_diff / max_a : (max_diff > 0.0 ? inf : 0.0);
  rep.overlap = (a2 > 0.0 && b2 > 0.0)
                    ? std::clamp(ab / std::sqrt(a2 * b2), 0.0, 1.0)
                    : 0.0;
  return rep;
}

Spectrum restrict_to(const Spectrum& s, KInterval region) {
  Spectrum out;
  out.kind = s.kind;
  out.bin_width = s.bin_width;
  out.skipped_samples = s.skipped_samples;
  if (s.amplitude) out.amplitude.emplace();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!region.contains(s.k_values[i])) continue;
    out.k_values.push_back(s.k_values[i]);
    out.density.push_back(s.density[i]);
    out.flags.push_back(i < s.flags.size() ? s.flags[i] : std::uint8_t{kFlagNone});
    if (s.amplitude) out.amplitude->push_back((*s.amplitude)[i]);
  }
  return out;
}

std::size_t peak_index(const Spectrum& s, KInterval region) {
  std::size_t best = s.size();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!region.contains(s.k_values[i])) continue;
    if (best == s.size() || s.density[i] > s.density[best]) best = i;
  }
  if (best == s.size()) throw ValidationError("no spectrum points in region");
  return best;
}

double total_power(const Spectrum& s) {
  double t = 0.0;
  for (double d : s.density) t += d;
  return t;
}

}  // namespace vdspec
