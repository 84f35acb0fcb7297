#include "vdspec/detectors.hpp"

#include <cmath>
#include <map>

#include "vdspec/fft.hpp"

namespace vdspec {

std::string_view to_string(SpectrumKind kind) {
  switch (kind) {
    case SpectrumKind::exact:
      return "exact";
    case SpectrumKind::cvd:
      return "cvd";
    case SpectrumKind::qvd:
      return "qvd";
    case SpectrumKind::bqvd_discrete:
      return "bqvd_discrete";
    case SpectrumKind::bqvd_continuous:
      return "bqvd_continuous";
  }
  return "unknown";
}

DetectorRecord phase_unwind(const DetectorRecord& record) {
  DetectorRecord out = record;
  for (std::size_t n = 0; n < out.v0_phase.size(); ++n) {
    const double phi = out.v0_phase[n];
    if (phi == 0.0) continue;
    const complex u = std::polar(1.0, phi);
    out.psi0[n] *= u;
    out.psi_plus[n] *= u;
    out.psi_minus[n] *= u;
    out.v0_phase[n] = 0.0;
  }
  return out;
}

std::size_t padded_length(std::size_t n, std::size_t zero_pad_factor) {
  if (zero_pad_factor < 1)
    throw ValidationError("must be at least 1", "zero_pad_factor");
  return efficient_fft_size(n * zero_pad_factor);
}

namespace {

// Unnormalized sum_n series[n] exp(+2 pi i j n / n_pad), j = 0..n_pad-1.
Fft padded_backward(std::span<const complex> series, std::size_t n_pad) {
  Fft fft(n_pad);
  auto buf = fft.buffer();
  std::copy(series.begin(), series.end(), buf.begin());
  fft.backward();
  return fft;
}

void check_series(std::span<const complex> series, double dt) {
  if (series.size() < 2)
    throw ValidationError("time series needs at least two samples");
  if (!(dt > 0.0)) throw ValidationError("must be positive", "dt");
}

}  // namespace

TemporalAmplitude temporal_spectrum(std::span<const complex> series, double dt,
                                    std::size_t zero_pad_factor, double t0) {
  check_series(series, dt);
  const std::size_t n_pad = padded_length(series.size(), zero_pad_factor);
  const Fft fft = padded_backward(series, n_pad);
  const auto buf = fft.buffer();

  const double prefactor = dt / std::sqrt(2.0 * kPi);
  const double d_omega = 2.0 * kPi / (static_cast<double>(n_pad) * dt);
  TemporalAmplitude out;
  const std::size_t n_keep = n_pad / 2 + 1;
  out.omegas.resize(n_keep);
  out.values.resize(n_keep);
  for (std::size_t j = 0; j < n_keep; ++j) {
    const double w = static_cast<double>(j) * d_omega;
    out.omegas[j] = w;
    out.values[j] = prefactor * buf[j];
    if (t0 != 0.0) out.values[j] *= std::polar(1.0, w * t0);
  }
  return out;
}

TemporalAmplitude temporal_spectrum_full(std::span<const complex> series,
                                         double dt,
                                         std::size_t zero_pad_factor,
                                         double t0) {
  check_series(series, dt);
  const std::size_t n_pad = padded_length(series.size(), zero_pad_factor);
  const Fft fft = padded_backward(series, n_pad);
  const auto buf = fft.buffer();

  const double prefactor = dt / std::sqrt(2.0 * kPi);
  const double d_omega = 2.0 * kPi / (static_cast<double>(n_pad) * dt);
  TemporalAmplitude out;
  out.omegas.resize(n_pad);
  out.values.resize(n_pad);
  // negative frequencies j = n_pad/2 .. n_pad-1 first
  const std::size_t half = n_pad / 2;
  for (std::size_t i = 0; i < n_pad; ++i) {
    const std::size_t j = (i + half) % n_pad;
    const double signed_j = j >= half ? static_cast<double>(j) -
                                            static_cast<double>(n_pad)
                                      : static_cast<double>(j);
    const double w = signed_j * d_omega;
    out.omegas[i] = w;
    out.values[i] = prefactor * buf[j];
    if (t0 != 0.0) out.values[i] *= std::polar(1.0, w * t0);
  }
  return out;
}

double omega_to_k(double omega, const Units& units) {
  if (omega < 0.0)
    throw ValidationError("negative frequency has no real wavenumber",
                          "omega");
  return std::sqrt(2.0 * units.mass * omega) / units.hbar;
}

DirectionalComponents directional_components(complex f0, complex f1, double k,
                                             double dx_sep) {
  const double s = std::sin(k * dx_sep);
  if (std::abs(s) < 1e-12)
    throw SingularPointError("sin(k dx_sep) vanishes at k=" +
                             std::to_string(k));
  const complex i{0.0, 1.0};
  const complex e_minus = std::polar(1.0, -k * dx_sep);
  const complex e_plus = std::conj(e_minus);
  return {k, i * (e_minus * f0 - f1) / (2.0 * s),
          i * (f1 - e_plus * f0) / (2.0 * s)};
}

vector_real detector_k_grid(std::size_t n_samples, double dt,
                            std::size_t zero_pad_factor, const Units& units) {
  const std::size_t n_pad = padded_length(n_samples, zero_pad_factor);
  const std::size_t n_pos = n_pad / 2;  // j = 1..n_pos
  const double d_omega = 2.0 * kPi / (static_cast<double>(n_pad) * dt);
  vector_real k(2 * n_pos + 1);
  k[n_pos] = 0.0;
  for (std::size_t j = 1; j <= n_pos; ++j) {
    const double kj = omega_to_k(static_cast<double>(j) * d_omega, units);
    k[n_pos + j] = kj;
    k[n_pos - j] = -kj;
  }
  return k;
}

namespace {

void require_unwound(const DetectorRecord& record) {
  for (double phi : record.v0_phase)
    if (phi != 0.0)
      throw ValidationError(
          "record carries potential phase; apply phase_unwind first");
}

// Lay out rightward amplitudes at +k_j and leftward at -k_j, j >= 1, into a
// signed spectrum with a zero, flagged k = 0 bin.
Spectrum signed_spectrum(SpectrumKind kind, const vector_real& k_pos,
                         const vector_complex& right,
                         const vector_complex& left,
                         const std::vector<std::uint8_t>& pos_flags) {
  const std::size_t n_pos = k_pos.size() - 1;  // k_pos[0] == 0
  Spectrum s;
  s.kind = kind;
  s.k_values.resize(2 * n_pos + 1);
  s.density.resize(2 * n_pos + 1);
  s.flags.assign(2 * n_pos + 1, kFlagNone);
  vector_complex amp(2 * n_pos + 1);
  s.flags[n_pos] = kFlagZeroMomentum;
  for (std::size_t j = 1; j <= n_pos; ++j) {
    s.k_values[n_pos + j] = k_pos[j];
    s.k_values[n_pos - j] = -k_pos[j];
    amp[n_pos + j] = right[j];
    amp[n_pos - j] = left[j];
    s.flags[n_pos + j] = s.flags[n_pos - j] = pos_flags[j];
  }
  for (std::size_t i = 0; i < amp.size(); ++i) s.density[i] = std::norm(amp[i]);
  s.amplitude = std::move(amp);
  return s;
}

vector_real k_of(const TemporalAmplitude& f, const Units& units) {
  vector_real k(f.omegas.size());
  for (std::size_t j = 0; j < k.size(); ++j) k[j] = omega_to_k(f.omegas[j], units);
  return k;
}

bool near_sine_zero(double k, double d) {
  const double n = std::round(k * d / kPi);
  return n != 0.0 && std::abs(k - n * kPi / d) < 1e-9;
}

}  // namespace

Spectrum bqvd_spectrum_discrete(const DetectorRecord& record,
                                std::size_t zero_pad_factor,
                                const Units& units) {
  record.validate();
  require_unwound(record);
  const double t0 = record.times.front();
  const auto f0 = temporal_spectrum(record.psi0, record.dt, zero_pad_factor, t0);
  const auto f1 =
      temporal_spectrum(record.psi_plus, record.dt, zero_pad_factor, t0);
  const auto k = k_of(f0, units);
  const double d = record.tap.dx_sep;

  vector_complex right(k.size()), left(k.size());
  std::vector<std::uint8_t> flags(k.size(), kFlagNone);
  for (std::size_t j = 1; j < k.size(); ++j) {
    if (near_sine_zero(k[j], d)) {
      flags[j] = kFlagSingular;
      continue;
    }
    const auto c = directional_components(f0.values[j], f1.values[j], k[j], d);
    const double v = units.hbar * k[j] / units.mass;
    right[j] = v * c.r;
    left[j] = v * c.l;
  }
  return signed_spectrum(SpectrumKind::bqvd_discrete, k, right, left, flags);
}

Spectrum bqvd_spectrum_continuous(const DetectorRecord& record,
                                  std::size_t zero_pad_factor,
                                  const Units& units) {
  record.validate();
  require_unwound(record);
  const double d = record.tap.dx_sep;
  vector_complex deriv(record.size());
  for (std::size_t n = 0; n < deriv.size(); ++n)
    deriv[n] = (record.psi_plus[n] - record.psi_minus[n]) / (2.0 * d);

  const double t0 = record.times.front();
  const auto f = temporal_spectrum(record.psi0, record.dt, zero_pad_factor, t0);
  const auto df = temporal_spectrum(deriv, record.dt, zero_pad_factor, t0);
  const auto k = k_of(f, units);

  const double c = units.hbar / (2.0 * units.mass);
  const complex i{0.0, 1.0};
  vector_complex right(k.size()), left(k.size());
  for (std::size_t j = 1; j < k.size(); ++j) {
    right[j] = c * (k[j] * f.values[j] - i * df.values[j]);
    left[j] = c * (k[j] * f.values[j] + i * df.values[j]);
  }
  return signed_spectrum(SpectrumKind::bqvd_continuous, k, right, left,
                         std::vector<std::uint8_t>(k.size(), kFlagNone));
}

Spectrum qvd_spectrum(const DetectorRecord& record,
                      std::size_t zero_pad_factor, const Units& units) {
  record.validate();
  require_unwound(record);
  const auto f0 = temporal_spectrum(record.psi0, record.dt, zero_pad_factor,
                                    record.times.front());
  Spectrum s;
  s.kind = SpectrumKind::qvd;
  s.k_values = k_of(f0, units);
  vector_complex amp(s.k_values.size());
  s.density.resize(amp.size());
  s.flags.assign(amp.size(), kFlagNone);
  for (std::size_t j = 0; j < amp.size(); ++j) {
    amp[j] = units.hbar * s.k_values[j] / units.mass * f0.values[j];
    s.density[j] = std::norm(amp[j]);
  }
  s.amplitude = std::move(amp);
  return s;
}

Spectrum cvd_spectrum(const DetectorRecord& record, double bin_width,
                      double rho_floor, const Units& units) {
  record.validate();
  if (!(bin_width > 0.0))
    throw ValidationError("must be positive", "cvd_bin_width");

  std::map<long long, double> bins;
  std::size_t skipped = 0;
  for (std::size_t n = 0; n < record.size(); ++n) {
    const double rho = record.rho[n];
    if (!(rho > rho_floor)) {
      ++skipped;
      continue;
    }
    const double j = record.current[n];
    const double k = units.mass * j / (units.hbar * rho);
    bins[std::llround(k / bin_width)] += std::abs(j) * record.dt;
  }

  Spectrum s;
  s.kind = SpectrumKind::cvd;
  s.bin_width = bin_width;
  s.skipped_samples = skipped;
  for (const auto& [idx, weight] : bins) {
    s.k_values.push_back(static_cast<double>(idx) * bin_width);
    s.density.push_back(weight / bin_width);
  }
  s.flags.assign(s.k_values.size(), kFlagNone);
  return s;
}

double histogram_mass(const Spectrum& histogram) {
  double total = 0.0;
  for (double d : histogram.density) total += d * histogram.bin_width;
  return total;
}

Spectrum resample_histogram(const Spectrum& histogram,
                            std::span<const double> k_values) {
  if (!(histogram.bin_width > 0.0))
    throw ValidationError("spectrum is not a histogram");
  std::map<long long, double> lookup;
  for (std::size_t i = 0; i < histogram.size(); ++i)
    lookup[std::llround(histogram.k_values[i] / histogram.bin_width)] =
        histogram.density[i];

  Spectrum s;
  s.kind = histogram.kind;
  s.skipped_samples = histogram.skipped_samples;
  s.k_values.assign(k_values.begin(), k_values.end());
  s.density.resize(k_values.size());
  s.flags.assign(k_values.size(), kFlagNone);
  for (std::size_t i = 0; i < k_values.size(); ++i) {
    const auto it = lookup.find(std::llround(k_values[i] / histogram.bin_width));
    s.density[i] = it == lookup.end() ? 0.0 : it->second;
  }
  return s;
}

}  // namespace vdspec
