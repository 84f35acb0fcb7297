#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "vdspec/detectors.hpp"
#include "vdspec/propagator.hpp"

using namespace vdspec;

namespace {

// Record holding psi0 = a(t), psi_plus = a(t) e^{ikd}, psi_minus = a(t) e^{-ikd}.
DetectorRecord plane_record(std::span<const complex> a, double k, double d,
                            double dt) {
  DetectorRecord r;
  r.tap = {0.0, d};
  r.dt = dt;
  const std::size_t n = a.size();
  r.times.resize(n);
  r.rho.assign(n, 0.0);
  r.current.assign(n, 0.0);
  r.v0_phase.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    r.times[i] = static_cast<double>(i) * dt;
    r.psi0.push_back(a[i]);
    r.psi_plus.push_back(a[i] * std::polar(1.0, k * d));
    r.psi_minus.push_back(a[i] * std::polar(1.0, -k * d));
  }
  return r;
}

DetectorRecord record_for(const Wavefunction& wf, const PotentialSpec& v,
                          std::size_t n_steps) {
  const TapConfig taps[] = {{0.0, 0.1}};
  return propagate(wf, {1.0, n_steps, v}, taps).records.front();
}

}  // namespace

TEST_CASE("phase_unwind") {
  const auto grid = Grid1D::centered(4096, 0.1);
  const auto wf = gaussian_packet(grid, {-40.0, 8.0, 1.0, 0.0});
  const auto free = record_for(wf, PotentialSpec::zero(), 80);

  SUBCASE("zero potential leaves the record unchanged") {
    const auto u = phase_unwind(free);
    CHECK(u.psi0 == free.psi0);
    CHECK(u.psi_plus == free.psi_plus);
    CHECK(u.psi_minus == free.psi_minus);
  }

  SUBCASE("constant potential unwinds to the free series") {
    const auto shifted = record_for(wf, PotentialSpec::constant(0.37), 80);
    CHECK(shifted.v0_phase.back() == doctest::Approx(0.37 * 80));
    const auto u = phase_unwind(shifted);
    double worst = 0.0;
    for (std::size_t n = 0; n < u.size(); ++n)
      worst = std::max({worst, std::abs(u.psi0[n] - free.psi0[n]),
                        std::abs(u.psi_plus[n] - free.psi_plus[n])});
    CHECK(worst < 1e-10);
    for (double phi : u.v0_phase) CHECK(phi == 0.0);
  }

  SUBCASE("time-dependent potential also unwinds exactly") {
    const auto v = PotentialSpec::time_dependent(
        [](double t) { return 0.2 * std::cos(0.05 * t); });
    const auto u = phase_unwind(record_for(wf, v, 80));
    double worst = 0.0;
    for (std::size_t n = 0; n < u.size(); ++n)
      worst = std::max(worst, std::abs(u.psi0[n] - free.psi0[n]));
    CHECK(worst < 1e-10);
  }

  SUBCASE("idempotent") {
    const auto once = phase_unwind(record_for(wf, PotentialSpec::constant(0.1), 30));
    const auto twice = phase_unwind(once);
    CHECK(once.psi0 == twice.psi0);
    CHECK(once.v0_phase == twice.v0_phase);
  }

  SUBCASE("spectra refuse a record that still carries phase") {
    const auto shifted = record_for(wf, PotentialSpec::constant(0.1), 30);
    CHECK_THROWS_AS(qvd_spectrum(shifted, 4), ValidationError);
    CHECK_THROWS_AS(bqvd_spectrum_discrete(shifted, 4), ValidationError);
    CHECK_THROWS_AS(bqvd_spectrum_continuous(shifted, 4), ValidationError);
  }
}

TEST_CASE("temporal_spectrum") {
  constexpr std::size_t N = 1001;
  constexpr double dt = 1.0;

  SUBCASE("zero series") {
    const vector_complex zeros(N);
    const auto f = temporal_spectrum(zeros, dt, 4);
    for (const auto& v : f.values) CHECK(v == complex{});
  }

  SUBCASE("grid layout") {
    const vector_complex s(N, 1.0);
    const auto f = temporal_spectrum(s, dt, 4);
    CHECK(padded_length(N, 4) == 4032);
    REQUIRE(f.omegas.size() == 2017);
    CHECK(f.omegas.front() == 0.0);
    CHECK(f.omegas.back() == doctest::Approx(kPi / dt));
    for (std::size_t j = 1; j < f.omegas.size(); ++j)
      CHECK(f.omegas[j] - f.omegas[j - 1] ==
            doctest::Approx(2.0 * kPi / (4032 * dt)));
  }

  SUBCASE("bin-centred exponential peaks at T / sqrt(2 pi)") {
    const double d_omega = 2.0 * kPi / (4032 * dt);
    const auto j0 = static_cast<std::size_t>(std::lround(0.5 / d_omega));
    const double w0 = j0 * d_omega;
    vector_complex s(N);
    for (std::size_t n = 0; n < N; ++n) s[n] = std::polar(1.0, -w0 * n * dt);
    const auto f = temporal_spectrum(s, dt, 4);

    std::size_t best = 0;
    for (std::size_t j = 0; j < f.values.size(); ++j)
      if (std::abs(f.values[j]) > std::abs(f.values[best])) best = j;
    CHECK(best == j0);
    CHECK(std::abs(f.values[j0]) ==
          doctest::Approx(N * dt / std::sqrt(2.0 * kPi)).epsilon(1e-12));

    double worst = 0.0;
    for (std::size_t j = 0; j < f.values.size(); ++j)
      worst = std::max(worst, std::abs(f.values[j] -
                                       oracle::windowed_exponential(N, dt, f.omegas[j], w0)));
    CHECK(worst < 1e-10);
  }

  SUBCASE("matches the direct sum with an offset origin") {
    std::mt19937_64 rng(21);
    const auto s = oracle::random_complex(300, rng);
    const double t0 = 17.25;
    const auto f = temporal_spectrum(s, 0.5, 3, t0);
    double worst = 0.0, scale = 0.0;
    for (std::size_t j = 0; j < f.values.size(); j += 7) {
      const auto ref = oracle::direct_temporal(s, 0.5, t0, f.omegas[j]);
      worst = std::max(worst, std::abs(f.values[j] - ref));
      scale = std::max(scale, std::abs(ref));
    }
    CHECK(worst / scale < 1e-12);
  }

  SUBCASE("Parseval over the full transform") {
    std::mt19937_64 rng(4);
    for (std::size_t pad : {1u, 2u, 4u}) {
      const auto s = oracle::random_complex(N, rng);
      const auto f = temporal_spectrum_full(s, dt, pad);
      REQUIRE(f.omegas.size() == padded_length(N, pad));
      const double d_omega = f.omegas[1] - f.omegas[0];
      double lhs = 0.0, rhs = 0.0;
      for (const auto& v : f.values) lhs += std::norm(v) * d_omega;
      for (const auto& v : s) rhs += std::norm(v) * dt;
      CHECK(std::abs(lhs - rhs) / rhs < 1e-10);
    }
  }

  SUBCASE("full transform agrees with the half transform on omega >= 0") {
    std::mt19937_64 rng(8);
    const auto s = oracle::random_complex(N, rng);
    const auto half = temporal_spectrum(s, dt, 4);
    const auto full = temporal_spectrum_full(s, dt, 4);
    const std::size_t zero = full.omegas.size() / 2;
    CHECK(full.omegas[zero] == 0.0);
    for (std::size_t j = 0; j + 1 < half.values.size(); ++j)
      CHECK(full.values[zero + j] == half.values[j]);
  }

  SUBCASE("invalid input") {
    const vector_complex one(1);
    CHECK_THROWS_AS(temporal_spectrum(one, dt, 4), ValidationError);
    const vector_complex two(2);
    CHECK_THROWS_AS(temporal_spectrum(two, dt, 0), ValidationError);
  }
}

TEST_CASE("omega_to_k") {
  CHECK(omega_to_k(0.5) == 1.0);
  CHECK(omega_to_k(0.0) == 0.0);
  CHECK(omega_to_k(0.125) == 0.5);
  CHECK_THROWS_AS(omega_to_k(-1e-3), ValidationError);

  const auto k = detector_k_grid(1001, 1.0, 4);
  CHECK(k.size() == 4033);
  CHECK(k[2016] == 0.0);
  CHECK(k.back() == doctest::Approx(std::sqrt(2.0 * kPi)));
  for (std::size_t j = 1; j < k.size(); ++j) CHECK(k[j] > k[j - 1]);
}

TEST_CASE("directional_components") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> kd(0.01, 3.0);
  const auto f = oracle::random_complex(200, rng);

  SUBCASE("pure rightward and leftward inputs") {
    for (std::size_t i = 0; i < 100; ++i) {
      const double k = kd(rng), d = 0.1 + 0.01 * (i % 7);
      const auto right = directional_components(f[i], f[i] * std::polar(1.0, k * d), k, d);
      CHECK(std::abs(right.l) < 1e-12 * (1.0 + std::abs(f[i])) / std::abs(std::sin(k * d)));
      CHECK(std::abs(right.r - f[i]) < 1e-12 * (1.0 + std::abs(f[i])) / std::abs(std::sin(k * d)));
      const auto left = directional_components(f[i], f[i] * std::polar(1.0, -k * d), k, d);
      CHECK(std::abs(left.r) < 1e-12 * (1.0 + std::abs(f[i])) / std::abs(std::sin(k * d)));
      CHECK(std::abs(left.l - f[i]) < 1e-12 * (1.0 + std::abs(f[i])) / std::abs(std::sin(k * d)));
    }
  }

  SUBCASE("two-point example in midpoint form") {
    const double d = 0.1, k = kPi / 2.0 / d;
    const auto c = directional_components(0.0, 1.0, k, d);
    const complex i{0.0, 1.0};
    // shift the tap-referenced amplitudes to the midpoint x = d/2
    CHECK(std::abs(c.r * std::polar(1.0, k * d / 2) - (-i * std::polar(1.0, kPi / 4) / 2.0)) < 1e-15);
    CHECK(std::abs(c.l * std::polar(1.0, -k * d / 2) - (i * std::polar(1.0, -kPi / 4) / 2.0)) < 1e-15);
  }

  SUBCASE("random inputs reconstruct both taps") {
    for (std::size_t i = 0; i + 1 < f.size(); i += 2) {
      const double k = (i % 3 == 0 ? -1.0 : 1.0) * kd(rng), d = 0.1;
      const auto c = directional_components(f[i], f[i + 1], k, d);
      CHECK(std::abs(c.r + c.l - f[i]) < 1e-12 * std::abs(f[i]) + 1e-12);
      const complex f1 = c.r * std::polar(1.0, k * d) + c.l * std::polar(1.0, -k * d);
      CHECK(std::abs(f1 - f[i + 1]) < 1e-11);
    }
  }

  SUBCASE("singular points") {
    CHECK_THROWS_AS(directional_components(1.0, 1.0, 0.0, 0.1), SingularPointError);
    CHECK_THROWS_AS(directional_components(1.0, 1.0, kPi / 0.1, 0.1), SingularPointError);
    CHECK_THROWS_AS(directional_components(1.0, 1.0, kPi / 0.1, 0.1), Error);
  }
}

TEST_CASE("two-point spectra on a monochromatic record") {
  constexpr std::size_t N = 600;
  const double k = 0.9, omega = 0.5 * k * k, d = 0.1;
  vector_complex a(N);
  for (std::size_t n = 0; n < N; ++n) a[n] = std::polar(1.0, -omega * n);

  const auto right = plane_record(a, k, d, 1.0);
  const auto f = temporal_spectrum(a, 1.0, 4);
  const std::size_t n_pos = f.values.size() - 1;

  SUBCASE("continuous form: amplitude = k_j f / 2 + sin(kd) f / 2d") {
    const auto s = bqvd_spectrum_continuous(right, 4);
    REQUIRE(s.size() == 2 * n_pos + 1);
    for (std::size_t j = 1; j <= n_pos; ++j) {
      const double kj = s.k_values[n_pos + j];
      const complex expect = 0.5 * f.values[j] * (kj + std::sin(k * d) / d);
      CHECK(std::abs((*s.amplitude)[n_pos + j] - expect) < 1e-12 * (1.0 + std::abs(expect)));
    }
    // at the carrier the two terms nearly coincide
    const complex expect_at_k = 0.5 * k * (1.0 + std::sin(k * d) / (k * d));
    CHECK(std::abs(expect_at_k - k) < k * (k * d) * (k * d) / 12.0 + 1e-15);
  }

  SUBCASE("discrete form keeps all power rightward") {
    const auto s = bqvd_spectrum_discrete(right, 4);
    for (std::size_t j = 1; j <= n_pos; ++j) {
      const double kj = s.k_values[n_pos + j];
      // exact where the bin matches the carrier, otherwise a known leak
      const auto c = directional_components(f.values[j], f.values[j] * std::polar(1.0, k * d), kj, d);
      CHECK(std::abs((*s.amplitude)[n_pos + j] - kj * c.r) < 1e-12);
      CHECK(std::abs((*s.amplitude)[n_pos - j] - kj * c.l) < 1e-12);
    }
    CHECK(s.flags[n_pos] == kFlagZeroMomentum);
    CHECK(s.density[n_pos] == 0.0);
  }

  SUBCASE("QVD equals the rightward BQVD when the record is purely rightward") {
    // psi_plus built from the bin's own wavenumber makes the record exactly rightward
    const auto q = qvd_spectrum(right, 4);
    const auto b = bqvd_spectrum_discrete(right, 4);
    std::size_t best = 1;
    for (std::size_t j = 1; j <= n_pos; ++j)
      if (q.density[j] > q.density[best]) best = j;
    CHECK(q.k_values[best] == doctest::Approx(k).epsilon(2e-3));
    CHECK(b.density[n_pos + best] == doctest::Approx(q.density[best]).epsilon(2e-3));
  }

  SUBCASE("zero record gives zero spectra") {
    const vector_complex zeros(N);
    const auto z = plane_record(zeros, k, d, 1.0);
    for (double v : bqvd_spectrum_continuous(z, 4).density) CHECK(v == 0.0);
    for (double v : bqvd_spectrum_discrete(z, 4).density) CHECK(v == 0.0);
    for (double v : qvd_spectrum(z, 4).density) CHECK(v == 0.0);
  }

  SUBCASE("QVD is non-negative in k and includes k = 0") {
    const auto q = qvd_spectrum(right, 4);
    CHECK(q.k_values.front() == 0.0);
    CHECK(q.density.front() == 0.0);
    for (double v : q.k_values) CHECK(v >= 0.0);
  }
}

TEST_CASE("cvd_spectrum") {
  DetectorRecord r;
  r.tap = {0.0, 0.1};
  r.dt = 0.5;
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> rho(0.0, 2.0), v(-1.5, 1.5);
  for (std::size_t n = 0; n < 500; ++n) {
    r.times.push_back(0.5 * n);
    r.psi0.push_back(0.0);
    r.psi_plus.push_back(0.0);
    r.psi_minus.push_back(0.0);
    const double p = n % 10 == 0 ? 0.0 : rho(rng);
    r.rho.push_back(p);
    r.current.push_back(p * v(rng));
    r.v0_phase.push_back(0.0);
  }

  const auto h = cvd_spectrum(r, 0.01, 1e-12);
  double flux = 0.0;
  for (std::size_t n = 0; n < r.size(); ++n)
    if (r.rho[n] > 1e-12) flux += std::abs(r.current[n]) * r.dt;
  CHECK(histogram_mass(h) == doctest::Approx(flux).epsilon(1e-13));
  CHECK(h.skipped_samples == 50);
  CHECK(h.bin_width == 0.01);
  for (std::size_t i = 1; i < h.size(); ++i) CHECK(h.k_values[i] > h.k_values[i - 1]);
  for (double d : h.density) CHECK(d > 0.0);

  SUBCASE("each sample lands in the bin of its velocity") {
    for (std::size_t n = 1; n < 40; ++n) {
      if (r.rho[n] == 0.0) continue;
      const double k = r.current[n] / r.rho[n];
      const double centre = std::round(k / 0.01) * 0.01;
      bool found = false;
      for (double kk : h.k_values) found = found || std::abs(kk - centre) < 1e-12;
      CHECK(found);
    }
  }

  SUBCASE("resample onto a grid by nearest bin") {
    const vector_real grid{-10.0, h.k_values[3] + 0.004, h.k_values[3] - 0.0049, 10.0};
    const auto s = resample_histogram(h, grid);
    CHECK(s.density[0] == 0.0);
    CHECK(s.density[1] == h.density[3]);
    CHECK(s.density[2] == h.density[3]);
    CHECK(s.density[3] == 0.0);
    CHECK_THROWS_AS(resample_histogram(qvd_spectrum(plane_record(r.psi0, 1.0, 0.1, 0.5), 2), grid),
                    ValidationError);
  }

  SUBCASE("bad bin width") {
    CHECK_THROWS_AS(cvd_spectrum(r, 0.0, 1e-12), ValidationError);
  }
}

TEST_CASE("record validation") {
  DetectorRecord r;
  r.dt = 1.0;
  r.times = {0.0, 1.0, 2.5};
  r.psi0 = r.psi_plus = r.psi_minus = vector_complex(3);
  r.rho = r.current = r.v0_phase = vector_real(3);
  CHECK_THROWS_AS(r.validate(), ValidationError);
  r.times[2] = 2.0;
  CHECK_NOTHROW(r.validate());
  r.rho.pop_back();
  CHECK_THROWS_AS(r.validate(), ValidationError);
}
