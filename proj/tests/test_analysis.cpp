#include <cmath>

#include "doctest.h"
#include "vdspec/analysis.hpp"

using namespace vdspec;

namespace {

const Grid1D kGrid = Grid1D::centered(32768, 0.1);

Spectrum make(vector_real k, vector_real d) {
  Spectrum s;
  s.k_values = std::move(k);
  s.density = std::move(d);
  s.flags.assign(s.k_values.size(), kFlagNone);
  return s;
}

vector_real uniform_k(double lo, double hi, std::size_t n) {
  vector_real k(n);
  for (std::size_t i = 0; i < n; ++i)
    k[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return k;
}

}  // namespace

TEST_CASE("exact_spectrum of a Gaussian") {
  const GaussianParams p{-250.0, 50.0, 1.0, 0.0};
  const auto wf = gaussian_packet(kGrid, p);

  SUBCASE("Parseval on a dense uniform grid") {
    const auto k = uniform_k(0.8, 1.2, 4001);
    const auto s = exact_spectrum(wf, k);
    double sum = 0.0;
    for (double d : s.density) sum += d * (k[1] - k[0]);
    CHECK(std::abs(sum - 1.0) < 1e-6);
  }

  SUBCASE("peak density") {
    const vector_real k{1.0};
    CHECK(exact_spectrum(wf, k).density[0] ==
          doctest::Approx(39.89422804014327).epsilon(1e-10));
    CHECK(analytic_gaussian_spectrum(p, 1.0) ==
          doctest::Approx(39.89422804014327).epsilon(1e-14));
  }

  SUBCASE("matches the analytic density and amplitude near k0") {
    const double half = 5.0 / (2.0 * p.sigma_x);
    const auto k = uniform_k(p.k0 - half, p.k0 + half, 801);
    const auto s = exact_spectrum(wf, k);
    double worst_d = 0.0, worst_a = 0.0, peak = 0.0;
    for (std::size_t i = 0; i < k.size(); ++i) {
      const double ref = analytic_gaussian_spectrum(p, k[i]);
      worst_d = std::max(worst_d, std::abs(s.density[i] - ref));
      worst_a = std::max(worst_a, std::abs((*s.amplitude)[i] - analytic_gaussian_amplitude(p, k[i])));
      peak = std::max(peak, ref);
    }
    CHECK(worst_d / peak < 1e-8);
    CHECK(worst_a / std::sqrt(peak) < 1e-8);
  }

  SUBCASE("linear in the wavefunction") {
    const auto other = gaussian_packet(kGrid, {300.0, 30.0, -0.6, 0.4});
    const complex a{0.6, -0.2}, b{-1.1, 0.7};
    const auto k = uniform_k(-2.0, 2.0, 301);
    const auto sa = exact_spectrum(wf, k), sb = exact_spectrum(other, k);
    const auto sab = exact_spectrum(superpose(wf, other, a, b), k);
    double worst = 0.0;
    for (std::size_t i = 0; i < k.size(); ++i)
      worst = std::max(worst, std::abs((*sab.amplitude)[i] -
                                       (a * (*sa.amplitude)[i] + b * (*sb.amplitude)[i])));
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("antisymmetric pair has no k = 0 component") {
  const double r = 1.0 / std::sqrt(2.0);
  const auto s = superpose(gaussian_packet(kGrid, {-250.0, 50.0, 0.5, 0.0}),
                           gaussian_packet(kGrid, {250.0, 50.0, -0.5, 0.0}), r, -r);
  const vector_real k{0.0};
  CHECK(exact_spectrum(s, k).density[0] < 1e-28);
}

TEST_CASE("analytic_gaussian_spectrum") {
  const GaussianParams p{-250.0, 50.0, 1.0, 0.0};
  const double peak = analytic_gaussian_spectrum(p, 1.0);
  CHECK(analytic_gaussian_spectrum(p, 1.01) == doctest::Approx(std::exp(-0.5) * peak).epsilon(1e-12));
  CHECK(analytic_gaussian_spectrum(p, 0.99) == doctest::Approx(std::exp(-0.5) * peak).epsilon(1e-12));

  // Simpson over +-10 std
  const std::size_t n = 4000;
  const double lo = 0.8, h = 0.4 / n;
  double s = 0.0;
  for (std::size_t i = 0; i <= n; ++i) {
    const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    s += w * analytic_gaussian_spectrum(p, lo + h * i);
  }
  CHECK(s * h / 3.0 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::norm(analytic_gaussian_amplitude(p, 1.003)) ==
        doctest::Approx(analytic_gaussian_spectrum(p, 1.003)).epsilon(1e-14));
}

TEST_CASE("compare") {
  const auto k = uniform_k(-1.0, 1.0, 201);
  vector_real da(k.size()), db(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) {
    da[i] = std::exp(-50.0 * (k[i] - 0.3) * (k[i] - 0.3));
    db[i] = std::exp(-40.0 * (k[i] - 0.25) * (k[i] - 0.25));
  }
  const auto a = make(k, da), b = make(k, db);

  SUBCASE("identity") {
    const auto r = compare(a, a);
    CHECK(r.l1 == 0.0);
    CHECK(r.l2_rel == 0.0);
    CHECK(r.sup_rel == 0.0);
    CHECK(r.overlap == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r.peak_k_a == doctest::Approx(0.3));
    CHECK(r.peak_k_a == r.peak_k_b);
  }

  SUBCASE("scaled copy") {
    vector_real d2 = da;
    for (auto& v : d2) v *= 2.0;
    const auto r = compare(a, make(k, d2));
    CHECK(r.l2_rel == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r.sup_rel == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r.overlap == doctest::Approx(1.0).epsilon(1e-14));
  }

  SUBCASE("disjoint supports") {
    vector_real left(k.size()), right(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) (k[i] < 0.0 ? left : right)[i] = 1.0;
    const auto r = compare(make(k, left), make(k, right));
    CHECK(r.overlap == 0.0);
    CHECK(r.l2_rel == doctest::Approx(std::sqrt(201.0 / 100.0)));
  }

  SUBCASE("symmetry of l1 and overlap") {
    const auto ab = compare(a, b), ba = compare(b, a);
    CHECK(ab.l1 == doctest::Approx(ba.l1).epsilon(1e-14));
    CHECK(ab.overlap == doctest::Approx(ba.overlap).epsilon(1e-14));
    CHECK(ab.support_points == ba.support_points);
    CHECK(ab.l2_rel != doctest::Approx(ba.l2_rel));
    CHECK(ab.overlap > 0.0);
    CHECK(ab.overlap < 1.0);
  }

  SUBCASE("region and floor restrict the support set") {
    const auto all = compare(a, b, {}, 0.0);
    CHECK(all.support_points == k.size());
    const auto part = compare(a, b, {0.0, 0.5});
    CHECK(part.support_points < all.support_points);
    CHECK(part.region.lo == 0.0);
  }

  SUBCASE("zero reference gives infinite relative error") {
    const auto r = compare(make(k, vector_real(k.size())), a);
    CHECK(std::isinf(r.l2_rel));
    CHECK(r.overlap == 0.0);
  }

  SUBCASE("errors") {
    auto shifted = k;
    shifted[5] += 1e-9;
    CHECK_THROWS_AS(compare(a, make(shifted, db)), ValidationError);
    CHECK_THROWS_AS(compare(a, make(vector_real(k.begin(), k.end() - 1),
                                    vector_real(da.begin(), da.end() - 1))),
                    ValidationError);
    CHECK_THROWS_AS(compare(a, b, {5.0, 6.0}), ValidationError);
    const vector_real zeros(k.size());
    CHECK_THROWS_AS(compare(make(k, zeros), make(k, zeros)), ValidationError);
  }
}

TEST_CASE("restrict_to, peak_index and total_power") {
  const auto k = uniform_k(-1.0, 1.0, 21);
  vector_real d(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) d[i] = 1.0 + k[i];
  const auto s = make(k, d);

  const auto pos = restrict_to(s, {0.0});
  CHECK(pos.size() == 11);
  CHECK(pos.k_values.front() == doctest::Approx(0.0));
  CHECK(peak_index(s) == 20);
  CHECK(peak_index(s, {-1.0, 0.0}) == 10);
  CHECK_THROWS_AS(peak_index(s, {3.0, 4.0}), ValidationError);
  CHECK(total_power(s) == doctest::Approx(21.0));
}
