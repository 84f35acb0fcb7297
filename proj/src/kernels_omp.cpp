#include <omp.h>

#include <algorithm>
#include <cassert>
#include <cstdint>

#include "vdspec/kernels.hpp"

namespace vdspec::kernels::omp {

void multiply(std::span<complex> data, std::span<const complex> factors) {
  assert(data.size() == factors.size());
  const auto n = static_cast<std::int64_t>(data.size());
  complex* d = data.data();
  const complex* f = factors.data();
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) d[i] *= f[i];
}

void semidiscrete_transform(std::span<const complex> samples, double x0,
                            double dx, std::span<const double> k,
                            double scale, std::span<complex> out) {
  assert(k.size() == out.size());
  const auto nk = static_cast<std::int64_t>(k.size());
  const std::size_t n = samples.size();
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t j = 0; j < nk; ++j) {
    const double kj = k[j];
    const complex step = std::polar(1.0, -kj * dx);
    complex acc{0.0, 0.0};
    for (std::size_t m0 = 0; m0 < n; m0 += kReseed) {
      complex w = std::polar(1.0, -kj * (x0 + static_cast<double>(m0) * dx));
      const std::size_t m1 = std::min(n, m0 + kReseed);
      for (std::size_t m = m0; m < m1; ++m) {
        acc += samples[m] * w;
        w *= step;
      }
    }
    out[j] = scale * acc;
  }
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace vdspec::kernels::omp
