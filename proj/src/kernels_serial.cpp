#include <cassert>

#include "vdspec/kernels.hpp"

namespace vdspec::kernels::serial {

void multiply(std::span<complex> data, std::span<const complex> factors) {
  assert(data.size() == factors.size());
  for (std::size_t i = 0; i < data.size(); ++i) data[i] *= factors[i];
}

void semidiscrete_transform(std::span<const complex> samples, double x0,
                            double dx, std::span<const double> k,
                            double scale, std::span<complex> out) {
  assert(k.size() == out.size());
  for (std::size_t j = 0; j < k.size(); ++j) {
    complex acc{0.0, 0.0};
    for (std::size_t m = 0; m < samples.size(); ++m) {
      const double x = x0 + static_cast<double>(m) * dx;
      acc += samples[m] * std::polar(1.0, -k[j] * x);
    }
    out[j] = scale * acc;
  }
}

}  // namespace vdspec::kernels::serial
