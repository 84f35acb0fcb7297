#pragma once

#include <cstddef>
#include <span>

#include "vdspec/core.hpp"

namespace vdspec {

/// In-place complex FFT of fixed length backed by FFTW.
///
/// Owns an aligned work buffer and a forward/backward plan pair made with
/// FFTW_ESTIMATE, so plan choice (and therefore every result bit) depends
/// only on the length. Planning is serialized internally; execution is safe
/// from any thread on distinct instances.
///
/// Both directions are unnormalized:
///   forward:  X[j] = sum_m x[m] exp(-2 pi i j m / n)
///   backward: x[m] = sum_j X[j] exp(+2 pi i j m / n)
class Fft {
 public:
  explicit Fft(std::size_t n);
  ~Fft();
  Fft(const Fft&) = delete;
  Fft& operator=(const Fft&) = delete;
  Fft(Fft&& other) noexcept;
  Fft& operator=(Fft&& other) noexcept;

  std::size_t size() const noexcept { return n_; }
  std::span<complex> buffer() noexcept { return {data_, n_}; }
  std::span<const complex> buffer() const noexcept { return {data_, n_}; }

  void forward();
  void backward();

 private:
  void release() noexcept;

  std::size_t n_ = 0;
  complex* data_ = nullptr;
  void* forward_plan_ = nullptr;
  void* backward_plan_ = nullptr;
};

/// Smallest n' >= n of the form 2^a 3^b 5^c 7^d with n' even.
std::size_t efficient_fft_size(std::size_t n);

}  // namespace vdspec
