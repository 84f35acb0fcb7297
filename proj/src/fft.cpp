#include "vdspec/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <new>
#include <utility>

namespace vdspec {

namespace {

// The FFTW planner is not re-entrant.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

bool is_efficient(std::size_t n) {
  for (std::size_t p : {2u, 3u, 5u, 7u})
    while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

Fft::Fft(std::size_t n) : n_(n) {
  if (n == 0) throw ValidationError("FFT length must be positive");
  data_ = reinterpret_cast<complex*>(fftw_alloc_complex(n));
  if (data_ == nullptr) throw std::bad_alloc();
  auto* raw = reinterpret_cast<fftw_complex*>(data_);
  {
    std::lock_guard lock(planner_mutex());
    forward_plan_ = fftw_plan_dft_1d(static_cast<int>(n), raw, raw,
                                     FFTW_FORWARD, FFTW_ESTIMATE);
    backward_plan_ = fftw_plan_dft_1d(static_cast<int>(n), raw, raw,
                                      FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  if (forward_plan_ == nullptr || backward_plan_ == nullptr) {
    release();
    throw Error("FFTW failed to create a plan");
  }
  for (auto& z : buffer()) z = complex{};
}

Fft::~Fft() { release(); }

Fft::Fft(Fft&& other) noexcept
    : n_(std::exchange(other.n_, 0)),
      data_(std::exchange(other.data_, nullptr)),
      forward_plan_(std::exchange(other.forward_plan_, nullptr)),
      backward_plan_(std::exchange(other.backward_plan_, nullptr)) {}

Fft& Fft::operator=(Fft&& other) noexcept {
  if (this != &other) {
    release();
    n_ = std::exchange(other.n_, 0);
    data_ = std::exchange(other.data_, nullptr);
    forward_plan_ = std::exchange(other.forward_plan_, nullptr);
    backward_plan_ = std::exchange(other.backward_plan_, nullptr);
  }
  return *this;
}

void Fft::release() noexcept {
  if (forward_plan_ != nullptr || backward_plan_ != nullptr) {
    std::lock_guard lock(planner_mutex());
    if (forward_plan_) fftw_destroy_plan(static_cast<fftw_plan>(forward_plan_));
    if (backward_plan_)
      fftw_destroy_plan(static_cast<fftw_plan>(backward_plan_));
  }
  forward_plan_ = backward_plan_ = nullptr;
  if (data_) fftw_free(data_);
  data_ = nullptr;
}

void Fft::forward() { fftw_execute(static_cast<fftw_plan>(forward_plan_)); }
void Fft::backward() { fftw_execute(static_cast<fftw_plan>(backward_plan_)); }

std::size_t efficient_fft_size(std::size_t n) {
  std::size_t m = n < 2 ? 2 : n;
  while (m % 2 != 0 || !is_efficient(m)) ++m;
  return m;
}

}  // namespace vdspec
