#pragma once

// Data-parallel inner loops. Each kernel has a plain serial reference in
// `serial` and an OpenMP version in `omp`; the library calls the OpenMP
// versions, tests compare the two, bench/ times them.
//
// Every output element depends only on its own inputs, so the OpenMP
// versions produce bit-identical results for any thread count.

#include <span>

#include "vdspec/core.hpp"

namespace vdspec::kernels {

namespace serial {

/// data[i] *= factors[i]
void multiply(std::span<complex> data, std::span<const complex> factors);

/// out[j] = scale * sum_m samples[m] * exp(-i k[j] (x0 + m dx)).
/// Direct evaluation of every exponential.
void semidiscrete_transform(std::span<const complex> samples, double x0,
                            double dx, std::span<const double> k,
                            double scale, std::span<complex> out);

}  // namespace serial

namespace omp {

void multiply(std::span<complex> data, std::span<const complex> factors);

/// Same contract as serial::semidiscrete_transform. Parallel over k; within
/// each k the exponential is advanced by a complex rotation and re-seeded
/// exactly every kReseed samples, which bounds the recurrence drift to a few
/// ulps per block.
void semidiscrete_transform(std::span<const complex> samples, double x0,
                            double dx, std::span<const double> k,
                            double scale, std::span<complex> out);

inline constexpr std::size_t kReseed = 64;

/// Number of threads an OpenMP parallel region would use right now.
int max_threads();

}  // namespace omp

}  // namespace vdspec::kernels
