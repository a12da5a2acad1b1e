#pragma once

#include <span>
#include <vector>

namespace fou::kernels {

// Sum over all full windows of (sum_j a_j x_{i+j})^2. OpenMP-parallel with
// a thread-count-independent reduction.
double filtered_sumsq(std::span<const double> x, std::span<const double> coeffs);

// Discretized second-order periodogram on an arbitrary frequency grid:
// I(x) = |sum_j X_j e^{-i j delta x} delta|^2 / (2 pi T), samples at
// t = delta, ..., n delta. Parallel across frequencies.
std::vector<double> periodogram_grid(std::span<const double> x, double delta,
                                     std::span<const double> freqs);

// Plain-loop reference implementations, kept for tests and benchmarks.
namespace serial {
double filtered_sumsq(std::span<const double> x, std::span<const double> coeffs);
std::vector<double> periodogram_grid(std::span<const double> x, double delta,
                                     std::span<const double> freqs);
}  // namespace serial

}  // namespace fou::kernels
