#include "fou/kernels.hpp"

#include <cmath>
#include <numbers>

#include "fou/parallel.hpp"

namespace fou::kernels {

double filtered_sumsq(std::span<const double> x, std::span<const double> coeffs) {
    const std::size_t k = coeffs.size() - 1;
    if (x.size() < coeffs.size()) return 0.0;
    const std::size_t windows = x.size() - k;
    return chunked_parallel_sum(windows, [&](std::size_t i) {
        double acc = 0.0;
        for (std::size_t j = 0; j <= k; ++j) acc += coeffs[j] * x[i + j];
        return acc * acc;
    });
}

std::vector<double> periodogram_grid(std::span<const double> x, double delta,
                                     std::span<const double> freqs) {
    const std::size_t n = x.size();
    const double horizon = delta * static_cast<double>(n);
    const double scale = delta * delta / (2.0 * std::numbers::pi * horizon);
    std::vector<double> out(freqs.size(), 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(thread_cap())
#endif
    for (std::ptrdiff_t fi = 0; fi < static_cast<std::ptrdiff_t>(freqs.size()); ++fi) {
        const double w = freqs[static_cast<std::size_t>(fi)];
        double re = 0.0, im = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double phase = -w * delta * static_cast<double>(j + 1);
            re += x[j] * std::cos(phase);
            im += x[j] * std::sin(phase);
        }
        out[static_cast<std::size_t>(fi)] = scale * (re * re + im * im);
    }
    return out;
}

namespace serial {

double filtered_sumsq(std::span<const double> x, std::span<const double> coeffs) {
    const std::size_t k = coeffs.size() - 1;
    if (x.size() < coeffs.size()) return 0.0;
    double total = 0.0;
    for (std::size_t i = 0; i + k < x.size(); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j <= k; ++j) acc += coeffs[j] * x[i + j];
        total += acc * acc;
    }
    return total;
}

std::vector<double> periodogram_grid(std::span<const double> x, double delta,
                                     std::span<const double> freqs) {
    const std::size_t n = x.size();
    const double horizon = delta * static_cast<double>(n);
    const double scale = delta * delta / (2.0 * std::numbers::pi * horizon);
    std::vector<double> out(freqs.size(), 0.0);
    for (std::size_t fi = 0; fi < freqs.size(); ++fi) {
        const double w = freqs[fi];
        double re = 0.0, im = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double phase = -w * delta * static_cast<double>(j + 1);
            re += x[j] * std::cos(phase);
            im += x[j] * std::sin(phase);
        }
        out[fi] = scale * (re * re + im * im);
    }
    return out;
}

}  // namespace serial
}  // namespace fou::kernels
