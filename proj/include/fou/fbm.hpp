#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fou/path.hpp"

namespace fou {

// Sampling grid for unit-spacing fractional Gaussian noise.
struct FgnGrid {
    std::size_t n = 2;
    double hurst = 0.5;
    std::uint64_t seed = 0;

    void validate() const;
};

// Autocovariance of unit-spacing fGn increments,
// gamma(k) = (|k+1|^{2H} + |k-1|^{2H} - 2|k|^{2H}) / 2; gamma(0) = 1.
double fgn_autocovariance(double hurst, std::size_t lag);

// Eigenvalues of the circulant embedding of Toeplitz(gamma(0..n)), size 2n.
// Exposed for diagnostics; simulate_fgn checks them against the PSD
// tolerance before synthesis.
std::vector<double> circulant_eigenvalues(double hurst, std::size_t n);

// One draw of n unit-spacing fGn values by circulant embedding
// (Davies-Harte). Exact covariance, deterministic per seed.
std::vector<double> simulate_fgn(const FgnGrid& grid);

// Fractional Brownian motion on {0, delta, ..., n delta} via cumulative
// sigma * delta^H-scaled fGn; n+1 values, the first exactly 0.
Path simulate_fbm(std::size_t n, double delta, double sigma, double hurst,
                  std::uint64_t seed);

}  // namespace fou
