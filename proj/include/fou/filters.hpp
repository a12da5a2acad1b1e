#pragma once

#include <span>
#include <vector>

#include "fou/path.hpp"

namespace fou {

// Coefficient vector a_0..a_k whose moments sum_i a_i i^l vanish for
// l < order and not for l = order (0^0 = 1). The order is verified from
// the coefficients, never declared.
class Filter {
public:
    std::span<const double> coeffs() const noexcept { return coeffs_; }
    int order() const noexcept { return order_; }
    std::size_t length() const noexcept { return coeffs_.size(); }

private:
    friend Filter validate_filter(std::vector<double> coeffs);
    Filter(std::vector<double> coeffs, int order)
        : coeffs_(std::move(coeffs)), order_(order) {}

    std::vector<double> coeffs_;
    int order_;
};

// Scans the moment conditions to find the true order; throws NotAFilter
// when the zeroth moment does not vanish.
Filter validate_filter(std::vector<double> coeffs);

// Alternating binomial filter a_j = (-1)^{j+1} C(k, j); order exactly k,
// length k+1.
Filter binomial_filter(int k);

// The 4-tap Daubechies filter of order 2 (coefficients scaled by 1/sqrt 2).
Filter daubechies2_filter();

// a^2 = (a_0, 0, a_1, 0, ..., a_k): zeros interleaved, order preserved.
Filter dilate(const Filter& filter);

// V_{n,a} = (1/n) sum over windows of (sum_j a_j X_{i+j})^2.
// Normalization is 1/n, not 1/(number of windows).
double quadratic_variation(const Path& path, const Filter& filter);

// sum_{i,j} a_i a_j |i-j|^{2H}; strictly negative for valid filters and
// H in (0,1), which makes the sigma estimator's radicand positive.
double filter_moment_sum(const Filter& filter, double two_h);

}  // namespace fou
