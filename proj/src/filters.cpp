#include "fou/filters.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fou/errors.hpp"
#include "fou/kernels.hpp"

namespace fou {
namespace {

constexpr double kMomentTol = 1e-10;

double binom(int n, int k) {
    double result = 1.0;
    for (int i = 1; i <= k; ++i)
        result *= static_cast<double>(n - k + i) / static_cast<double>(i);
    return result;
}

}  // namespace

Filter validate_filter(std::vector<double> coeffs) {
    if (coeffs.size() < 2)
        throw InvalidArgument("validate_filter: need at least 2 coefficients");

    // The moment conditions sum_i a_i i^l = 0 for l < L are equivalent to
    // the coefficient polynomial having a root of multiplicity L at x = 1.
    // Repeated synthetic division is numerically stable where the power
    // sums themselves overflow their cancellation budget (binomial k=26
    // mixes terms of size 26^25 that must cancel to zero).
    std::vector<double> work = coeffs;
    double max_abs = 0.0;
    for (double c : work) max_abs = std::max(max_abs, std::abs(c));
    if (max_abs == 0.0) throw NotAFilter("all coefficients are zero");
    for (double& c : work) c /= max_abs;  // order is scale-invariant

    int order = 0;
    while (work.size() >= 2) {
        double scale = 0.0;
        for (double c : work) scale += std::abs(c);
        std::vector<double> quotient(work.size() - 1);
        double carry = work.back();
        for (std::size_t i = work.size() - 1; i-- > 0;) {
            quotient[i] = carry;
            carry = work[i] + carry;  // Horner remainder at x = 1
        }
        if (std::abs(carry) > kMomentTol * std::max(1.0, scale)) break;
        work = std::move(quotient);
        ++order;
    }

    if (order == 0)
        throw NotAFilter("coefficient sum does not vanish");
    if (work.size() < 2 && std::abs(work.front()) <= kMomentTol)
        throw NotAFilter("all moments vanish; degenerate coefficient vector");
    return Filter(std::move(coeffs), order);
}

Filter binomial_filter(int k) {
    if (k < 1) throw InvalidArgument("binomial_filter: k must be >= 1");
    std::vector<double> coeffs(static_cast<std::size_t>(k) + 1);
    for (int j = 0; j <= k; ++j)
        coeffs[static_cast<std::size_t>(j)] = (j % 2 == 0 ? -1.0 : 1.0) * binom(k, j);
    return validate_filter(std::move(coeffs));
}

Filter daubechies2_filter() {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    return validate_filter({0.4829629131445341 * inv_sqrt2,
                            -0.8365163037378077 * inv_sqrt2,
                            0.2241438680420134 * inv_sqrt2,
                            0.1294095225512603 * inv_sqrt2});
}

Filter dilate(const Filter& filter) {
    std::vector<double> coeffs(2 * filter.length() - 1, 0.0);
    for (std::size_t i = 0; i < filter.length(); ++i)
        coeffs[2 * i] = filter.coeffs()[i];
    return validate_filter(std::move(coeffs));
}

double quadratic_variation(const Path& path, const Filter& filter) {
    const std::size_t n = path.size();
    if (n < filter.length())
        throw PathTooShort("quadratic_variation: path of " + std::to_string(n) +
                           " samples is shorter than the filter (" +
                           std::to_string(filter.length()) + ")");
    return kernels::filtered_sumsq(path.values, filter.coeffs()) /
           static_cast<double>(n);
}

double filter_moment_sum(const Filter& filter, double two_h) {
    const auto a = filter.coeffs();
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (i == j) continue;
            const double gap = std::abs(static_cast<double>(i) - static_cast<double>(j));
            acc += a[i] * a[j] * std::pow(gap, two_h);
        }
    return acc;
}

}  // namespace fou
