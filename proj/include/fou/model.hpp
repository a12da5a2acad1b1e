#pragma once

#include <cstddef>
#include <vector>

namespace fou {

struct FouComponent {
    double lambda = 1.0;
    int multiplicity = 1;
};

// Model parameters: mean-reversion rates with multiplicities (strictly
// increasing lambdas), noise scale sigma and Hurst exponent.
struct FouSpec {
    std::vector<FouComponent> components;
    double sigma = 1.0;
    double hurst = 0.5;

    int total_order() const;  // p = sum of multiplicities
    double lambda_min() const;
    double lambda_max() const;
    bool single_lambda() const { return components.size() == 1; }

    void validate() const;  // throws InvalidArgument
};

// K_i = 1 / prod_{j != i} (1 - lambda_j / lambda_i); (1) when q = 1.
std::vector<double> ki_coefficients(const FouSpec& spec);

// Closed-form stationary variance for q = 1:
// sigma^2 H Gamma(2H) prod_{i=1}^{p-1}(i - H) / ((p-1)! lambda^{2H}).
double stationary_variance(const FouSpec& spec);

// g(H) = prod_{i=1}^{p-1} (i - H) / (p-1)!; equals 1 for p = 1.
double g_closed_form(double hurst, int p);

// Independent numerical route to g(H) through the weighted double
// integrals g_ij(H) = int_0^inf u^i e^-u int_0^inf v^j e^-v |u-v|^{2H-2}.
// Valid for H > 1/2 and p >= 2 as the integral representation stands.
double g_quadrature_oracle(double hurst, int p);

// f(x) = sigma^2 Gamma(2H+1) sin(H pi) |x|^{2p-1-2H}
//        / (2 pi prod_i (lambda_i^2 + x^2)^{p_i}).
double spectral_density(const FouSpec& spec, double x);

// Total spectral mass int_R f(x) dx by adaptive quadrature with the
// |x|^{2p-1-2H} endpoint handled by substitution and an algebraic tail
// bound below 1e-10 of the running total.
double spectral_integral_variance(const FouSpec& spec);

// gamma(tau) = int_R f(x) cos(tau x) dx; gamma(0) is the variance.
double autocovariance(const FouSpec& spec, double tau);

// gamma(k * delta) for k = 0..count-1, lags computed in parallel.
std::vector<double> autocovariance_grid(const FouSpec& spec, double delta,
                                        std::size_t count);

}  // namespace fou
