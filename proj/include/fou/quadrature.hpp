#pragma once

#include <functional>

namespace fou::quad {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    int intervals = 0;
};

// Globally adaptive Gauss-Kronrod 7/15 on [a, b]. Splits the interval
// with the largest error estimate until the total satisfies
// max(abs_tol, rel_tol * |value|), throws QuadratureNotConverged when the
// interval budget runs out first.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol, double rel_tol, int max_intervals = 4000);

}  // namespace fou::quad
