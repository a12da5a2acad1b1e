#pragma once

#include <cstddef>
#include <vector>

namespace fou {

// Equispaced sample X_delta, X_{2 delta}, ..., X_{n delta}; the horizon is
// T = n * delta.
struct Path {
    std::vector<double> values;
    double delta = 1.0;

    std::size_t size() const noexcept { return values.size(); }
    double horizon() const noexcept {
        return delta * static_cast<double>(values.size());
    }
};

}  // namespace fou
