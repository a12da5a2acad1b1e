#include "fou/parallel.hpp"

#include <cstdlib>
#include <string>

namespace fou {

int thread_cap() {
    static const int cap = [] {
        int n = 1;
#ifdef _OPENMP
        n = omp_get_max_threads();
#endif
        if (const char* env = std::getenv("FOUKIT_THREADS")) {
            try {
                const int requested = std::stoi(env);
                if (requested >= 1) n = requested;
            } catch (...) {
                // unparsable value: keep the default
            }
        }
        return n;
    }();
    return cap;
}

double pairwise_sum(std::span<const double> xs) {
    const std::size_t n = xs.size();
    if (n == 0) return 0.0;
    if (n <= 8) {
        double acc = 0.0;
        for (double x : xs) acc += x;
        return acc;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

}  // namespace fou
