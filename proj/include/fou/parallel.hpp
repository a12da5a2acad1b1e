#pragma once

#include <cstddef>
#include <span>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fou {

// Thread budget for all parallel regions: FOUKIT_THREADS caps it, the
// OpenMP default applies otherwise. Always >= 1.
int thread_cap();

// Pairwise (cascade) summation. Deterministic and more accurate than a
// running sum for long inputs.
double pairwise_sum(std::span<const double> xs);

namespace detail {
inline constexpr std::size_t kChunkSize = 1024;
}

// Sum of term(i) for i in [0, n). The range is cut into fixed-size chunks
// so the partial sums, and therefore the result, do not depend on the
// number of threads; the partials are combined pairwise.
template <class F>
double chunked_parallel_sum(std::size_t n, F&& term) {
    if (n == 0) return 0.0;
    constexpr std::size_t chunk = detail::kChunkSize;
    const std::size_t n_chunks = (n + chunk - 1) / chunk;
    std::vector<double> partial(n_chunks, 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(thread_cap())
#endif
    for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(n_chunks); ++c) {
        const std::size_t lo = static_cast<std::size_t>(c) * chunk;
        const std::size_t hi = lo + chunk < n ? lo + chunk : n;
        double acc = 0.0;
        for (std::size_t i = lo; i < hi; ++i) acc += term(i);
        partial[static_cast<std::size_t>(c)] = acc;
    }
    return pairwise_sum(partial);
}

}  // namespace fou
