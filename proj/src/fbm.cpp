#include "fou/fbm.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <mutex>
#include <string>

#include "fou/errors.hpp"
#include "fou/rng.hpp"

namespace fou {
namespace {

// FFTW plan creation/destruction is not thread-safe; executing a plan is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

// eigenvalues in [-kPsdTol * max_eig, 0) are treated as round-off
constexpr double kPsdTol = 1e-9;

}  // namespace

void FgnGrid::validate() const {
    if (!(hurst > 0.0 && hurst < 1.0))
        throw InvalidArgument("FgnGrid: hurst must lie in (0,1), got " +
                              std::to_string(hurst));
    if (n < 2) throw InvalidArgument("FgnGrid: n must be >= 2");
}

double fgn_autocovariance(double hurst, std::size_t lag) {
    if (!(hurst > 0.0 && hurst < 1.0))
        throw InvalidArgument("fgn_autocovariance: hurst must lie in (0,1)");
    const double k = static_cast<double>(lag);
    const double two_h = 2.0 * hurst;
    return 0.5 * (std::pow(k + 1.0, two_h) + std::pow(std::abs(k - 1.0), two_h) -
                  2.0 * std::pow(k, two_h));
}

std::vector<double> circulant_eigenvalues(double hurst, std::size_t n) {
    // First row of the circulant embedding is even-symmetric, so the
    // eigenvalues for j = 0..n come out of a DCT-I of gamma(0..n); the
    // remaining ones mirror them.
    std::vector<double> head(n + 1);
    for (std::size_t k = 0; k <= n; ++k) head[k] = fgn_autocovariance(hurst, k);

    std::vector<double> eig(n + 1);
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan = fftw_plan_r2r_1d(static_cast<int>(n + 1), head.data(), eig.data(),
                                FFTW_REDFT00, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
    return eig;
}

std::vector<double> simulate_fgn(const FgnGrid& grid) {
    grid.validate();
    const std::size_t n = grid.n;
    const std::size_t m = 2 * n;  // embedding size

    std::vector<double> eig = circulant_eigenvalues(grid.hurst, n);
    const double max_eig = *std::max_element(eig.begin(), eig.end());
    for (double& value : eig) {
        if (value < 0.0) {
            if (value < -kPsdTol * max_eig)
                throw CirculantNotPSD(
                    "circulant embedding eigenvalue " + std::to_string(value) +
                    " below tolerance (max " + std::to_string(max_eig) + ")");
            value = 0.0;
        }
    }

    // Hermitian half-spectrum with independent Gaussian amplitudes:
    // Y_0, Y_n real with variance eig; Y_j complex with variance eig/2
    // per component. X = c2r(Y) / sqrt(m) then has covariance gamma.
    Xoshiro256pp rng(grid.seed);
    std::vector<std::complex<double>> spectrum(n + 1);
    spectrum[0] = std::sqrt(eig[0]) * rng.next_gaussian();
    for (std::size_t j = 1; j < n; ++j) {
        const double amp = std::sqrt(0.5 * eig[j]);
        const double u = rng.next_gaussian();
        const double v = rng.next_gaussian();
        spectrum[j] = {amp * u, amp * v};
    }
    spectrum[n] = std::sqrt(eig[n]) * rng.next_gaussian();

    std::vector<double> out(m);
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan = fftw_plan_dft_c2r_1d(
            static_cast<int>(m), reinterpret_cast<fftw_complex*>(spectrum.data()),
            out.data(), FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan);
    }

    const double norm = 1.0 / std::sqrt(static_cast<double>(m));
    std::vector<double> sample(n);
    for (std::size_t i = 0; i < n; ++i) sample[i] = out[i] * norm;
    return sample;
}

Path simulate_fbm(std::size_t n, double delta, double sigma, double hurst,
                  std::uint64_t seed) {
    if (n < 1) throw InvalidArgument("simulate_fbm: n must be >= 1");
    if (!(delta > 0.0)) throw InvalidArgument("simulate_fbm: delta must be > 0");
    if (!(sigma > 0.0)) throw InvalidArgument("simulate_fbm: sigma must be > 0");
    if (!(hurst > 0.0 && hurst < 1.0))
        throw InvalidArgument("simulate_fbm: hurst must lie in (0,1)");

    std::vector<double> noise;
    if (n == 1) {
        // the embedding needs n >= 2; a single increment is just a normal draw
        Xoshiro256pp rng(seed);
        noise.assign(1, rng.next_gaussian());
    } else {
        noise = simulate_fgn(FgnGrid{n, hurst, seed});
    }

    Path path;
    path.delta = delta;
    path.values.resize(n + 1);
    path.values[0] = 0.0;
    const double scale = sigma * std::pow(delta, hurst);
    for (std::size_t i = 0; i < n; ++i)
        path.values[i + 1] = path.values[i] + scale * noise[i];
    return path;
}

}  // namespace fou
