#include "tsd/poisson.hpp"

#include <random>
#include <stdexcept>

namespace tsd {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double u01(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

SpikeTrain generate_poisson_train(double rate_hz, const TimeGrid& grid, std::uint64_t seed) {
    if (rate_hz < 0.0) throw std::invalid_argument("generate_poisson_train: negative rate");
    const double p = rate_hz * grid.dt / 1000.0;
    if (p > 1.0)
        throw std::invalid_argument("generate_poisson_train: rate too high for grid (p > 1)");
    std::mt19937_64 rng(seed);
    std::vector<double> times;
    const std::int64_t n = grid.n_ticks();
    for (std::int64_t k = 0; k <= n; ++k) {
        if (u01(rng()) < p) times.push_back(grid.time_of(k));
    }
    return SpikeTrain(std::move(times));
}

}  // namespace tsd
