#include "tsd/metric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tsd {

FilteredTrain filter_train(const SpikeTrain& s, double sigma_ms, const TimeGrid& grid) {
    if (sigma_ms <= 0.0) throw std::invalid_argument("filter_train: sigma must be positive");
    const std::int64_t n = grid.n_ticks();
    FilteredTrain values(static_cast<std::size_t>(n) + 1, 0.0);
    const double inv2s2 = 1.0 / (2.0 * sigma_ms * sigma_ms);
    const std::int64_t half = static_cast<std::int64_t>(std::ceil(4.0 * sigma_ms / grid.dt));
    for (double t : s.times()) {
        const std::int64_t c = grid.tick_of(t);
        const std::int64_t lo = std::max<std::int64_t>(0, c - half);
        const std::int64_t hi = std::min<std::int64_t>(n, c + half);
        for (std::int64_t k = lo; k <= hi; ++k) {
            const double d = grid.time_of(k) - t;
            values[static_cast<std::size_t>(k)] += std::exp(-d * d * inv2s2);
        }
    }
    return values;
}

double correlation_c(const SpikeTrain& actual, const SpikeTrain& desired, double sigma_ms,
                     const TimeGrid& grid) {
    if (actual.empty() && desired.empty()) return 1.0;
    if (actual.empty() || desired.empty()) return 0.0;
    const FilteredTrain va = filter_train(actual, sigma_ms, grid);
    const FilteredTrain vd = filter_train(desired, sigma_ms, grid);
    double dot = 0.0, na = 0.0, nd = 0.0;
    for (std::size_t k = 0; k < va.size(); ++k) {
        dot += va[k] * vd[k];
        na += va[k] * va[k];
        nd += vd[k] * vd[k];
    }
    if (na == 0.0 || nd == 0.0) return 0.0;
    return std::clamp(dot / std::sqrt(na * nd), 0.0, 1.0);
}

}  // namespace tsd
