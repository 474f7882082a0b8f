#include "tsd/spike.hpp"

#include <algorithm>

namespace tsd {

namespace {
bool same_tick(double a, double b, double dt) { return std::llround(a / dt) == std::llround(b / dt); }
}  // namespace

bool SpikeTrain::contains(double t, double dt) const {
    auto it = std::lower_bound(times_.begin(), times_.end(), t - dt * 0.5);
    return it != times_.end() && same_tick(*it, t, dt);
}

bool SpikeTrain::latest_before(double t, double& out) const {
    auto it = std::lower_bound(times_.begin(), times_.end(), t);
    if (it == times_.begin()) return false;
    out = *std::prev(it);
    return true;
}

std::vector<double> SpikeTrain::in_window(double t_lo, double t_hi) const {
    auto lo = std::upper_bound(times_.begin(), times_.end(), t_lo);
    auto hi = std::upper_bound(times_.begin(), times_.end(), t_hi);
    return {lo, hi};
}

std::vector<double> merge_event_times(const SpikeTrain& a, const SpikeTrain& b, double dt) {
    std::vector<double> out;
    out.reserve(a.count() + b.count());
    std::merge(a.times().begin(), a.times().end(), b.times().begin(), b.times().end(),
               std::back_inserter(out));
    out.erase(std::unique(out.begin(), out.end(),
                          [dt](double x, double y) { return same_tick(x, y, dt); }),
              out.end());
    return out;
}

}  // namespace tsd
