#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace tsd {

/// Discrete simulation grid. All spike times in the system lie on multiples
/// of dt inside [0, T].
struct TimeGrid {
    double dt = 0.1;   // ms
    double horizon;    // T, ms

    TimeGrid(double horizon_ms, double dt_ms = 0.1) : dt(dt_ms), horizon(horizon_ms) {
        if (dt <= 0.0 || horizon <= 0.0)
            throw std::invalid_argument("TimeGrid: dt and horizon must be positive");
        if (std::abs(horizon / dt - std::round(horizon / dt)) > 1e-9)
            throw std::invalid_argument("TimeGrid: horizon must be a multiple of dt");
    }

    std::int64_t tick_of(double t) const { return std::llround(t / dt); }
    double time_of(std::int64_t tick) const { return static_cast<double>(tick) * dt; }
    std::int64_t n_ticks() const { return tick_of(horizon); }
    bool contains(double t) const {
        return t >= -dt * 0.5 && t <= horizon + dt * 0.5 &&
               std::abs(t - time_of(tick_of(t))) < dt * 1e-6;
    }
};

/// Ordered sequence of firing times (ms), strictly increasing, all on-grid.
class SpikeTrain {
  public:
    SpikeTrain() = default;
    explicit SpikeTrain(std::vector<double> times) : times_(std::move(times)) {
        for (std::size_t i = 1; i < times_.size(); ++i)
            if (times_[i] <= times_[i - 1])
                throw std::invalid_argument("SpikeTrain: times must be strictly increasing");
        if (!times_.empty() && times_.front() < 0.0)
            throw std::invalid_argument("SpikeTrain: negative spike time");
    }

    const std::vector<double>& times() const { return times_; }
    std::size_t count() const { return times_.size(); }
    bool empty() const { return times_.empty(); }
    double operator[](std::size_t i) const { return times_[i]; }

    /// Membership test at grid resolution.
    bool contains(double t, double dt = 0.1) const;

    /// Latest spike strictly before t, or nullopt-like: returns false if none.
    bool latest_before(double t, double& out) const;

    /// Spike times in the half-open window (t_lo, t_hi].
    std::vector<double> in_window(double t_lo, double t_hi) const;

  private:
    std::vector<double> times_;
};

/// Merge two trains into one sorted event list (duplicates collapsed at grid
/// resolution).
std::vector<double> merge_event_times(const SpikeTrain& a, const SpikeTrain& b, double dt = 0.1);

}  // namespace tsd
