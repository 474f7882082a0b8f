#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tsd/metric.hpp"
#include "tsd/rules.hpp"
#include "tsd/srm.hpp"

namespace tsd {

struct ExperimentConfig {
    std::size_t n_inputs = 200;
    double duration = 200.0;     // ms
    double dt = 0.1;             // ms
    double input_rate = 40.0;    // Hz
    double desired_rate = 50.0;  // Hz
    RuleConfig rule = TsdParams{};
    std::size_t max_epochs = 1500;
    std::uint64_t seed = 1;
    std::optional<std::pair<double, double>> weight_init;  // uniform range; auto-calibrated if unset
    double sigma_c = 2.0;  // ms, Gaussian filter width for C
    SrmParams srm{};

    TimeGrid grid() const { return TimeGrid(duration, dt); }
    void validate() const;
};

struct EpochRecord {
    std::size_t epoch = 0;  // 1-based
    double c_value = 0.0;
    std::size_t n_actual_spikes = 0;
    double weight_l2 = 0.0;
    double weight_delta_l1 = 0.0;
};

/// Best-C bookkeeping: a candidate replaces the incumbent only when C is
/// higher and the average per-epoch increment since the incumbent exceeds
/// 1e-5.
struct BestTracker {
    double best_c = 0.0;
    std::size_t best_epoch = 0;

    bool offer(std::size_t epoch, double c);
};

struct ExperimentResult {
    ExperimentConfig config;
    std::pair<double, double> weight_init_used{0.0, 0.0};
    std::vector<EpochRecord> records;
    double best_c = 0.0;
    std::size_t best_epoch = 0;
    bool converged = false;  // best_c == 1 within 1e-9
    std::vector<double> final_weights;
};

struct EpochOutcome {
    SpikeTrain actual;
    double weight_delta_l1 = 0.0;
};

/// One training epoch. Online rules update weights at output-event ticks via
/// the simulate hook; the offline rule applies one delta per synapse after the
/// run. Weights are mutated in place.
EpochOutcome run_epoch(Network& net, const std::vector<SpikeTrain>& inputs,
                       const SpikeTrain& desired, const RuleConfig& rule, const TimeGrid& grid);

/// Bisect a uniform weight-init upper bound so the untrained neuron fires at
/// roughly the desired spike count.
std::pair<double, double> calibrate_weight_init(const ExperimentConfig& cfg,
                                                const std::vector<SpikeTrain>& inputs,
                                                const SpikeTrain& desired, const TimeGrid& grid);

std::vector<double> draw_initial_weights(std::pair<double, double> range, std::size_t n,
                                         std::uint64_t seed);

/// Seeded Poisson draws used by train(): input train i uses stream i, the
/// desired train its own reserved stream.
std::vector<SpikeTrain> draw_input_trains(const ExperimentConfig& cfg);
SpikeTrain draw_desired_train(const ExperimentConfig& cfg);

/// Full experiment: draw trains once from the seed, train for max_epochs or
/// until C reaches 1.
ExperimentResult train(const ExperimentConfig& cfg);

/// Run train once per learning rate (same seed); returns the rate with the
/// highest best C, ties going to the smaller rate.
std::pair<double, ExperimentResult> tune_lr(const ExperimentConfig& cfg,
                                            const std::vector<double>& lr_grid);

/// Log-spaced learning-rate grid: points_per_decade points per decade over
/// [center/10^span, center*10^span].
std::vector<double> log_lr_grid(double center, double span_decades = 1.0,
                                std::size_t points_per_decade = 4);

}  // namespace tsd
