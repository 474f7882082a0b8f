#include "tsd/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "tsd/intervals.hpp"
#include "tsd/poisson.hpp"

namespace tsd {

namespace {
constexpr std::uint64_t kDesiredStream = 0xd5ed;
constexpr std::uint64_t kWeightStream = 0x3e16;
}  // namespace

void ExperimentConfig::validate() const {
    if (n_inputs < 1) throw std::invalid_argument("ExperimentConfig: n_inputs must be >= 1");
    if (max_epochs < 1) throw std::invalid_argument("ExperimentConfig: max_epochs must be >= 1");
    if (sigma_c <= 0.0) throw std::invalid_argument("ExperimentConfig: sigma_c must be positive");
    if (weight_init && weight_init->first > weight_init->second)
        throw std::invalid_argument("ExperimentConfig: weight_init low > high");
    grid();  // validates duration/dt
    srm.validate(dt);
}

bool BestTracker::offer(std::size_t epoch, double c) {
    if (c <= best_c) return false;
    if (best_epoch > 0) {
        const double increment = (c - best_c) / static_cast<double>(epoch - best_epoch);
        if (increment <= 1e-5) return false;
    }
    best_c = c;
    best_epoch = epoch;
    return true;
}

EpochOutcome run_epoch(Network& net, const std::vector<SpikeTrain>& inputs,
                       const SpikeTrain& desired, const RuleConfig& rule, const TimeGrid& grid) {
    EpochOutcome out;

    if (rule_is_offline(rule)) {
        const auto& p = std::get<OfflineWhParams>(rule);
        SimTrace trace = simulate(net, inputs, grid);
        std::vector<double> deltas(net.n_inputs());
        for (std::size_t i = 0; i < net.n_inputs(); ++i)
            deltas[i] = offline_wh_epoch(inputs[i], trace.output, desired, p.kernel, p.eta);
        for (std::size_t i = 0; i < net.n_inputs(); ++i) {
            net.weights[i] += deltas[i];
            out.weight_delta_l1 += std::abs(deltas[i]);
        }
        net.clamp_weights();
        out.actual = std::move(trace.output);
        return out;
    }

    if (const auto* rp = std::get_if<ResumeParams>(&rule)) {
        // The comparison baseline keeps the traditional batch pattern: one
        // simulation per epoch, then two-sided selection from the complete
        // trains — potentiation at each desired spike over the interval since
        // the previous desired spike, depression at each actual spike over the
        // interval since the previous actual spike. The two selections
        // overlap, so deltas cancel exactly only once the trains agree.
        SimTrace trace = simulate(net, inputs, grid);
        const SpikeTrain& actual = trace.output;
        std::vector<double> deltas(net.n_inputs(), 0.0);
        for (std::size_t i = 0; i < net.n_inputs(); ++i) {
            double prev = 0.0;
            for (double t : desired.times()) {
                if (t > 0.0)
                    deltas[i] +=
                        resume_update(t, 1, SpikeTrain(select_window(prev, t, inputs[i])), *rp);
                prev = t;
            }
            prev = 0.0;
            for (double t : actual.times()) {
                if (t > 0.0)
                    deltas[i] +=
                        resume_update(t, -1, SpikeTrain(select_window(prev, t, inputs[i])), *rp);
                prev = t;
            }
        }
        for (std::size_t i = 0; i < net.n_inputs(); ++i) {
            net.weights[i] += deltas[i];
            out.weight_delta_l1 += std::abs(deltas[i]);
        }
        net.clamp_weights();
        out.actual = std::move(trace.output);
        return out;
    }

    std::vector<double> emitted;  // actual spikes so far, online
    std::vector<double> deltas(net.n_inputs());
    SimulateOptions opts;
    opts.hook_times = &desired;
    opts.hook = [&](double t, bool fired) {
        const bool desired_here = desired.contains(t, grid.dt);
        if (fired) emitted.push_back(t);
        const int sign = (desired_here && fired) ? 0 : (desired_here ? 1 : -1);
        // An event at t = 0 has an empty causal window; skip it so the origin
        // sentinel t_prev = 0 stays unambiguous.
        if (sign == 0 || t == 0.0) return;
        double t_prev = 0.0;
        const std::size_t n_prior = emitted.size() - (fired ? 1 : 0);
        if (n_prior > 0) t_prev = emitted[n_prior - 1];
        double d_prev;
        if (desired.latest_before(t, d_prev)) t_prev = std::max(t_prev, d_prev);
        // Deltas are computed against pre-tick weights, then committed once.
        for (std::size_t i = 0; i < net.n_inputs(); ++i)
            deltas[i] = online_rule_update(rule, t, sign, t_prev, inputs[i]);
        for (std::size_t i = 0; i < net.n_inputs(); ++i) {
            net.weights[i] += deltas[i];
            out.weight_delta_l1 += std::abs(deltas[i]);
        }
        net.clamp_weights();
    };

    SimTrace trace = simulate(net, inputs, grid, opts);
    out.actual = std::move(trace.output);
    return out;
}

std::vector<double> draw_initial_weights(std::pair<double, double> range, std::size_t n,
                                         std::uint64_t seed) {
    std::mt19937_64 rng(mix_seed(seed, kWeightStream));
    std::vector<double> w(n);
    for (double& x : w) x = range.first + (range.second - range.first) * u01(rng());
    return w;
}

std::pair<double, double> calibrate_weight_init(const ExperimentConfig& cfg,
                                                const std::vector<SpikeTrain>& inputs,
                                                const SpikeTrain& desired, const TimeGrid& grid) {
    const std::size_t target = std::max<std::size_t>(desired.count(), 1);
    auto count_at = [&](double high) {
        Network net{draw_initial_weights({0.0, high}, cfg.n_inputs, cfg.seed), cfg.srm, {}};
        return simulate(net, inputs, grid).output.count();
    };
    double lo = 1e-6, hi = 1e-6;
    while (hi < 100.0 && count_at(hi) < target) {
        lo = hi;
        hi *= 2.0;
    }
    for (int iter = 0; iter < 40; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (count_at(mid) < target)
            lo = mid;
        else
            hi = mid;
    }
    return {0.0, hi};
}

std::vector<SpikeTrain> draw_input_trains(const ExperimentConfig& cfg) {
    const TimeGrid grid = cfg.grid();
    std::vector<SpikeTrain> inputs;
    inputs.reserve(cfg.n_inputs);
    for (std::size_t i = 0; i < cfg.n_inputs; ++i)
        inputs.push_back(generate_poisson_train(cfg.input_rate, grid, mix_seed(cfg.seed, i)));
    return inputs;
}

SpikeTrain draw_desired_train(const ExperimentConfig& cfg) {
    return generate_poisson_train(cfg.desired_rate, cfg.grid(), mix_seed(cfg.seed, kDesiredStream));
}

ExperimentResult train(const ExperimentConfig& cfg) {
    cfg.validate();
    const TimeGrid grid = cfg.grid();

    const std::vector<SpikeTrain> inputs = draw_input_trains(cfg);
    const SpikeTrain desired = draw_desired_train(cfg);

    ExperimentResult result;
    result.config = cfg;
    result.weight_init_used =
        cfg.weight_init ? *cfg.weight_init : calibrate_weight_init(cfg, inputs, desired, grid);

    Network net{draw_initial_weights(result.weight_init_used, cfg.n_inputs, cfg.seed), cfg.srm,
                {}};

    BestTracker tracker;
    result.records.reserve(cfg.max_epochs);
    for (std::size_t epoch = 1; epoch <= cfg.max_epochs; ++epoch) {
        EpochOutcome outcome = run_epoch(net, inputs, desired, cfg.rule, grid);
        EpochRecord rec;
        rec.epoch = epoch;
        rec.c_value = correlation_c(outcome.actual, desired, cfg.sigma_c, grid);
        rec.n_actual_spikes = outcome.actual.count();
        rec.weight_delta_l1 = outcome.weight_delta_l1;
        double l2 = 0.0;
        for (double w : net.weights) l2 += w * w;
        rec.weight_l2 = std::sqrt(l2);
        result.records.push_back(rec);
        tracker.offer(epoch, rec.c_value);
        if (rec.c_value >= 1.0 - 1e-9) break;
    }
    result.best_c = tracker.best_c;
    result.best_epoch = tracker.best_epoch;
    result.converged = result.best_c >= 1.0 - 1e-9;
    result.final_weights = net.weights;
    return result;
}

std::pair<double, ExperimentResult> tune_lr(const ExperimentConfig& cfg,
                                            const std::vector<double>& lr_grid) {
    if (lr_grid.empty()) throw std::invalid_argument("tune_lr: empty grid");
    std::vector<double> grid_sorted = lr_grid;
    std::sort(grid_sorted.begin(), grid_sorted.end());
    double best_lr = grid_sorted.front();
    ExperimentResult best_result;
    bool have = false;
    for (double lr : grid_sorted) {
        ExperimentConfig c = cfg;
        rule_eta(c.rule) = lr;
        ExperimentResult r = train(c);
        if (!have || r.best_c > best_result.best_c) {
            best_result = std::move(r);
            best_lr = lr;
            have = true;
        }
    }
    return {best_lr, best_result};
}

std::vector<double> log_lr_grid(double center, double span_decades, std::size_t points_per_decade) {
    if (center <= 0.0) throw std::invalid_argument("log_lr_grid: center must be positive");
    std::vector<double> grid;
    const double lo = std::log10(center) - span_decades;
    const double hi = std::log10(center) + span_decades;
    const double step = 1.0 / static_cast<double>(points_per_decade);
    for (double e = lo; e <= hi + 1e-12; e += step) grid.push_back(std::pow(10.0, e));
    return grid;
}

}  // namespace tsd
