#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "tsd/spike.hpp"

namespace tsd {

/// Spike Response Model constants.
struct SrmParams {
    double tau_psp = 7.0;     // PSP time constant tau, ms
    double tau_refr = 80.0;   // refractory time constant tau_R, ms
    double t_abs = 1.0;       // absolute refractory period t_R, ms
    double threshold = 1.0;   // firing threshold v, mV
    double refr_scale = 2.0;  // multiplier on the refractory kernel

    void validate(double dt) const;
};

/// Two-layer feedforward network: n input synapses onto one SRM output neuron.
struct Network {
    std::vector<double> weights;  // mV
    SrmParams params;
    std::optional<std::pair<double, double>> weight_clamp;  // [w_min, w_max], off by default

    std::size_t n_inputs() const { return weights.size(); }
    void clamp_weights();
};

struct SimTrace {
    SpikeTrain output;
    std::vector<double> potential;  // per tick, mV; empty unless requested
};

struct SimulateOptions {
    bool record_potential = false;
    // Extra ticks at which the hook fires even without an output spike
    // (the online-learning seam passes the desired train here).
    const SpikeTrain* hook_times = nullptr;
    // Called at every tick containing an actual output spike and/or a
    // hook_times entry, after the firing decision at that tick. May mutate
    // net.weights; subsequent ticks see the new weights.
    std::function<void(double t, bool fired)> hook;
};

/// Alpha-shaped PSP kernel, peak value 1 at s = tau.
double psp_kernel(double s, double tau);
/// Refractory kernel, negative exponential for s > 0.
double refr_kernel(double s, const SrmParams& p);

/// Run the discrete-time SRM simulation. The time loop is sequential; the
/// hook may mutate weights mid-run.
SimTrace simulate(Network& net, const std::vector<SpikeTrain>& inputs, const TimeGrid& grid,
                  const SimulateOptions& opts = {});

/// Membrane potential u(t) by direct kernel summation given an output history.
double potential_at(const Network& net, const std::vector<SpikeTrain>& inputs, double t,
                    const SpikeTrain& past_outputs);

}  // namespace tsd
