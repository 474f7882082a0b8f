#include "tsd/srm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tsd {

void SrmParams::validate(double dt) const {
    if (tau_psp <= 0.0 || tau_refr <= 0.0 || t_abs <= 0.0 || threshold <= 0.0 || refr_scale <= 0.0)
        throw std::invalid_argument("SrmParams: all parameters must be positive");
    if (t_abs < dt) throw std::invalid_argument("SrmParams: t_abs must be >= grid dt");
}

void Network::clamp_weights() {
    if (!weight_clamp) return;
    for (double& w : weights) w = std::clamp(w, weight_clamp->first, weight_clamp->second);
}

double psp_kernel(double s, double tau) {
    if (s <= 0.0) return 0.0;
    return (s / tau) * std::exp(1.0 - s / tau);
}

double refr_kernel(double s, const SrmParams& p) {
    if (s <= 0.0) return 0.0;
    return -p.refr_scale * p.threshold * std::exp(-s / p.tau_refr);
}

SimTrace simulate(Network& net, const std::vector<SpikeTrain>& inputs, const TimeGrid& grid,
                  const SimulateOptions& opts) {
    net.params.validate(grid.dt);
    if (inputs.size() != net.n_inputs())
        throw std::invalid_argument("simulate: input train count does not match n_inputs");

    const std::size_t n_syn = inputs.size();
    const std::int64_t n = grid.n_ticks();
    const double tau = net.params.tau_psp;
    const double decay_psp = std::exp(-grid.dt / tau);
    const double decay_refr = std::exp(-grid.dt / net.params.tau_refr);
    const double psp_gain = std::exp(1.0) / tau;  // alpha kernel = gain * s * exp(-s/tau)

    // Per-synapse exponential traces: a = sum exp(-s/tau), b = sum s*exp(-s/tau)
    // over that synapse's past input spikes at age s.
    std::vector<double> a(n_syn, 0.0), b(n_syn, 0.0);
    std::vector<std::size_t> next_spike(n_syn, 0);
    double refr = 0.0;        // sum exp(-s/tau_R) over past output spikes, s > 0
    double refr_pending = 0;  // output spikes fired at the current tick

    SimTrace trace;
    if (opts.record_potential) trace.potential.reserve(static_cast<std::size_t>(n) + 1);
    std::vector<double> out_times;
    double last_spike = -1e300;

    std::size_t next_hook = 0;
    const std::vector<double>* hook_times =
        opts.hook_times ? &opts.hook_times->times() : nullptr;

    for (std::int64_t k = 0; k <= n; ++k) {
        const double t = grid.time_of(k);
        if (k > 0) {
            for (std::size_t i = 0; i < n_syn; ++i) {
                b[i] = decay_psp * (b[i] + grid.dt * a[i]);
                a[i] *= decay_psp;
            }
            refr = decay_refr * (refr + refr_pending);
            refr_pending = 0;
        }
        for (std::size_t i = 0; i < n_syn; ++i) {
            const auto& ts = inputs[i].times();
            while (next_spike[i] < ts.size() && grid.tick_of(ts[next_spike[i]]) == k) {
                a[i] += 1.0;
                ++next_spike[i];
            }
        }

        double u = 0.0;
        for (std::size_t i = 0; i < n_syn; ++i) u += net.weights[i] * b[i];
        u = psp_gain * u - net.params.refr_scale * net.params.threshold * refr;
        if (opts.record_potential) trace.potential.push_back(u);

        bool fired = false;
        if (u >= net.params.threshold && t - last_spike >= net.params.t_abs) {
            fired = true;
            out_times.push_back(t);
            last_spike = t;
            refr_pending += 1.0;
        }

        if (opts.hook) {
            bool at_hook_time = false;
            if (hook_times) {
                while (next_hook < hook_times->size() &&
                       grid.tick_of((*hook_times)[next_hook]) < k)
                    ++next_hook;
                at_hook_time = next_hook < hook_times->size() &&
                               grid.tick_of((*hook_times)[next_hook]) == k;
            }
            if (fired || at_hook_time) opts.hook(t, fired);
        }
    }
    trace.output = SpikeTrain(std::move(out_times));
    return trace;
}

double potential_at(const Network& net, const std::vector<SpikeTrain>& inputs, double t,
                    const SpikeTrain& past_outputs) {
    if (inputs.size() != net.n_inputs())
        throw std::invalid_argument("potential_at: input train count does not match n_inputs");
    double u = 0.0;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        double p = 0.0;
        for (double tf : inputs[i].times()) {
            if (tf >= t) break;
            p += psp_kernel(t - tf, net.params.tau_psp);
        }
        u += net.weights[i] * p;
    }
    for (double tg : past_outputs.times()) {
        if (tg >= t) break;
        u += refr_kernel(t - tg, net.params);
    }
    return u;
}

}  // namespace tsd
