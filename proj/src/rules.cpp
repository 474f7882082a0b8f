#include "tsd/rules.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tsd/intervals.hpp"

namespace tsd {

void TsdParams::validate() const {
    if (eta <= 0.0 || tau_y <= 0.0 || denom_floor <= 0.0)
        throw std::invalid_argument("TsdParams: eta, tau_y and denom_floor must be positive");
}

std::string rule_name(const RuleConfig& rule) {
    struct Visitor {
        std::string operator()(const TsdParams&) const { return "tsd"; }
        std::string operator()(const OfflineWhParams&) const { return "offline-wh"; }
        std::string operator()(const ResumeParams&) const { return "resume"; }
        std::string operator()(const StdpParams&) const { return "stdp"; }
        std::string operator()(const TstdpParams&) const { return "tstdp"; }
    };
    return std::visit(Visitor{}, rule);
}

bool rule_is_offline(const RuleConfig& rule) {
    return std::holds_alternative<OfflineWhParams>(rule);
}

std::vector<std::string> known_rule_names() {
    return {"tsd", "offline-wh", "resume", "stdp", "tstdp"};
}

double& rule_eta(RuleConfig& rule) {
    struct Visitor {
        double& operator()(TsdParams& p) const { return p.eta; }
        double& operator()(OfflineWhParams& p) const { return p.eta; }
        double& operator()(ResumeParams& p) const { return p.eta; }
        double& operator()(StdpParams& p) const { return p.eta; }
        double& operator()(TstdpParams& p) const { return p.pair.eta; }
    };
    return std::visit(Visitor{}, rule);
}

double rule_eta(const RuleConfig& rule) { return rule_eta(const_cast<RuleConfig&>(rule)); }

int alpha_sign(double t, const SpikeTrain& desired, const SpikeTrain& actual, double dt) {
    const bool in_d = desired.contains(t, dt);
    const bool in_a = actual.contains(t, dt);
    if (!in_d && !in_a)
        throw std::invalid_argument("alpha_sign: t is not a spike time of either train");
    if (in_d && in_a) return 0;
    return in_d ? 1 : -1;
}

double tsd_update(double t_cur, int sign, double t_prev, const std::vector<double>& window_inputs,
                  const TsdParams& p) {
    p.validate();
    if (t_prev >= t_cur) throw std::invalid_argument("tsd_update: t_prev must precede t_cur");
    double sum = 0.0;
    for (double t_in : window_inputs) {
        const bool at_origin = t_prev == 0.0 && t_in == 0.0;
        if ((t_in <= t_prev && !at_origin) || t_in > t_cur)
            throw std::invalid_argument("tsd_update: window element outside (t_prev, t_cur]");
        const double d = t_cur - t_in;
        const double gap = std::max(t_in - t_prev, p.denom_floor);
        sum += kernel_eval(p.kernel, d) * std::exp(-d / (p.tau_y * gap));
    }
    return p.eta * sign * sum;
}

double offline_wh_epoch(const SpikeTrain& input, const SpikeTrain& actual,
                        const SpikeTrain& desired, const KernelSpec& kernel, double eta) {
    const auto& d = desired.times();
    const auto& a = actual.times();
    double sum = 0.0;
    for (double t_in : input.times()) {
        auto dit = std::lower_bound(d.begin(), d.end(), t_in);
        auto ait = std::lower_bound(a.begin(), a.end(), t_in);
        if (dit != d.end()) sum += kernel_eval(kernel, *dit - t_in);
        if (ait != a.end()) sum -= kernel_eval(kernel, *ait - t_in);
    }
    return eta * sum;
}

double stdp_pair(double delta_t, const StdpParams& p) {
    if (p.tau_plus <= 0.0 || p.tau_minus <= 0.0)
        throw std::invalid_argument("StdpParams: time constants must be positive");
    if (delta_t > 0.0) return p.a_plus * std::exp(-delta_t / p.tau_plus);
    return -p.a_minus * std::exp(delta_t / p.tau_minus);
}

double tstdp_triplet(double dt1, double dt2_or_dt3, TripletBranch branch, const TstdpParams& p) {
    if (p.tau_y <= 0.0) throw std::invalid_argument("TstdpParams: tau_y must be positive");
    if (dt2_or_dt3 < 0.0)
        throw std::invalid_argument("tstdp_triplet: dt2/dt3 must be non-negative");
    const double triplet = std::exp(-dt2_or_dt3 / p.tau_y);
    if (branch == TripletBranch::Potentiation)
        return p.pair.a_plus * std::exp(-dt1 / p.pair.tau_plus) *
               (p.a2_plus + p.a3_plus * triplet);
    return -p.pair.a_minus * std::exp(dt1 / p.pair.tau_minus) *
           (p.a2_minus + p.a3_minus * triplet);
}

double resume_update(double t_cur, int sign, const SpikeTrain& input, const ResumeParams& p) {
    if (p.tau_learn <= 0.0) throw std::invalid_argument("ResumeParams: tau_learn must be positive");
    double sum = p.a_non_hebbian;
    for (double t_in : input.times()) {
        if (t_in > t_cur) break;
        sum += std::exp(-(t_cur - t_in) / p.tau_learn);
    }
    return sign * p.eta * sum;
}

double online_rule_update(const RuleConfig& rule, double t_cur, int sign, double t_prev,
                          const SpikeTrain& input) {
    struct Visitor {
        double t_cur, t_prev;
        int sign;
        const SpikeTrain& input;

        double operator()(const TsdParams& p) const {
            return tsd_update(t_cur, sign, t_prev, select_window(t_prev, t_cur, input), p);
        }
        double operator()(const ResumeParams& p) const {
            // the epoch loop hands every online rule the same single-use spike
            // selection: only inputs since the previous output event
            return resume_update(t_cur, sign, SpikeTrain(select_window(t_prev, t_cur, input)), p);
        }
        double operator()(const StdpParams& p) const {
            double sum = 0.0;
            for (double t_in : select_window(t_prev, t_cur, input))
                sum += stdp_pair(t_cur - t_in, p);
            return sign * p.eta * sum;
        }
        double operator()(const TstdpParams& p) const {
            double sum = 0.0;
            for (double t_in : select_window(t_prev, t_cur, input))
                sum += tstdp_triplet(t_cur - t_in, t_cur - t_prev, TripletBranch::Potentiation, p);
            return sign * p.pair.eta * sum;
        }
        double operator()(const OfflineWhParams&) const {
            throw std::logic_error("offline-wh has no online update");
        }
    };
    return std::visit(Visitor{t_cur, t_prev, sign, input}, rule);
}

}  // namespace tsd
