#pragma once

#include <string>
#include <variant>
#include <vector>

#include "tsd/kernels.hpp"
#include "tsd/spike.hpp"

namespace tsd {

/// Triple-spike-driven rule parameters. tau_y here is a dimensionless
/// proportion constant (it scales a time ratio), unlike the ms-valued tau_y
/// of the raw triplet rule below.
struct TsdParams {
    double eta = 0.001;
    KernelSpec kernel{KernelShape::Laplace, 7.0};  // tau_plus = 7 ms
    double tau_y = 7.0;
    double denom_floor = 0.1;  // ms, minimum t_in - t_prev

    void validate() const;
};

struct StdpParams {
    double a_plus = 1.0;
    double a_minus = 1.0;
    double tau_plus = 7.0;   // ms
    double tau_minus = 7.0;  // ms
    double eta = 0.001;      // used when driving training, not by the raw pair rule
};

struct TstdpParams {
    StdpParams pair;
    double a2_plus = 0.0;
    double a2_minus = 0.0;
    double a3_plus = 1.0;
    double a3_minus = 1.0;
    double tau_y = 7.0;  // ms
};

struct ResumeParams {
    double eta = 0.001;
    double a_non_hebbian = 0.0;
    double tau_learn = 7.0;  // ms
};

struct OfflineWhParams {
    double eta = 0.001;
    KernelSpec kernel{KernelShape::Laplace, 7.0};
};

using RuleConfig = std::variant<TsdParams, OfflineWhParams, ResumeParams, StdpParams, TstdpParams>;

/// Stable string identifiers: "tsd", "offline-wh", "resume", "stdp", "tstdp".
std::string rule_name(const RuleConfig& rule);
bool rule_is_offline(const RuleConfig& rule);
std::vector<std::string> known_rule_names();

double& rule_eta(RuleConfig& rule);
double rule_eta(const RuleConfig& rule);

/// Eq-level sign of the event at t: +1 if t is a desired spike only, -1 if an
/// actual spike only, 0 if both. t must belong to at least one train.
int alpha_sign(double t, const SpikeTrain& desired, const SpikeTrain& actual, double dt = 0.1);

/// TSD delta for one synapse at one output event: the pair kernel attenuated
/// by the triplet proportion exp(-(t_cur - t_in) / (tau_y * (t_in - t_prev))).
double tsd_update(double t_cur, int sign, double t_prev, const std::vector<double>& window_inputs,
                  const TsdParams& p);

/// Offline Widrow-Hoff kernel delta for one synapse, computed once per epoch
/// from the complete trains. Each input spike pairs with the first desired and
/// first actual spike at or after it; a missing correspondent contributes 0.
double offline_wh_epoch(const SpikeTrain& input, const SpikeTrain& actual,
                        const SpikeTrain& desired, const KernelSpec& kernel, double eta);

/// Pair STDP. delta_t = t_post - t_pre; depression branch is negative-valued.
double stdp_pair(double delta_t, const StdpParams& p);

enum class TripletBranch { Potentiation, Depression };

/// Triplet STDP: the pair value scaled by [A2 + A3 * exp(-dt2_or_dt3/tau_y)].
double tstdp_triplet(double dt1, double dt2_or_dt3, TripletBranch branch, const TstdpParams& p);

/// ReSuMe delta for one synapse at one output event: non-Hebbian term plus an
/// exponential learning window over all prior input spikes.
double resume_update(double t_cur, int sign, const SpikeTrain& input, const ResumeParams& p);

/// Online per-synapse delta dispatch used by the trainer at an output event.
double online_rule_update(const RuleConfig& rule, double t_cur, int sign, double t_prev,
                          const SpikeTrain& input);

}  // namespace tsd
