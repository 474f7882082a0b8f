#include "tsd/intervals.hpp"

#include <algorithm>
#include <stdexcept>

namespace tsd {

std::size_t dti_index(double t, const SpikeTrain& desired) {
    const auto& d = desired.times();
    // number of desired spikes strictly before t; a spike at exactly t_d^n
    // closes interval n-1.
    return static_cast<std::size_t>(std::lower_bound(d.begin(), d.end(), t) - d.begin());
}

std::vector<AtiInterval> classify_atis(const SpikeTrain& actual, const SpikeTrain& desired) {
    std::vector<AtiInterval> out;
    out.reserve(actual.count());
    double prev = 0.0;
    for (double t : actual.times()) {
        const AtiKind kind =
            dti_index(prev, desired) == dti_index(t, desired) ? AtiKind::Gati : AtiKind::Sati;
        out.push_back({prev, t, kind});
        prev = t;
    }
    return out;
}

std::vector<LabeledInput> label_input_spikes(const SpikeTrain& input, const SpikeTrain& actual,
                                             const SpikeTrain& desired) {
    std::vector<LabeledInput> out;
    out.reserve(input.count());
    for (double t : input.times()) {
        const std::size_t dti = dti_index(t, desired);
        // actual spikes in the same DTI
        double lo = dti == 0 ? -1.0 : desired[dti - 1];
        double hi = dti < desired.count() ? desired[dti] : 1e300;
        std::vector<double> acts = actual.in_window(lo, hi);
        InputLabel label;
        if (acts.empty()) {
            label = InputLabel::Fiti;  // condition 3: fed forward into the next DTI's FITI
        } else if (acts.size() == 1) {
            label = t < acts.front() ? InputLabel::Fiti : InputLabel::Liti;  // condition 2
        } else if (t < acts.front()) {
            label = InputLabel::Fiti;
        } else if (t <= acts.back()) {
            label = InputLabel::Miti;
        } else {
            label = InputLabel::Liti;
        }
        out.push_back({t, label});
    }
    return out;
}

double resolve_prev_boundary(double t_cur, const SpikeTrain& actual, const SpikeTrain& desired,
                             double dt) {
    if (!actual.contains(t_cur, dt) && !desired.contains(t_cur, dt))
        throw std::invalid_argument("resolve_prev_boundary: t_cur is not an output spike time");
    double tp = 0.0, cand;
    if (actual.latest_before(t_cur, cand)) tp = std::max(tp, cand);
    if (desired.latest_before(t_cur, cand)) tp = std::max(tp, cand);
    return tp;
}

std::vector<double> select_window(double t_prev, double t_cur, const SpikeTrain& input) {
    if (t_prev >= t_cur)
        throw std::invalid_argument("select_window: t_prev must precede t_cur");
    // t_prev == 0 marks the epoch origin, not a prior output spike; the first
    // window is closed there so a spike at exactly 0 is still covered.
    return input.in_window(t_prev == 0.0 ? -1.0 : t_prev, t_cur);
}

}  // namespace tsd
