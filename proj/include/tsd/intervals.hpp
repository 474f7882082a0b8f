#pragma once

#include <vector>

#include "tsd/spike.hpp"

namespace tsd {

enum class AtiKind { Gati, Sati };
enum class InputLabel { Fiti, Miti, Liti };

struct AtiInterval {
    double t_start;  // previous actual spike (0 for the first interval)
    double t_end;    // the actual spike closing this ATI
    AtiKind kind;
};

struct LabeledInput {
    double t;  // input spike time
    InputLabel label;
};

/// (previous output boundary, input spike, current output spike); the unit the
/// triple-spike rule consumes. sign: +1 desired event, -1 actual event.
struct TripleUnit {
    double t_prev;
    double t_in;
    double t_cur;
    int sign;
};

/// Index of the desired-train interval containing t: the first interval is
/// [0, t_d^1], interval n is (t_d^n, t_d^{n+1}]; times past the last desired
/// spike fall in a trailing pseudo-interval.
std::size_t dti_index(double t, const SpikeTrain& desired);

/// One entry per ATI (including the initial [0, t_a^1]); GATI iff both
/// endpoints lie in the same DTI.
std::vector<AtiInterval> classify_atis(const SpikeTrain& actual, const SpikeTrain& desired);

/// Label every input spike FITI/MITI/LITI by its position relative to the
/// actual spikes inside its own DTI.
std::vector<LabeledInput> label_input_spikes(const SpikeTrain& input, const SpikeTrain& actual,
                                             const SpikeTrain& desired);

/// Previous output boundary t^p for the event at t_cur: the latest spike in
/// either train strictly before t_cur, else 0. t_cur must be a spike time of
/// actual or desired.
double resolve_prev_boundary(double t_cur, const SpikeTrain& actual, const SpikeTrain& desired,
                             double dt = 0.1);

/// Input spike times in the half-open window (t_prev, t_cur]. t_prev == 0
/// means the epoch origin and the window is closed there ([0, t_cur]).
std::vector<double> select_window(double t_prev, double t_cur, const SpikeTrain& input);

}  // namespace tsd
