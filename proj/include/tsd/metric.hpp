#pragma once

#include <vector>

#include "tsd/spike.hpp"

namespace tsd {

/// Per-tick filtered amplitudes, length n_ticks + 1.
using FilteredTrain = std::vector<double>;

/// Symmetric Gaussian low-pass filter of a spike train, truncated at +-4 sigma.
FilteredTrain filter_train(const SpikeTrain& s, double sigma_ms, const TimeGrid& grid);

/// Correlation metric: cosine similarity of the Gaussian-filtered trains.
/// Both trains empty -> 1, exactly one empty -> 0.
double correlation_c(const SpikeTrain& actual, const SpikeTrain& desired, double sigma_ms,
                     const TimeGrid& grid);

}  // namespace tsd
