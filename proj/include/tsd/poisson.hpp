#pragma once

#include <cstdint>

#include "tsd/spike.hpp"

namespace tsd {

/// splitmix64, used to derive independent stream seeds from one experiment seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Uniform double in [0, 1) from a raw 64-bit draw.
double u01(std::uint64_t bits);

/// Homogeneous Poisson train discretized to the grid: each tick independently
/// spikes with probability rate*dt/1000. Deterministic for a fixed seed.
SpikeTrain generate_poisson_train(double rate_hz, const TimeGrid& grid, std::uint64_t seed);

}  // namespace tsd
