#pragma once

#include <string>
#include <vector>

#include "tsd/spike.hpp"
#include "tsd/trainer.hpp"

namespace tsd {

/// Spike-train text format: one line per train, comma-separated times in ms
/// with one decimal place (grid resolution). An empty train is an empty line.
std::string format_train(const SpikeTrain& train);
SpikeTrain parse_train(const std::string& line);

void write_trains(const std::string& path, const std::vector<SpikeTrain>& trains);
std::vector<SpikeTrain> read_trains(const std::string& path);

/// Structured-text echo of the full config (used as CSV header comments and
/// in fixture manifests).
std::string config_echo(const ExperimentConfig& cfg);

/// Epoch CSV: config header, then epoch,c,n_actual,weight_l2,weight_delta_l1.
void write_epoch_csv(const std::string& path, const ExperimentResult& result);

/// Final weights, one "index,weight" row per synapse.
void write_weights_csv(const std::string& path, const std::vector<double>& weights);

}  // namespace tsd
