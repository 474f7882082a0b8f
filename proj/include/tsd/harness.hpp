#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tsd/config.hpp"

namespace tsd {

// Exit codes: 0 success, 2 config error, 3 runtime error.
constexpr int kExitOk = 0;
constexpr int kExitConfigError = 2;
constexpr int kExitRuntimeError = 3;

struct CliOptions {
    std::string config_path;
    std::string out_dir;
    std::optional<std::uint64_t> seed;  // overrides the config seed
    std::size_t jobs = 1;
};

struct SweepCell {
    std::string algorithm;
    double value = 0.0;
    double tuned_lr = 0.0;
    double c_mean = 0.0;
    double c_median = 0.0;
    double epoch_mean = 0.0;
    std::size_t repeats = 0;
};

/// Run one sweep cell: tune the learning rate on the base seed, then run
/// `repeats` seeded experiments at the tuned rate.
SweepCell run_sweep_cell(const SweepSpec& spec, const IniFile& ini, const std::string& algorithm,
                         double value);

std::vector<SweepCell> run_sweep(const SweepSpec& spec, const IniFile& ini, std::size_t jobs);

void write_sweep_csv(const std::string& path, const std::vector<SweepCell>& cells);

int cmd_generate(const CliOptions& opts);
int cmd_train(const CliOptions& opts);
int cmd_sweep(const CliOptions& opts);
int cmd_classify(const CliOptions& opts);

}  // namespace tsd
