#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tsd/rules.hpp"
#include "tsd/trainer.hpp"

namespace tsd {

/// Raised for malformed config files / unknown identifiers (CLI exit code 2).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Minimal INI-style file: [section] headers, key = value lines, '#' comments.
class IniFile {
  public:
    static IniFile parse_file(const std::string& path);
    static IniFile parse_string(const std::string& text);

    bool has(const std::string& section, const std::string& key) const;
    std::string get(const std::string& section, const std::string& key,
                    const std::string& fallback) const;
    double get_double(const std::string& section, const std::string& key, double fallback) const;
    std::size_t get_size(const std::string& section, const std::string& key,
                         std::size_t fallback) const;
    std::vector<std::string> get_list(const std::string& section, const std::string& key) const;

  private:
    std::map<std::string, std::map<std::string, std::string>> sections_;
};

enum class SweepAxis { Duration, InputRate };

struct SweepSpec {
    SweepAxis axis = SweepAxis::Duration;
    std::vector<double> values;
    std::vector<std::string> algorithms;
    std::size_t repeats = 10;
    ExperimentConfig base;
    std::size_t lr_points_per_decade = 8;
    double lr_span_decades = 1.0;
};

/// Build a rule parameterization from its identifier and the config sections.
RuleConfig make_rule(const std::string& name, const IniFile& ini, double eta);

ExperimentConfig load_experiment_config(const IniFile& ini);
SweepSpec load_sweep_spec(const IniFile& ini);

/// Default learning-rate grid center for a rule in a given sweep cell.
double default_lr_center(const std::string& algorithm, SweepAxis axis, double value);

}  // namespace tsd
