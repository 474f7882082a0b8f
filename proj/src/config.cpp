#include "tsd/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace tsd {

namespace {
std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}
}  // namespace

IniFile IniFile::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_string(ss.str());
}

IniFile IniFile::parse_string(const std::string& text) {
    IniFile ini;
    std::istringstream in(text);
    std::string line, section;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("config line " + std::to_string(lineno) + ": bad section header");
            section = trim(line.substr(1, line.size() - 2));
            ini.sections_[section];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
        ini.sections_[section][trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return ini;
}

bool IniFile::has(const std::string& section, const std::string& key) const {
    auto it = sections_.find(section);
    return it != sections_.end() && it->second.count(key) > 0;
}

std::string IniFile::get(const std::string& section, const std::string& key,
                         const std::string& fallback) const {
    auto it = sections_.find(section);
    if (it == sections_.end()) return fallback;
    auto jt = it->second.find(key);
    return jt == it->second.end() ? fallback : jt->second;
}

double IniFile::get_double(const std::string& section, const std::string& key,
                           double fallback) const {
    if (!has(section, key)) return fallback;
    const std::string v = get(section, key, "");
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("config [" + section + "] " + key + ": not a number: " + v);
    }
}

std::size_t IniFile::get_size(const std::string& section, const std::string& key,
                              std::size_t fallback) const {
    const double x = get_double(section, key, static_cast<double>(fallback));
    if (x < 0 || x != std::floor(x))
        throw ConfigError("config [" + section + "] " + key + ": not a non-negative integer");
    return static_cast<std::size_t>(x);
}

std::vector<std::string> IniFile::get_list(const std::string& section,
                                           const std::string& key) const {
    std::vector<std::string> out;
    std::istringstream ss(get(section, key, ""));
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

RuleConfig make_rule(const std::string& name, const IniFile& ini, double eta) {
    if (name == "tsd") {
        TsdParams p;
        p.eta = eta;
        p.kernel = KernelSpec(kernel_shape_from_name(ini.get("tsd", "kernel", "laplace")),
                              ini.get_double("tsd", "tau_plus_ms", 7.0));
        p.tau_y = ini.get_double("tsd", "tau_y", 7.0);
        p.denom_floor = ini.get_double("tsd", "denom_floor_ms", 0.1);
        return p;
    }
    if (name == "offline-wh") {
        OfflineWhParams p;
        p.eta = eta;
        p.kernel = KernelSpec(kernel_shape_from_name(ini.get("offline-wh", "kernel", "laplace")),
                              ini.get_double("offline-wh", "tau_ms", 7.0));
        return p;
    }
    if (name == "resume") {
        ResumeParams p;
        p.eta = eta;
        p.a_non_hebbian = ini.get_double("resume", "a_non_hebbian", 0.0);
        p.tau_learn = ini.get_double("resume", "tau_learn_ms", 7.0);
        return p;
    }
    if (name == "stdp") {
        StdpParams p;
        p.eta = eta;
        p.a_plus = ini.get_double("stdp", "a_plus", 1.0);
        p.a_minus = ini.get_double("stdp", "a_minus", 1.0);
        p.tau_plus = ini.get_double("stdp", "tau_plus_ms", 7.0);
        p.tau_minus = ini.get_double("stdp", "tau_minus_ms", 7.0);
        return p;
    }
    if (name == "tstdp") {
        TstdpParams p;
        p.pair.eta = eta;
        p.pair.a_plus = ini.get_double("tstdp", "a_plus", 1.0);
        p.pair.a_minus = ini.get_double("tstdp", "a_minus", 1.0);
        p.pair.tau_plus = ini.get_double("tstdp", "tau_plus_ms", 7.0);
        p.pair.tau_minus = ini.get_double("tstdp", "tau_minus_ms", 7.0);
        p.a2_plus = ini.get_double("tstdp", "a2_plus", 0.0);
        p.a2_minus = ini.get_double("tstdp", "a2_minus", 0.0);
        p.a3_plus = ini.get_double("tstdp", "a3_plus", 1.0);
        p.a3_minus = ini.get_double("tstdp", "a3_minus", 1.0);
        p.tau_y = ini.get_double("tstdp", "tau_y_ms", 7.0);
        return p;
    }
    std::string valid;
    for (const auto& n : known_rule_names()) valid += (valid.empty() ? "" : ", ") + n;
    throw ConfigError("unknown rule identifier: " + name + " (valid: " + valid + ")");
}

ExperimentConfig load_experiment_config(const IniFile& ini) {
    ExperimentConfig cfg;
    cfg.n_inputs = ini.get_size("experiment", "n_inputs", cfg.n_inputs);
    cfg.duration = ini.get_double("experiment", "duration_ms", cfg.duration);
    cfg.dt = ini.get_double("experiment", "dt_ms", cfg.dt);
    cfg.input_rate = ini.get_double("experiment", "input_rate_hz", cfg.input_rate);
    cfg.desired_rate = ini.get_double("experiment", "desired_rate_hz", cfg.desired_rate);
    cfg.max_epochs = ini.get_size("experiment", "max_epochs", cfg.max_epochs);
    cfg.seed = static_cast<std::uint64_t>(ini.get_double("experiment", "seed", 1.0));
    cfg.sigma_c = ini.get_double("experiment", "sigma_c_ms", cfg.sigma_c);
    if (ini.has("experiment", "weight_low") != ini.has("experiment", "weight_high"))
        throw ConfigError("weight_low and weight_high must be given together");
    if (ini.has("experiment", "weight_low"))
        cfg.weight_init = {ini.get_double("experiment", "weight_low", 0.0),
                           ini.get_double("experiment", "weight_high", 0.0)};
    cfg.srm.tau_psp = ini.get_double("srm", "tau_psp_ms", cfg.srm.tau_psp);
    cfg.srm.tau_refr = ini.get_double("srm", "tau_refr_ms", cfg.srm.tau_refr);
    cfg.srm.t_abs = ini.get_double("srm", "t_abs_ms", cfg.srm.t_abs);
    cfg.srm.threshold = ini.get_double("srm", "threshold_mv", cfg.srm.threshold);
    cfg.srm.refr_scale = ini.get_double("srm", "refr_scale", cfg.srm.refr_scale);
    const std::string rule = ini.get("experiment", "rule", "tsd");
    cfg.rule = make_rule(rule, ini, ini.get_double("experiment", "eta", 0.001));
    try {
        cfg.validate();
    } catch (const std::exception& e) {
        throw ConfigError(std::string("invalid experiment config: ") + e.what());
    }
    return cfg;
}

SweepSpec load_sweep_spec(const IniFile& ini) {
    SweepSpec spec;
    spec.base = load_experiment_config(ini);
    const std::string axis = ini.get("sweep", "axis", "duration");
    if (axis == "duration")
        spec.axis = SweepAxis::Duration;
    else if (axis == "input_rate")
        spec.axis = SweepAxis::InputRate;
    else
        throw ConfigError("sweep axis must be 'duration' or 'input_rate', got: " + axis);
    for (const auto& v : ini.get_list("sweep", "values")) {
        try {
            spec.values.push_back(std::stod(v));
        } catch (const std::exception&) {
            throw ConfigError("sweep values: not a number: " + v);
        }
    }
    spec.algorithms = ini.get_list("sweep", "algorithms");
    spec.repeats = ini.get_size("sweep", "repeats", spec.repeats);
    spec.lr_points_per_decade = ini.get_size("sweep", "lr_points_per_decade", 8);
    spec.lr_span_decades = ini.get_double("sweep", "lr_span_decades", 1.0);
    if (spec.values.empty()) throw ConfigError("sweep values must be non-empty");
    if (spec.algorithms.empty()) throw ConfigError("sweep algorithms must be non-empty");
    if (spec.repeats < 1) throw ConfigError("sweep repeats must be >= 1");
    for (const auto& a : spec.algorithms) make_rule(a, ini, 0.001);  // validate identifiers
    return spec;
}

double default_lr_center(const std::string& algorithm, SweepAxis axis, double value) {
    // 200 ms reference magnitudes; learning rates shrink roughly inversely
    // with train length.
    double base = 0.002;
    if (algorithm == "tsd") base = 0.0019;
    if (algorithm == "resume") base = 0.0022;
    if (axis == SweepAxis::Duration && value > 0.0) return base * 200.0 / value;
    return base;
}

}  // namespace tsd
