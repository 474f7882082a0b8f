#include "tsd/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tsd {

namespace {
std::string fmt(const char* format, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, x);
    return buf;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}
}  // namespace

std::string format_train(const SpikeTrain& train) {
    std::string line;
    for (std::size_t i = 0; i < train.count(); ++i) {
        if (i > 0) line += ',';
        line += fmt("%.1f", train[i]);
    }
    return line;
}

SpikeTrain parse_train(const std::string& line) {
    std::vector<double> times;
    std::istringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t\r") == std::string::npos) continue;
        times.push_back(std::stod(item));
    }
    return SpikeTrain(std::move(times));
}

void write_trains(const std::string& path, const std::vector<SpikeTrain>& trains) {
    auto out = open_out(path);
    for (const auto& t : trains) out << format_train(t) << '\n';
}

std::vector<SpikeTrain> read_trains(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::vector<SpikeTrain> trains;
    std::string line;
    while (std::getline(in, line)) trains.push_back(parse_train(line));
    return trains;
}

std::string config_echo(const ExperimentConfig& cfg) {
    std::ostringstream ss;
    ss << "# rule = " << rule_name(cfg.rule) << '\n'
       << "# eta = " << fmt("%.10g", rule_eta(cfg.rule)) << '\n'
       << "# n_inputs = " << cfg.n_inputs << '\n'
       << "# duration_ms = " << fmt("%.10g", cfg.duration) << '\n'
       << "# dt_ms = " << fmt("%.10g", cfg.dt) << '\n'
       << "# input_rate_hz = " << fmt("%.10g", cfg.input_rate) << '\n'
       << "# desired_rate_hz = " << fmt("%.10g", cfg.desired_rate) << '\n'
       << "# max_epochs = " << cfg.max_epochs << '\n'
       << "# seed = " << cfg.seed << '\n'
       << "# sigma_c_ms = " << fmt("%.10g", cfg.sigma_c) << '\n'
       << "# srm.tau_psp_ms = " << fmt("%.10g", cfg.srm.tau_psp) << '\n'
       << "# srm.tau_refr_ms = " << fmt("%.10g", cfg.srm.tau_refr) << '\n'
       << "# srm.t_abs_ms = " << fmt("%.10g", cfg.srm.t_abs) << '\n'
       << "# srm.threshold_mv = " << fmt("%.10g", cfg.srm.threshold) << '\n'
       << "# srm.refr_scale = " << fmt("%.10g", cfg.srm.refr_scale) << '\n';
    return ss.str();
}

void write_epoch_csv(const std::string& path, const ExperimentResult& result) {
    auto out = open_out(path);
    out << config_echo(result.config);
    out << "# weight_init = [" << fmt("%.10g", result.weight_init_used.first) << ", "
        << fmt("%.10g", result.weight_init_used.second) << "]\n";
    out << "# best_c = " << fmt("%.12g", result.best_c) << '\n';
    out << "# best_epoch = " << result.best_epoch << '\n';
    out << "# converged = " << (result.converged ? 1 : 0) << '\n';
    out << "epoch,c,n_actual,weight_l2,weight_delta_l1\n";
    for (const auto& r : result.records) {
        out << r.epoch << ',' << fmt("%.12g", r.c_value) << ',' << r.n_actual_spikes << ','
            << fmt("%.12g", r.weight_l2) << ',' << fmt("%.12g", r.weight_delta_l1) << '\n';
    }
}

void write_weights_csv(const std::string& path, const std::vector<double>& weights) {
    auto out = open_out(path);
    out << "synapse,weight_mv\n";
    for (std::size_t i = 0; i < weights.size(); ++i)
        out << i << ',' << fmt("%.12g", weights[i]) << '\n';
}

}  // namespace tsd
