#include "tsd/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <thread>

#include "tsd/intervals.hpp"
#include "tsd/io.hpp"
#include "tsd/svg.hpp"

namespace tsd {

namespace {

namespace fs = std::filesystem;

ExperimentConfig load_config(const CliOptions& opts) {
    if (opts.config_path.empty()) throw ConfigError("--config is required");
    ExperimentConfig cfg = load_experiment_config(IniFile::parse_file(opts.config_path));
    if (opts.seed) cfg.seed = *opts.seed;
    return cfg;
}

fs::path ensure_out_dir(const CliOptions& opts) {
    std::string dir = opts.out_dir;
    if (dir.empty()) {
        if (const char* env = std::getenv("TSD_OUT_DIR")) dir = env;
    }
    if (dir.empty()) dir = ".";
    fs::create_directories(dir);
    return dir;
}

int guarded(const std::function<void()>& body) {
    try {
        body();
        return kExitOk;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntimeError;
    }
}

struct DrawnTrains {
    std::vector<SpikeTrain> inputs;
    SpikeTrain desired;
};

DrawnTrains draw_trains(const ExperimentConfig& cfg) {
    return {draw_input_trains(cfg), draw_desired_train(cfg)};
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

SweepCell run_sweep_cell(const SweepSpec& spec, const IniFile& ini, const std::string& algorithm,
                         double value) {
    ExperimentConfig cfg = spec.base;
    if (spec.axis == SweepAxis::Duration)
        cfg.duration = value;
    else
        cfg.input_rate = value;
    cfg.rule = make_rule(algorithm, ini, rule_eta(spec.base.rule));

    const double center = default_lr_center(algorithm, spec.axis, value);
    const std::vector<double> lr_grid =
        log_lr_grid(center, spec.lr_span_decades, spec.lr_points_per_decade);
    auto [tuned_lr, tuned_result] = tune_lr(cfg, lr_grid);

    SweepCell cell;
    cell.algorithm = algorithm;
    cell.value = value;
    cell.tuned_lr = tuned_lr;
    cell.repeats = spec.repeats;
    std::vector<double> cs;
    double epoch_sum = 0.0;
    for (std::size_t r = 0; r < spec.repeats; ++r) {
        ExperimentConfig run_cfg = cfg;
        rule_eta(run_cfg.rule) = tuned_lr;
        run_cfg.seed = cfg.seed + r;
        ExperimentResult res = r == 0 && run_cfg.seed == tuned_result.config.seed
                                   ? tuned_result
                                   : train(run_cfg);
        cs.push_back(res.best_c);
        epoch_sum += static_cast<double>(res.best_epoch);
    }
    cell.c_mean = std::accumulate(cs.begin(), cs.end(), 0.0) / static_cast<double>(cs.size());
    cell.c_median = median(cs);
    cell.epoch_mean = epoch_sum / static_cast<double>(spec.repeats);
    return cell;
}

std::vector<SweepCell> run_sweep(const SweepSpec& spec, const IniFile& ini, std::size_t jobs) {
    struct Task {
        std::string algorithm;
        double value;
    };
    std::vector<Task> tasks;
    for (const auto& alg : spec.algorithms)
        for (double v : spec.values) tasks.push_back({alg, v});

    std::vector<SweepCell> cells(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
            cells[i] = run_sweep_cell(spec, ini, tasks[i].algorithm, tasks[i].value);
    };
    jobs = std::max<std::size_t>(1, std::min(jobs, tasks.size()));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return cells;
}

void write_sweep_csv(const std::string& path, const std::vector<SweepCell>& cells) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "algorithm,value,tuned_lr,c_mean,c_median,epoch_mean,repeats\n";
    char buf[256];
    for (const auto& c : cells) {
        std::snprintf(buf, sizeof buf, "%s,%.10g,%.10g,%.12g,%.12g,%.12g,%zu\n",
                      c.algorithm.c_str(), c.value, c.tuned_lr, c.c_mean, c.c_median, c.epoch_mean,
                      c.repeats);
        out << buf;
    }
}

int cmd_generate(const CliOptions& opts) {
    return guarded([&] {
        const ExperimentConfig cfg = load_config(opts);
        const fs::path dir = ensure_out_dir(opts);
        const DrawnTrains t = draw_trains(cfg);
        write_trains((dir / "inputs.txt").string(), t.inputs);
        write_trains((dir / "desired.txt").string(), {t.desired});
        std::ofstream manifest(dir / "manifest.txt");
        if (!manifest) throw std::runtime_error("cannot write manifest");
        manifest << config_echo(cfg);
        std::size_t n_spikes = 0;
        for (const auto& in : t.inputs) n_spikes += in.count();
        manifest << "# total_input_spikes = " << n_spikes << '\n'
                 << "# desired_spikes = " << t.desired.count() << '\n';
    });
}

int cmd_train(const CliOptions& opts) {
    return guarded([&] {
        const ExperimentConfig cfg = load_config(opts);
        const fs::path dir = ensure_out_dir(opts);
        const ExperimentResult result = train(cfg);
        write_epoch_csv((dir / "epochs.csv").string(), result);
        write_weights_csv((dir / "weights.csv").string(), result.final_weights);

        LinePlot plot;
        plot.title = "C vs epoch (" + rule_name(cfg.rule) + ")";
        plot.x_label = "epoch";
        plot.y_label = "C";
        PlotSeries s{"C", {}};
        for (const auto& r : result.records)
            s.points.emplace_back(static_cast<double>(r.epoch), r.c_value);
        plot.series.push_back(std::move(s));
        if (result.best_epoch > 0)
            plot.markers.push_back({static_cast<double>(result.best_epoch), result.best_c, "best"});
        write_svg((dir / "c_vs_epoch.svg").string(), plot);
        std::cout << "best_c=" << result.best_c << " best_epoch=" << result.best_epoch
                  << " epochs_run=" << result.records.size() << '\n';
    });
}

int cmd_sweep(const CliOptions& opts) {
    return guarded([&] {
        if (opts.config_path.empty()) throw ConfigError("--config is required");
        const IniFile ini = IniFile::parse_file(opts.config_path);
        SweepSpec spec = load_sweep_spec(ini);
        if (opts.seed) spec.base.seed = *opts.seed;
        const fs::path dir = ensure_out_dir(opts);
        const std::vector<SweepCell> cells = run_sweep(spec, ini, opts.jobs);
        write_sweep_csv((dir / "sweep.csv").string(), cells);

        LinePlot plot;
        plot.title = "mean C per algorithm";
        plot.x_label = spec.axis == SweepAxis::Duration ? "duration (ms)" : "input rate (Hz)";
        plot.y_label = "mean best C";
        for (const auto& alg : spec.algorithms) {
            PlotSeries s{alg, {}};
            for (const auto& c : cells)
                if (c.algorithm == alg) s.points.emplace_back(c.value, c.c_mean);
            std::sort(s.points.begin(), s.points.end());
            plot.series.push_back(std::move(s));
        }
        write_svg((dir / "sweep.svg").string(), plot);
    });
}

int cmd_classify(const CliOptions& opts) {
    return guarded([&] {
        const ExperimentConfig cfg = load_config(opts);
        const fs::path dir = ensure_out_dir(opts);
        const TimeGrid grid = cfg.grid();
        const DrawnTrains t = draw_trains(cfg);
        const auto range = cfg.weight_init
                               ? *cfg.weight_init
                               : calibrate_weight_init(cfg, t.inputs, t.desired, grid);
        Network net{draw_initial_weights(range, cfg.n_inputs, cfg.seed), cfg.srm, {}};
        const SpikeTrain actual = simulate(net, t.inputs, grid).output;

        std::ofstream atis(dir / "atis.csv");
        if (!atis) throw std::runtime_error("cannot write atis.csv");
        atis << "t_start,t_end,kind\n";
        char buf[128];
        for (const auto& ati : classify_atis(actual, t.desired)) {
            std::snprintf(buf, sizeof buf, "%.1f,%.1f,%s\n", ati.t_start, ati.t_end,
                          ati.kind == AtiKind::Gati ? "GATI" : "SATI");
            atis << buf;
        }

        std::ofstream labels(dir / "input_labels.csv");
        if (!labels) throw std::runtime_error("cannot write input_labels.csv");
        labels << "synapse,time,label\n";
        for (std::size_t i = 0; i < t.inputs.size(); ++i) {
            for (const auto& li : label_input_spikes(t.inputs[i], actual, t.desired)) {
                const char* name = li.label == InputLabel::Fiti   ? "FITI"
                                   : li.label == InputLabel::Miti ? "MITI"
                                                                  : "LITI";
                std::snprintf(buf, sizeof buf, "%zu,%.1f,%s\n", i, li.t, name);
                labels << buf;
            }
        }
    });
}

}  // namespace tsd
