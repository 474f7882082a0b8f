// Acceptance suite: one pass/fail line per criterion. Exit code is the number
// of failed criteria.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <vector>

#include "tsd/intervals.hpp"
#include "tsd/io.hpp"
#include "tsd/metric.hpp"
#include "tsd/poisson.hpp"
#include "tsd/rules.hpp"
#include "tsd/srm.hpp"
#include "tsd/trainer.hpp"

using namespace tsd;

namespace {

int g_failures = 0;

void report(int criterion, const char* name, bool ok, const std::string& detail = "") {
    std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion, name,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, format, a, b, c);
    return buf;
}

// Desk-scale reference setup shared by the quantitative criteria.
ExperimentConfig reference_config(double duration_ms) {
    ExperimentConfig cfg;
    cfg.n_inputs = 200;
    cfg.duration = duration_ms;
    cfg.input_rate = 40.0;
    cfg.desired_rate = 50.0;
    cfg.sigma_c = 2.0;
    cfg.seed = 1000;
    return cfg;
}

RuleConfig make_named_rule(const std::string& name) {
    if (name == "tsd") return TsdParams{};
    if (name == "offline-wh") return OfflineWhParams{};
    return ResumeParams{};
}

double lr_center_for(const std::string& name, double duration) {
    const double base = name == "tsd" ? 0.0019 : name == "resume" ? 0.0022 : 0.002;
    return base * 200.0 / duration;
}

struct CellStats {
    double mean_c = 0.0;
    double median_c = 0.0;
    std::vector<double> best_cs;
};

// One comparison cell at the reference tuned learning rate for the rule and
// duration. Re-tuning over wider grids is deliberately avoided here: with a
// best-C-ever objective, noisy high-rate trajectories profit from the max over
// epochs, which would measure luck rather than the rule.
CellStats run_cell(const std::string& rule, double duration, std::size_t seeds,
                   std::size_t max_epochs) {
    ExperimentConfig cfg = reference_config(duration);
    cfg.rule = make_named_rule(rule);
    cfg.max_epochs = max_epochs;
    rule_eta(cfg.rule) = lr_center_for(rule, duration);
    CellStats stats;
    for (std::size_t s = 0; s < seeds; ++s) {
        ExperimentConfig c = cfg;
        c.seed = cfg.seed + s;
        stats.best_cs.push_back(train(c).best_c);
    }
    for (double c : stats.best_cs) stats.mean_c += c;
    stats.mean_c /= static_cast<double>(stats.best_cs.size());
    std::vector<double> sorted = stats.best_cs;
    std::sort(sorted.begin(), sorted.end());
    stats.median_c = sorted.size() % 2 ? sorted[sorted.size() / 2]
                                       : 0.5 * (sorted[sorted.size() / 2 - 1] +
                                                sorted[sorted.size() / 2]);
    return stats;
}

SpikeTrain random_small_train(std::mt19937_64& rng, double t_max, double p_spike) {
    std::vector<double> times;
    for (double t = 0.0; t <= t_max + 1e-9; t += 0.1)
        if (u01(rng()) < p_spike * 0.1) times.push_back(t);
    return SpikeTrain(times);
}

// ---------------------------------------------------------------------------

void criterion_1_metric_sanity() {
    TimeGrid grid(200.0);
    SpikeTrain base({50.0, 80.0, 120.0, 151.5});
    bool ok = std::abs(correlation_c(base, base, 2.0, grid) - 1.0) <= 1e-12;
    auto shifted = [&](double by) {
        std::vector<double> t;
        for (double x : base.times()) t.push_back(x + by);
        return correlation_c(SpikeTrain(t), base, 2.0, grid);
    };
    const double c1 = shifted(1.0), c2 = shifted(2.0), c4 = shifted(4.0);
    ok = ok && c1 < 1.0 && c2 < c1 && c4 < c2;
    report(1, "metric sanity", ok, fmt("C(shift 1,2,4) = %.4f, %.4f, %.4f", c1, c2, c4));
}

void criterion_2_update_oracles() {
    std::mt19937_64 rng(2024);
    int bad = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        // tsd_update vs literal Laplace triple-spike transcription
        TsdParams tp;
        tp.eta = 0.0001 + 0.01 * u01(rng());
        tp.kernel = KernelSpec(KernelShape::Laplace, 1.0 + 15.0 * u01(rng()));
        tp.tau_y = 1.0 + 15.0 * u01(rng());
        const double t_prev = 20.0 * u01(rng());
        const double t_cur = t_prev + 0.1 + 30.0 * u01(rng());
        const int sign = u01(rng()) < 0.5 ? 1 : -1;
        std::vector<double> window;
        for (int j = static_cast<int>(u01(rng()) * 6); j > 0; --j)
            window.push_back(t_prev + (t_cur - t_prev) * (0.01 + 0.99 * u01(rng())));
        std::sort(window.begin(), window.end());
        double expect = 0.0;
        for (double t_in : window)
            expect += std::exp(-(t_cur - t_in) / tp.kernel.tau) *
                      std::exp(-(t_cur - t_in) /
                               (tp.tau_y * std::max(t_in - t_prev, tp.denom_floor)));
        expect *= tp.eta * sign;
        if (std::abs(tsd_update(t_cur, sign, t_prev, window, tp) - expect) > 1e-10) ++bad;

        // offline_wh_epoch vs first-spike-after transcription
        TimeGrid g(50.0);
        auto input = generate_poisson_train(100.0, g, rng());
        auto actual = generate_poisson_train(60.0, g, rng());
        auto desired = generate_poisson_train(60.0, g, rng());
        KernelSpec k(KernelShape::Laplace, 2.0 + 10.0 * u01(rng()));
        const double eta = 0.001 + 0.01 * u01(rng());
        double wh = 0.0;
        for (double t_in : input.times()) {
            for (double d : desired.times())
                if (d >= t_in) {
                    wh += std::exp(-(d - t_in) / k.tau);
                    break;
                }
            for (double a : actual.times())
                if (a >= t_in) {
                    wh -= std::exp(-(a - t_in) / k.tau);
                    break;
                }
        }
        wh *= eta;
        if (std::abs(offline_wh_epoch(input, actual, desired, k, eta) - wh) > 1e-10) ++bad;

        // stdp_pair / tstdp_triplet vs hand formulas
        TstdpParams tt;
        tt.pair.a_plus = u01(rng());
        tt.pair.a_minus = u01(rng());
        tt.pair.tau_plus = 1.0 + 15.0 * u01(rng());
        tt.pair.tau_minus = 1.0 + 15.0 * u01(rng());
        tt.a2_plus = u01(rng());
        tt.a3_plus = u01(rng());
        tt.a2_minus = u01(rng());
        tt.a3_minus = u01(rng());
        tt.tau_y = 1.0 + 15.0 * u01(rng());
        const double dt1 = -30.0 + 60.0 * u01(rng());
        const double dt2 = 30.0 * u01(rng());
        const double pair_expect =
            dt1 > 0.0 ? tt.pair.a_plus * std::exp(-dt1 / tt.pair.tau_plus)
                      : -tt.pair.a_minus * std::exp(dt1 / tt.pair.tau_minus);
        if (std::abs(stdp_pair(dt1, tt.pair) - pair_expect) > 1e-10) ++bad;
        const double pot = tt.pair.a_plus * std::exp(-dt1 / tt.pair.tau_plus) *
                           (tt.a2_plus + tt.a3_plus * std::exp(-dt2 / tt.tau_y));
        if (std::abs(tstdp_triplet(dt1, dt2, TripletBranch::Potentiation, tt) - pot) > 1e-10)
            ++bad;
        const double dep = -tt.pair.a_minus * std::exp(dt1 / tt.pair.tau_minus) *
                           (tt.a2_minus + tt.a3_minus * std::exp(-dt2 / tt.tau_y));
        if (std::abs(tstdp_triplet(dt1, dt2, TripletBranch::Depression, tt) - dep) > 1e-10) ++bad;
    }
    report(2, "update-formula oracle equivalence (1000 draws, 1e-10)", bad == 0,
           fmt("%g mismatches", bad));
}

void criterion_3_interval_oracles() {
    std::mt19937_64 rng(3030);
    int bad = 0;
    auto dti_of = [](double t, const SpikeTrain& desired) {
        std::size_t idx = 0;
        for (double d : desired.times())
            if (d < t) ++idx;
        return idx;
    };
    for (int trial = 0; trial < 10000; ++trial) {
        SpikeTrain desired = random_small_train(rng, 50.0, 0.15);
        SpikeTrain actual = random_small_train(rng, 50.0, 0.15);
        SpikeTrain input = random_small_train(rng, 50.0, 0.4);

        // classify_atis vs DTI-membership scan
        auto atis = classify_atis(actual, desired);
        if (atis.size() != actual.count()) ++bad;
        double prev = 0.0;
        for (std::size_t i = 0; i < atis.size(); ++i) {
            const AtiKind expect = dti_of(prev, desired) == dti_of(actual[i], desired)
                                       ? AtiKind::Gati
                                       : AtiKind::Sati;
            if (atis[i].t_start != prev || atis[i].t_end != actual[i] || atis[i].kind != expect)
                ++bad;
            prev = actual[i];
        }

        // label_input_spikes vs positional scan
        auto labels = label_input_spikes(input, actual, desired);
        if (labels.size() != input.count()) ++bad;
        for (const auto& li : labels) {
            const std::size_t dti = dti_of(li.t, desired);
            std::vector<double> acts;
            for (double a : actual.times())
                if (dti_of(a, desired) == dti) acts.push_back(a);
            InputLabel expect;
            if (acts.empty())
                expect = InputLabel::Fiti;
            else if (acts.size() == 1)
                expect = li.t < acts.front() ? InputLabel::Fiti : InputLabel::Liti;
            else if (li.t < acts.front())
                expect = InputLabel::Fiti;
            else if (li.t <= acts.back())
                expect = InputLabel::Miti;
            else
                expect = InputLabel::Liti;
            if (li.label != expect) ++bad;
        }

        // resolve_prev_boundary vs latest-prior scan; window stream uniqueness
        auto events = merge_event_times(actual, desired);
        while (!events.empty() && events.front() == 0.0) events.erase(events.begin());
        std::map<double, int> uses;
        double prev_event = 0.0;
        for (double t : events) {
            double expect_tp = 0.0;
            for (double x : actual.times())
                if (x < t) expect_tp = std::max(expect_tp, x);
            for (double x : desired.times())
                if (x < t) expect_tp = std::max(expect_tp, x);
            if (resolve_prev_boundary(t, actual, desired) != expect_tp) ++bad;
            for (double t_in : select_window(prev_event, t, input)) ++uses[t_in];
            prev_event = t;
        }
        for (double t_in : input.times()) {
            auto it = std::lower_bound(events.begin(), events.end(), t_in);
            const int expect_uses = it == events.end() ? 0 : 1;
            const int got = uses.count(t_in) ? uses[t_in] : 0;
            if (got != expect_uses) ++bad;
        }
    }
    report(3, "interval/window oracle equivalence (1e4 instances)", bad == 0,
           fmt("%g mismatches", bad));
}

void criterion_4_fixed_point() {
    std::mt19937_64 rng(4040);
    int built = 0, bad = 0;
    while (built < 100) {
        ExperimentConfig cfg;
        cfg.n_inputs = 10 + rng() % 30;
        cfg.duration = 100.0;
        cfg.input_rate = 40.0;
        cfg.seed = rng();
        const TimeGrid grid = cfg.grid();
        auto inputs = draw_input_trains(cfg);
        Network net{draw_initial_weights({0.0, 0.4}, cfg.n_inputs, rng()), cfg.srm, {}};
        SpikeTrain desired = simulate(net, inputs, grid).output;
        if (desired.empty()) continue;
        ++built;
        const std::vector<double> before = net.weights;
        TsdParams p;
        p.eta = 0.01;
        auto outcome = run_epoch(net, inputs, desired, RuleConfig{p}, grid);
        if (outcome.actual.times() != desired.times()) ++bad;
        if (net.weights != before) ++bad;
        if (correlation_c(outcome.actual, desired, 2.0, grid) != 1.0) ++bad;
        // and the epoch after it is identical again
        auto outcome2 = run_epoch(net, inputs, desired, RuleConfig{p}, grid);
        if (outcome2.actual.times() != desired.times() || net.weights != before) ++bad;
    }
    report(4, "convergence fixed point (100 instances)", bad == 0, fmt("%g violations", bad));
}

void criterion_5_table2_200ms() {
    ExperimentConfig cfg = reference_config(200.0);
    cfg.rule = TsdParams{};
    cfg.max_epochs = 1500;
    auto [lr, tuned] = tune_lr(cfg, log_lr_grid(lr_center_for("tsd", 200.0), 0.5, 2));
    std::vector<double> cs;
    for (std::size_t s = 0; s < 10; ++s) {
        ExperimentConfig c = cfg;
        rule_eta(c.rule) = lr;
        c.seed = cfg.seed + s;
        cs.push_back(s == 0 ? tuned.best_c : train(c).best_c);
    }
    std::sort(cs.begin(), cs.end());
    const double median = 0.5 * (cs[4] + cs[5]);
    int reached = 0;
    for (double c : cs)
        if (c >= 0.90) ++reached;
    report(5, "desk-scale reference run, 200 ms TSD, tuned LR", median >= 0.90 && reached >= 7,
           fmt("median best C = %.3f, %g/10 seeds >= 0.90", median, static_cast<double>(reached)));
}

std::map<std::pair<std::string, double>, CellStats> g_cells;

void criterion_6_dominance() {
    const std::vector<double> durations{200.0, 400.0, 600.0};
    const std::vector<std::string> rules{"tsd", "offline-wh", "resume"};
    bool ok = true;
    std::string detail;
    for (double d : durations) {
        for (const auto& r : rules) g_cells[{r, d}] = run_cell(r, d, 10, 1000);
        const double tsd_c = g_cells[{"tsd", d}].mean_c;
        const double wh_c = g_cells[{"offline-wh", d}].mean_c;
        const double rs_c = g_cells[{"resume", d}].mean_c;
        if (tsd_c < wh_c || tsd_c < rs_c) ok = false;
        detail += fmt("[%gms tsd %.3f", d, tsd_c) + fmt(" wh %.3f resume %.3f] ", wh_c, rs_c);
    }
    report(6, "algorithm dominance trend (200/400/600 ms, 10 seeds)", ok, detail);
}

void criterion_7_degradation() {
    g_cells[{"tsd", 1200.0}] = run_cell("tsd", 1200.0, 10, 1000);
    const double c200 = g_cells[{"tsd", 200.0}].mean_c;
    const double c600 = g_cells[{"tsd", 600.0}].mean_c;
    const double c1200 = g_cells[{"tsd", 1200.0}].mean_c;
    int inversions = 0;
    double worst = 0.0;
    if (c600 > c200) ++inversions, worst = std::max(worst, c600 - c200);
    if (c1200 > c600) ++inversions, worst = std::max(worst, c1200 - c600);
    const bool ok = inversions == 0 || (inversions == 1 && worst <= 0.02);
    report(7, "degradation trend (TSD mean C over 200/600/1200 ms)", ok,
           fmt("C = %.3f, %.3f, %.3f", c200, c600, c1200));
}

void criterion_8_determinism() {
    namespace fs = std::filesystem;
    ExperimentConfig cfg = reference_config(200.0);
    cfg.n_inputs = 50;
    cfg.max_epochs = 40;
    const fs::path dir = fs::temp_directory_path() / "tsd_acceptance_determinism";
    fs::create_directories(dir);
    auto csv_of = [&](const char* name) {
        const auto path = dir / name;
        write_epoch_csv(path.string(), train(cfg));
        std::ifstream in(path);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    const bool ok = csv_of("a.csv") == csv_of("b.csv");
    fs::remove_all(dir);
    report(8, "byte-for-byte determinism of epoch CSVs", ok);
}

void criterion_9_simulator_invariants() {
    std::mt19937_64 rng(9090);
    int bad = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        TimeGrid g(100.0);
        const std::size_t n = 1 + rng() % 10;
        std::vector<double> w(n);
        for (double& x : w) x = 1.5 * u01(rng());
        std::vector<SpikeTrain> inputs;
        for (std::size_t i = 0; i < n; ++i)
            inputs.push_back(generate_poisson_train(120.0, g, rng()));
        Network net{w, SrmParams{}, {}};
        auto out = simulate(net, inputs, g).output;
        for (std::size_t i = 1; i < out.count(); ++i)
            if (out[i] - out[i - 1] < net.params.t_abs - 1e-9) ++bad;
        Network silent{std::vector<double>(n, 0.0), SrmParams{}, {}};
        if (!simulate(silent, inputs, g).output.empty()) ++bad;
    }
    report(9, "simulator invariants (refractory gap, zero-weight silence)", bad == 0,
           fmt("%g violations", bad));
}

}  // namespace

int main() {
    criterion_1_metric_sanity();
    criterion_2_update_oracles();
    criterion_3_interval_oracles();
    criterion_4_fixed_point();
    criterion_5_table2_200ms();
    criterion_6_dominance();
    criterion_7_degradation();
    criterion_8_determinism();
    criterion_9_simulator_invariants();
    std::printf("%d criterion(s) failed\n", g_failures);
    return g_failures;
}
