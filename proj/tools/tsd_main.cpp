#include <CLI11.hpp>

#include "tsd/harness.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Spiking-network supervised learning toolkit (triple-spike-driven rule)"};
    app.require_subcommand(1);

    tsd::CliOptions opts;
    std::uint64_t seed = 0;
    bool seed_set = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", opts.config_path, "experiment/sweep config file")->required();
        sub->add_option("--out", opts.out_dir, "output directory (default: $TSD_OUT_DIR or .)");
        sub->add_option("--seed", seed, "override the config seed")
            ->each([&](const std::string&) { seed_set = true; });
        sub->add_option("--jobs", opts.jobs, "parallel workers for sweeps");
    };

    CLI::App* generate = app.add_subcommand("generate", "write seeded spike-train fixtures");
    CLI::App* train = app.add_subcommand("train", "run one experiment, emit CSV and SVG");
    CLI::App* sweep = app.add_subcommand("sweep", "algorithm-comparison sweep over an axis");
    CLI::App* classify = app.add_subcommand("classify", "dump interval diagnostics as CSV");
    for (CLI::App* sub : {generate, train, sweep, classify}) add_common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        // usage mistakes share the config-error exit code; --help stays 0
        return rc == 0 ? tsd::kExitOk : tsd::kExitConfigError;
    }
    if (seed_set) opts.seed = seed;

    if (generate->parsed()) return tsd::cmd_generate(opts);
    if (train->parsed()) return tsd::cmd_train(opts);
    if (sweep->parsed()) return tsd::cmd_sweep(opts);
    return tsd::cmd_classify(opts);
}
