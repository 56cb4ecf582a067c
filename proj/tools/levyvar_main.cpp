#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "levyvar/cli/commands.hpp"
#include "levyvar/config/config.hpp"

// Exit codes: 0 success, 2 usage or validation error, 3 runtime or I/O error,
// 4 experiment FAIL verdict.
int main(int argc, char** argv) {
    using namespace levyvar;

    CLI::App app{"Feller symbols, growth indices and p-variation of sampled paths"};
    app.require_subcommand(1);

    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string out_dir;
    int workers = 1;
    app.add_option("--config", config_path, "JSON configuration file");
    app.add_option("--seed", seed, "master seed override");
    app.add_option("--out", out_dir, "artifact directory override");
    app.add_option("--workers", workers, "worker thread count")->check(CLI::PositiveNumber);

    cli::SymbolArgs symbol_args;
    auto* symbol = app.add_subcommand("symbol", "evaluate a registered symbol q(x, xi)");
    symbol->add_option("model", symbol_args.model, "registered model name")->required();
    symbol->add_option("--x", symbol_args.x, "state point, comma separated (default: origin)");
    symbol->add_option("--xi", symbol_args.xi, "frequency point, comma separated")->required();

    cli::IndexArgs index_args;
    auto* index = app.add_subcommand("index", "estimate a growth index of a registered model");
    index->add_option("model", index_args.model, "registered model name")->required();
    index->add_option("--kind", index_args.kind, "beta1 | beta2 | spot | loc | unif")->required();
    index->add_option("--at", index_args.at, "state point for spot/loc kinds");

    cli::SimulateArgs sim_args;
    auto* simulate = app.add_subcommand("simulate", "sample paths on a dyadic grid");
    simulate->add_option("model", sim_args.model, "registered model name")->required();
    simulate->add_option("--level", sim_args.level, "dyadic level (2^level cells)");
    simulate->add_option("--horizon", sim_args.horizon, "time horizon (default: model's)");
    simulate->add_option("--paths", sim_args.paths, "number of independent paths");
    simulate->add_option("--format", sim_args.format, "csv | bin");

    cli::PvarArgs pvar_args;
    auto* pvar = app.add_subcommand("pvar", "p-variation of a stored path or a refinable model");
    pvar->add_option("--input", pvar_args.input, "path CSV (time,v1,..,vd)");
    pvar->add_option("--model", pvar_args.model, "registered refinable model name");
    pvar->add_option("--p", pvar_args.p, "variation exponent (repeatable)")->required();
    pvar->add_option("--levels", pvar_args.levels, "dyadic levels for the estimate mode");
    pvar->add_option("--paths", pvar_args.paths, "paths for the estimate mode");
    pvar->add_option("--coordinate", pvar_args.coordinate, "restrict to one coordinate");

    cli::ExperimentArgs exp_args;
    auto* experiment = app.add_subcommand("experiment", "run one registered experiment");
    experiment->add_option("id", exp_args.id, "experiment id")->required();
    experiment->add_option("--set", exp_args.overrides, "parameter override key=value (repeatable)");

    auto* suite = app.add_subcommand("suite", "run every registered experiment");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        config::Config cfg = config_path.empty() ? config::Config::defaults()
                                                 : config::Config::from_file(config_path);
        if (seed) cfg.seed = *seed;
        if (!out_dir.empty()) cfg.out_dir = out_dir;

        if (symbol->parsed()) {
            cli::run_symbol(cfg, symbol_args, std::cout);
        } else if (index->parsed()) {
            cli::run_index(cfg, index_args, std::cout);
        } else if (simulate->parsed()) {
            cli::run_simulate(cfg, sim_args, std::cout);
        } else if (pvar->parsed()) {
            cli::run_pvar(cfg, pvar_args, workers, std::cout);
        } else if (experiment->parsed()) {
            return cli::run_experiment_cmd(cfg, exp_args, workers, std::cout);
        } else if (suite->parsed()) {
            return cli::run_suite_cmd(cfg, workers, std::cout);
        }
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
