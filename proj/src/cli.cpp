/*
* Copyright (C) 2026 coopsim developers
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*     http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/
#include "coopsim/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "coopsim/config.hpp"
#include "coopsim/engine.hpp"
#include "coopsim/report_io.hpp"
#include "coopsim/sweep.hpp"

namespace coopsim {

namespace {

/// Config flags shared by the subcommands. Flag values land in `values`;
/// apply() copies only the fields the user actually passed, so they override
/// both the defaults and a --config file.
struct ConfigFlags {
    SimConfig values;
    std::string config_path;

    CLI::Option* config_opt = nullptr;
    CLI::Option* n = nullptr;
    CLI::Option* k = nullptr;
    CLI::Option* ticks = nullptr;
    CLI::Option* gamma0 = nullptr;
    CLI::Option* c0 = nullptr;
    CLI::Option* s0 = nullptr;
    CLI::Option* consumption = nullptr;
    CLI::Option* alpha = nullptr;
    CLI::Option* beta = nullptr;
    CLI::Option* max_term = nullptr;
    CLI::Option* d0 = nullptr;
    CLI::Option* seed = nullptr;

    void add_to(CLI::App& app, bool with_run_fields)
    {
        config_opt = app.add_option("--config", config_path, "JSON config file");
        n = app.add_option("--n", values.n, "population size");
        k = app.add_option("--k", values.k, "group initiators per term");
        ticks = app.add_option("--T", values.formation_ticks, "formation ticks per term");
        gamma0 = app.add_option("--gamma0", values.gamma0, "choosiness base");
        c0 = app.add_option("--c0", values.c0, "agent capacity");
        s0 = app.add_option("--s0", values.s0, "initial savings");
        consumption = app.add_option("--consumption", values.consumption, "food consumed per term");
        max_term = app.add_option("--max-term", values.max_term, "terms per run");
        d0 = app.add_option("--d0", values.d0, "initial mean degree");
        if (with_run_fields) {
            alpha = app.add_option("--alpha", values.alpha, "preference spread in [0,1]");
            beta = app.add_option("--beta", values.beta, "complement-preferring fraction in [0,1]");
            seed = app.add_option("--seed", values.seed, "run seed");
        }
    }

    SimConfig resolve() const
    {
        SimConfig config;
        if (config_opt->count() > 0) {
            config = load_config_file(config_path, config);
        }
        auto apply = [](const CLI::Option* option, auto& target, const auto& source) {
            if (option != nullptr && option->count() > 0) {
                target = source;
            }
        };
        apply(n, config.n, values.n);
        apply(k, config.k, values.k);
        apply(ticks, config.formation_ticks, values.formation_ticks);
        apply(gamma0, config.gamma0, values.gamma0);
        apply(c0, config.c0, values.c0);
        apply(s0, config.s0, values.s0);
        apply(consumption, config.consumption, values.consumption);
        apply(alpha, config.alpha, values.alpha);
        apply(beta, config.beta, values.beta);
        apply(max_term, config.max_term, values.max_term);
        apply(d0, config.d0, values.d0);
        apply(seed, config.seed, values.seed);
        return config;
    }
};

int default_jobs()
{
    if (const char* env = std::getenv("COOPSIM_JOBS")) {
        const int parsed = std::atoi(env);
        if (parsed >= 1) {
            return parsed;
        }
    }
    const unsigned hardware = std::thread::hardware_concurrency();
    return hardware > 0 ? static_cast<int>(hardware) : 1;
}

} // namespace

int cli_main(int argc, const char* const* argv)
{
    CLI::App app{"coopsim: group-formation cooperation simulator"};
    app.require_subcommand(1);

    // run
    CLI::App* run_cmd = app.add_subcommand("run", "run one simulation and write run.csv / run.json");
    ConfigFlags run_flags;
    run_flags.add_to(*run_cmd, true);
    std::string run_out = ".";
    run_cmd->add_option("--out", run_out, "output directory");

    // sweep
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "replicated (alpha, beta) grid; writes sweep.csv / sweep.json");
    ConfigFlags sweep_flags;
    sweep_flags.add_to(*sweep_cmd, false);
    SweepSpec sweep_spec;
    sweep_cmd->add_option("--alphas", sweep_spec.alphas, "alpha grid values")->expected(-1);
    sweep_cmd->add_option("--betas", sweep_spec.betas, "beta grid values")->expected(-1);
    sweep_cmd->add_option("--reps", sweep_spec.replications, "replications per cell");
    sweep_cmd->add_option("--master-seed", sweep_spec.master_seed, "seed the per-run seeds derive from");
    CLI::Option* jobs_opt = sweep_cmd->add_option("--jobs", sweep_spec.jobs, "worker threads (or COOPSIM_JOBS)");
    std::string sweep_out = ".";
    sweep_cmd->add_option("--out", sweep_out, "output directory");

    // validate
    CLI::App* validate_cmd = app.add_subcommand("validate", "resolve a config and echo it as JSON");
    ConfigFlags validate_flags;
    validate_flags.add_to(*validate_cmd, true);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (run_cmd->parsed()) {
            const SimConfig config = run_flags.resolve();
            config.validate();
            const RunReport report = run_simulation(config);
            const auto paths = write_outputs(report, run_out);
            std::cout << "run: " << report.terms.size() << " terms, winner=" << winner_name(report.final_winner);
            if (report.degenerate()) {
                std::cout << " (early stop at term " << report.early_stop_term << ": " << report.early_stop << ")";
            }
            std::cout << "\n";
            for (const auto& path : paths) {
                std::cout << "wrote " << path.string() << "\n";
            }
        }
        else if (sweep_cmd->parsed()) {
            sweep_spec.base = sweep_flags.resolve();
            if (jobs_opt->count() == 0) {
                sweep_spec.jobs = default_jobs();
            }
            const SweepReport report = run_sweep(sweep_spec);
            const auto paths = write_outputs(report, sweep_out);
            for (const SweepCell& cell : report.cells) {
                std::cout << "alpha=" << format_double(cell.alpha) << " beta=" << format_double(cell.beta)
                          << " win_rate=" << format_double(cell.win_rate())
                          << " degenerate=" << cell.degenerate_runs << "\n";
            }
            for (const auto& path : paths) {
                std::cout << "wrote " << path.string() << "\n";
            }
        }
        else if (validate_cmd->parsed()) {
            const SimConfig config = validate_flags.resolve();
            config.validate();
            std::cout << config_to_json(config).dump(2) << "\n";
        }
    }
    catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

int cli_main(const std::vector<std::string>& args)
{
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("coopsim");
    for (const std::string& arg : args) {
        argv.push_back(arg.c_str());
    }
    return cli_main(static_cast<int>(argv.size()), argv.data());
}

} // namespace coopsim
