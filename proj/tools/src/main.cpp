#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"One-bounce NLOS localization: beacon placement planning, reflector/target "
                 "solving, and Monte Carlo noise studies"};
    app.require_subcommand(1);

    std::string config_path;
    std::string obs_path;
    std::string out_dir = ".";
    std::uint64_t seed = 0;
    int iterations = 0;

    CLI::App* plan = app.add_subcommand("plan", "Beacon placement and moving-beacon paths");
    plan->add_option("--config", config_path, "Scenario config file")->required();
    plan->add_option("--out", out_dir, "Output directory");

    CLI::App* solve = app.add_subcommand("solve", "Recover the reflector and localize the target");
    solve->add_option("--config", config_path, "Scenario config file")->required();
    solve->add_option("--obs", obs_path, "Observations file")->required();
    solve->add_option("--out", out_dir, "Output directory");

    CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo RMSE study per noise row");
    simulate->add_option("--config", config_path, "Scenario config file")->required();
    simulate->add_option("--out", out_dir, "Output directory");
    CLI::Option* seed_opt = simulate->add_option("--seed", seed, "Override the config seed");
    CLI::Option* iter_opt =
        simulate->add_option("--iterations", iterations, "Override the config iteration count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Usage problems share the config-error exit code; --help stays 0.
        const int code = app.exit(e);
        return code == 0 ? 0 : sltr::cli::kConfigError;
    }

    if (plan->parsed()) return sltr::cli::cmd_plan(config_path, out_dir);
    if (solve->parsed()) return sltr::cli::cmd_solve(config_path, obs_path, out_dir);
    if (simulate->parsed()) {
        sltr::cli::SimulateOverrides overrides;
        if (seed_opt->count() > 0) overrides.seed = seed;
        if (iter_opt->count() > 0) overrides.iterations = iterations;
        return sltr::cli::cmd_simulate(config_path, out_dir, overrides);
    }
    return sltr::cli::kFailure;
}
