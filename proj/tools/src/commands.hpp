#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "config.hpp"

namespace sltr::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kOk = 0,
    kFailure = 1,       // unexpected error
    kConfigError = 2,   // unreadable/invalid config or observations file
    kDegenerate = 3,    // degenerate geometry for these inputs
    kInconsistent = 4,  // beacon observations disagree on the reflector
};

struct SimulateOverrides {
    std::optional<std::uint64_t> seed;
    std::optional<int> iterations;
};

/// plan: derive the target observation from the scenario truth, build the
/// beacon placement and the three moving-beacon paths, and write
/// plan_stations.csv, plan_paths.csv and plan_waypoints.csv under out_dir.
int cmd_plan(const std::string& config_path, const std::string& out_dir);

/// solve: read measured observations, recover the reflector and target, and
/// write solve_results.csv (truth vs estimate, one row) under out_dir.
int cmd_solve(const std::string& config_path, const std::string& obs_path,
              const std::string& out_dir);

/// simulate: run the Monte Carlo study for every [noise] row and write
/// simulate_rmse.csv plus the gnuplot scatter file simulate_scatter.dat.
int cmd_simulate(const std::string& config_path, const std::string& out_dir,
                 const SimulateOverrides& overrides = {});

}  // namespace sltr::cli
