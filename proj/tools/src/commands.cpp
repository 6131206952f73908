#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "csv.hpp"
#include "sltr/paths.hpp"
#include "sltr/placement.hpp"
#include "sltr/simulate.hpp"
#include "sltr/solver.hpp"

namespace sltr::cli {

namespace {

namespace fs = std::filesystem;

std::string joined(const std::string& dir, const std::string& name) {
    return (fs::path(dir) / name).string();
}

void ensure_out_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error("cannot create output directory '" + dir + "': " + ec.message());
}

int run_guarded(const std::function<void()>& body) {
    try {
        body();
        return kOk;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const Inconsistent& e) {
        std::cerr << "inconsistent observations: " << e.what() << "\n";
        return kInconsistent;
    } catch (const Error& e) {
        std::cerr << "degenerate geometry: " << e.what() << "\n";
        return kDegenerate;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
}

std::string experiment_id(const std::string& config_path) {
    std::string id = fs::path(config_path).stem().string();
    for (char& c : id)
        if (c == ',' || c == '\n' || c == '\r') c = '_';
    return id;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
}

// A sighting's range: direct d_total, or apparent size through the
// configured size-constancy reference.
Observation resolve_sighting(const MeasuredSighting& sighting, double reference_size,
                             double reference_distance, const char* who) {
    const Bearing bearing = Bearing::from_degrees(sighting.bearing_deg);
    if (sighting.d_total) return Observation(bearing, *sighting.d_total);
    if (!(reference_size > 0.0))
        throw ConfigError(std::string(who) +
                          " observation gives apparent_size but the config has no matching "
                          "[size_constancy] reference");
    return Observation::from_apparent_size(bearing, *sighting.apparent_size,
                                           SizeConstancy(reference_size, reference_distance));
}

}  // namespace

int cmd_plan(const std::string& config_path, const std::string& out_dir) {
    return run_guarded([&] {
        const ScenarioConfig config = load_config(config_path);
        const Scenario scene = to_scenario(config);
        ensure_out_dir(out_dir);

        const PlacementParams params = placement_params(scene);
        const PlacementPlan plan = build_plan(scene.observer, params);

        CsvWriter stations({"station", "side", "candidate_x", "candidate_y", "beacon_x",
                            "beacon_y", "tri_ax", "tri_ay", "tri_bx", "tri_by", "tri_cx",
                            "tri_cy"});
        for (std::size_t i = 0; i < plan.stations.size(); ++i) {
            const PlacementStation& station = plan.stations[i];
            for (int side = 0; side < 2; ++side) {
                const BeaconSite& site = station.sites[static_cast<std::size_t>(side)];
                stations.add_row({std::to_string(i + 1), std::to_string(side),
                                  format_number(station.candidate.x),
                                  format_number(station.candidate.y),
                                  format_number(site.beacon.x), format_number(site.beacon.y),
                                  format_number(site.triangle[0].x),
                                  format_number(site.triangle[0].y),
                                  format_number(site.triangle[1].x),
                                  format_number(site.triangle[1].y),
                                  format_number(site.triangle[2].x),
                                  format_number(site.triangle[2].y)});
            }
        }
        stations.write(joined(out_dir, "plan_stations.csv"));

        // Moving-beacon paths over the planned sites: pair separation is the
        // distance between the two beacons of a station.
        const int n = static_cast<int>(plan.stations.size());
        const double a = distance(plan.stations.front().sites[0].beacon,
                                  plan.stations.front().sites[1].beacon);
        const double b = plan.step_size;
        const Pose2D start = plan.stations.front().sites[0].beacon;
        const Ray back_ray{plan.stations.front().candidate,
                           Bearing(params.alpha.radians() + kPi)};

        const bool rectangular_shortest = b > a;
        CsvWriter paths({"kind", "a", "b", "n", "total_length", "shortest"});
        CsvWriter waypoints({"kind", "index", "x", "y"});
        for (const PathKind kind :
             {PathKind::Linear, PathKind::Rectangular, PathKind::SawTooth}) {
            const PathPlan path = generate_waypoints(kind, start, back_ray, a, b, n);
            paths.add_row({to_string(kind), format_number(a), format_number(b),
                           std::to_string(n), format_number(path.total_length),
                           (rectangular_shortest && kind == PathKind::Rectangular) ? "1" : "0"});
            for (std::size_t i = 0; i < path.waypoints.size(); ++i)
                waypoints.add_row({to_string(kind), std::to_string(i),
                                   format_number(path.waypoints[i].x),
                                   format_number(path.waypoints[i].y)});
        }
        paths.write(joined(out_dir, "plan_paths.csv"));
        waypoints.write(joined(out_dir, "plan_waypoints.csv"));

        std::cout << "plan: " << plan.stations.size() << " stations, " << plan.beacon_count
                  << " beacons (step " << format_number(plan.step_size) << ", a/2 "
                  << format_number(plan.lateral_half_extent) << ") -> " << out_dir << "\n";
    });
}

int cmd_solve(const std::string& config_path, const std::string& obs_path,
              const std::string& out_dir) {
    return run_guarded([&] {
        const ScenarioConfig config = load_config(config_path);
        const ObservationsFile obs = load_observations(obs_path);
        if (obs.beacons.size() != config.beacons.size())
            throw ConfigError("observations file has " + std::to_string(obs.beacons.size()) +
                              " beacon observations for " + std::to_string(config.beacons.size()) +
                              " configured beacons");
        ensure_out_dir(out_dir);

        const Observation target_obs =
            resolve_sighting(obs.target, config.target_reference_size,
                             config.target_reference_distance, "target");
        std::vector<BeaconSpec> beacons;
        beacons.reserve(config.beacons.size());
        for (std::size_t i = 0; i < config.beacons.size(); ++i) {
            beacons.push_back(BeaconSpec{
                config.beacons[i],
                resolve_sighting(obs.beacons[i], config.beacon_reference_size,
                                 config.beacon_reference_distance, "beacon")});
        }

        SolveOptions options;
        if (config.reflector_size > 0.0) options.reflector_size = config.reflector_size;
        const SolveResult result = solve_sltr(config.observer, target_obs, beacons, options);

        const Pose2D solved_ref = result.reflector.line().point();
        const double target_error = distance(result.target, config.target);

        CsvWriter table({"experiment", "x_ref_true", "y_ref_true", "theta_ref_true_deg",
                         "x_tar_true", "y_tar_true", "x_ref_est", "y_ref_est",
                         "theta_ref_est_deg", "x_tar_est", "y_tar_est", "d1", "d2",
                         "residual_norm", "target_error"});
        table.add_row({experiment_id(config_path), format_number(config.reflector_point.x),
                       format_number(config.reflector_point.y),
                       format_number(config.reflector_orientation_deg),
                       format_number(config.target.x), format_number(config.target.y),
                       format_number(solved_ref.x), format_number(solved_ref.y),
                       format_number(degrees_from_radians(result.reflector.line().orientation())),
                       format_number(result.target.x), format_number(result.target.y),
                       format_number(result.d1), format_number(result.d2),
                       format_number(result.residual_norm), format_number(target_error)});
        table.write(joined(out_dir, "solve_results.csv"));

        std::cout << "solve: reflector (" << format_number(solved_ref.x) << ", "
                  << format_number(solved_ref.y) << ") at "
                  << format_number(degrees_from_radians(result.reflector.line().orientation()))
                  << " deg, target (" << format_number(result.target.x) << ", "
                  << format_number(result.target.y) << "), target error "
                  << format_number(target_error) << " -> " << out_dir << "\n";
    });
}

int cmd_simulate(const std::string& config_path, const std::string& out_dir,
                 const SimulateOverrides& overrides) {
    return run_guarded([&] {
        const ScenarioConfig config = load_config(config_path);
        if (config.noise_rows.empty())
            throw ConfigError("simulate requires at least one [noise] section");
        const Scenario scene = to_scenario(config);
        ensure_out_dir(out_dir);

        const int iterations = overrides.iterations.value_or(config.iterations);
        const std::uint64_t seed = overrides.seed.value_or(config.seed);

        const Observation target_obs = synthesize_observation(scene, scene.target_truth);
        const Pose2D true_ref = reflection_point(scene.reflector_truth.line(),
                                                 Ray{scene.observer, target_obs.bearing()});

        CsvWriter rmse({"sigma_bearing_deg", "sigma_range", "iterations", "failures",
                        "rmse_reflector", "rmse_target"});
        std::ostringstream scatter;

        for (std::size_t row = 0; row < config.noise_rows.size(); ++row) {
            const NoiseRow& cfg_row = config.noise_rows[row];
            const NoiseModel noise{radians_from_degrees(cfg_row.sigma_bearing_deg),
                                   cfg_row.sigma_range};
            const RmseReport report = run_monte_carlo(scene, noise, iterations, seed);

            rmse.add_row({format_number(cfg_row.sigma_bearing_deg),
                          format_number(cfg_row.sigma_range), std::to_string(report.iterations),
                          std::to_string(report.failures), format_number(report.rmse_reflector),
                          format_number(report.rmse_target)});

            if (row != 0) scatter << "\n\n";
            scatter << "# run " << row << ": sigma_bearing_deg="
                    << format_number(cfg_row.sigma_bearing_deg)
                    << " sigma_range=" << format_number(cfg_row.sigma_range) << "\n";
            scatter << "# columns: true_ref_x true_ref_y true_tar_x true_tar_y"
                       " solved_ref_x solved_ref_y solved_tar_x solved_tar_y\n";
            for (const IterationRecord& record : report.records) {
                if (!record.ok) continue;
                scatter << format_number(true_ref.x) << ' ' << format_number(true_ref.y) << ' '
                        << format_number(scene.target_truth.x) << ' '
                        << format_number(scene.target_truth.y) << ' '
                        << format_number(record.solved_reflection_point.x) << ' '
                        << format_number(record.solved_reflection_point.y) << ' '
                        << format_number(record.solved_target.x) << ' '
                        << format_number(record.solved_target.y) << '\n';
            }
        }

        rmse.write(joined(out_dir, "simulate_rmse.csv"));
        write_text(joined(out_dir, "simulate_scatter.dat"), scatter.str());

        std::cout << "simulate: " << config.noise_rows.size() << " noise rows x " << iterations
                  << " iterations (seed " << seed << ") -> " << out_dir << "\n";
    });
}

}  // namespace sltr::cli
