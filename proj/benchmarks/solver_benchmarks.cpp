#include <benchmark/benchmark.h>

#include "sltr/placement.hpp"
#include "sltr/simulate.hpp"
#include "sltr/solver.hpp"

namespace {

using namespace sltr;

Scenario bench_scene() {
    const Bearing bearing(radians_from_degrees(70.0));
    const Pose2D reflection = bearing.unit() * 2.0;
    const MirrorLine line(reflection, radians_from_degrees(155.0));
    Scenario scene{{0, 0}, ReflectorState(line, 1.0),
                   reflection + reflect_bearing(bearing, line).unit() * 3.0,
                   {}, radians_from_degrees(5.0)};
    const Pose2D hit = reflection + line.direction() * (-0.15);
    const Bearing beacon_bearing = bearing_between(scene.observer, hit);
    scene.beacon_truths.push_back(hit + reflect_bearing(beacon_bearing, line).unit() * 14.0);
    return scene;
}

std::vector<BeaconSpec> bench_beacons(const Scenario& scene) {
    std::vector<BeaconSpec> beacons;
    for (const Pose2D& p : scene.beacon_truths)
        beacons.push_back(BeaconSpec{p, synthesize_observation(scene, p)});
    return beacons;
}

void BM_ReflectPoint(benchmark::State& state) {
    const MirrorLine m({27.5, 65.0}, radians_from_degrees(38.0));
    Pose2D p{32.0, 62.5};
    for (auto _ : state) {
        p = reflect_point(p, m);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_ReflectPoint);

void BM_SolveClosedForm(benchmark::State& state) {
    const Scenario scene = bench_scene();
    const Observation target_obs = synthesize_observation(scene, scene.target_truth);
    const auto beacons = bench_beacons(scene);
    for (auto _ : state) {
        const SolveResult result = solve_sltr(scene.observer, target_obs, beacons);
        benchmark::DoNotOptimize(result.target);
    }
}
BENCHMARK(BM_SolveClosedForm);

void BM_SolveGridSweep(benchmark::State& state) {
    const Scenario scene = bench_scene();
    const Observation target_obs = synthesize_observation(scene, scene.target_truth);
    const auto beacons = bench_beacons(scene);
    const GridOptions grid{step_size(placement_params(scene)), radians_from_degrees(0.5)};
    for (auto _ : state) {
        const SolveResult result = solve_grid(scene.observer, target_obs, beacons, grid);
        benchmark::DoNotOptimize(result.target);
    }
}
BENCHMARK(BM_SolveGridSweep);

void BM_BuildPlan(benchmark::State& state) {
    const Scenario scene = bench_scene();
    const PlacementParams params = placement_params(scene);
    for (auto _ : state) {
        const PlacementPlan plan = build_plan(scene.observer, params);
        benchmark::DoNotOptimize(plan.beacon_count);
    }
}
BENCHMARK(BM_BuildPlan);

void BM_MonteCarlo200(benchmark::State& state) {
    const Scenario scene = bench_scene();
    const NoiseModel noise{radians_from_degrees(1.73), 0.16};
    for (auto _ : state) {
        const RmseReport report = run_monte_carlo(scene, noise, 200, 1);
        benchmark::DoNotOptimize(report.rmse_target);
    }
}
BENCHMARK(BM_MonteCarlo200);

}  // namespace

BENCHMARK_MAIN();
