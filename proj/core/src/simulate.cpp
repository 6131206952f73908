#include "sltr/simulate.hpp"

#include <cmath>

#include "sltr/random.hpp"

namespace sltr {

PlacementParams placement_params(const Scenario& scene) {
    const Observation target_obs = synthesize_observation(scene, scene.target_truth);
    return PlacementParams{target_obs.bearing(), target_obs.estimated_range(),
                           scene.reflector_truth.size(), scene.placement_epsilon};
}

Observation synthesize_observation(const Scenario& scene, const Pose2D& point) {
    const MirrorLine& line = scene.reflector_truth.line();
    const Pose2D virt = reflect_point(point, line);
    const Bearing bearing = bearing_between(scene.observer, virt);

    const auto hit = try_intersect(Ray{scene.observer, bearing}, line);
    if (!hit) throw RayMissesReflector("sight line is parallel to the reflector");
    if (hit->t_ray < 0.0) throw RayMissesReflector("reflector lies behind the observer");
    const double offset = distance(hit->point, scene.reflector_truth.line().point());
    if (offset > scene.reflector_truth.size() / 2.0)
        throw RayMissesReflector("one-bounce sight line falls outside the reflector extent");

    return Observation(bearing, distance(scene.observer, virt));
}

RmseReport run_monte_carlo(const Scenario& scene, const NoiseModel& noise, int iterations,
                           std::uint64_t seed) {
    if (iterations < 1) throw InvalidCount("iterations must be >= 1");

    const Observation target_truth_obs = synthesize_observation(scene, scene.target_truth);
    std::vector<Observation> beacon_truth_obs;
    beacon_truth_obs.reserve(scene.beacon_truths.size());
    for (const Pose2D& beacon : scene.beacon_truths)
        beacon_truth_obs.push_back(synthesize_observation(scene, beacon));

    const Pose2D reflection_truth = reflection_point(
        scene.reflector_truth.line(), Ray{scene.observer, target_truth_obs.bearing()});

    RmseReport report;
    report.iterations = iterations;
    report.records.reserve(static_cast<std::size_t>(iterations));

    double sum_sq_reflector = 0.0;
    double sum_sq_target = 0.0;
    int solved = 0;

    for (int i = 0; i < iterations; ++i) {
        GaussianSampler gaussian(GaussianSampler::derive_stream(seed, static_cast<std::uint64_t>(i)));

        IterationRecord record;
        record.target = {gaussian.next(target_truth_obs.bearing().radians(), noise.sigma_bearing),
                         gaussian.next(target_truth_obs.estimated_range(), noise.sigma_range)};
        record.beacons.reserve(scene.beacon_truths.size());
        for (std::size_t j = 0; j < scene.beacon_truths.size(); ++j) {
            record.beacons.push_back(
                {gaussian.next(beacon_truth_obs[j].bearing().radians(), noise.sigma_bearing),
                 gaussian.next(beacon_truth_obs[j].estimated_range(), noise.sigma_range)});
        }

        try {
            const Observation noisy_target(Bearing(record.target.bearing), record.target.range);
            std::vector<BeaconSpec> beacons;
            beacons.reserve(scene.beacon_truths.size());
            for (std::size_t j = 0; j < scene.beacon_truths.size(); ++j) {
                beacons.push_back(BeaconSpec{
                    scene.beacon_truths[j],
                    Observation(Bearing(record.beacons[j].bearing), record.beacons[j].range)});
            }

            const SolveResult result = solve_sltr(scene.observer, noisy_target, beacons);
            record.ok = true;
            record.solved_reflection_point = result.reflector.line().point();
            record.solved_target = result.target;

            const double err_reflector = distance(record.solved_reflection_point, reflection_truth);
            const double err_target = distance(record.solved_target, scene.target_truth);
            sum_sq_reflector += err_reflector * err_reflector;
            sum_sq_target += err_target * err_target;
            ++solved;
        } catch (const Error&) {
            ++report.failures;
        }
        report.records.push_back(std::move(record));
    }

    if (solved > 0) {
        report.rmse_reflector = std::sqrt(sum_sq_reflector / solved);
        report.rmse_target = std::sqrt(sum_sq_target / solved);
    }
    return report;
}

}  // namespace sltr
