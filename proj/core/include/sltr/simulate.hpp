#pragma once

#include <cstdint>
#include <vector>

#include "sltr/placement.hpp"
#include "sltr/solver.hpp"

namespace sltr {

/// Measurement noise: independent zero-mean Gaussians on the bearing and on
/// the estimated total range. Both are standard deviations in the
/// measurement's native units (radians, cm).
struct NoiseModel {
    double sigma_bearing{0.0};
    double sigma_range{0.0};
};

/// Ground-truth world for a Monte Carlo study. The reflector's anchor point
/// is the target's reflection point.
struct Scenario {
    Pose2D observer;
    ReflectorState reflector_truth;
    Pose2D target_truth;
    std::vector<Pose2D> beacon_truths;
    double placement_epsilon{radians_from_degrees(5.0)};
};

/// Placement inputs implied by the scenario truth (bearing and range of the
/// target observation, reflector size, epsilon).
PlacementParams placement_params(const Scenario& scene);

/// Noiseless observation of a point through the scenario's reflector:
/// bearing toward the virtual image and the true total path length.
/// Throws RayMissesReflector when the point has no one-bounce view.
Observation synthesize_observation(const Scenario& scene, const Pose2D& point);

/// Raw noisy measurement draw, before any validation.
struct NoisyMeasurement {
    double bearing{0.0};  // rad
    double range{0.0};    // cm
};

struct IterationRecord {
    bool ok{false};
    NoisyMeasurement target;
    std::vector<NoisyMeasurement> beacons;
    Pose2D solved_reflection_point;  // valid when ok
    Pose2D solved_target;            // valid when ok
};

struct RmseReport {
    int iterations{0};
    int failures{0};  // solver errors; excluded from the RMSE
    double rmse_reflector{0.0};
    double rmse_target{0.0};
    std::vector<IterationRecord> records;
};

/// Repeatedly perturb the target and beacon observations, solve, and collect
/// Euclidean RMSEs of the recovered reflection point and target.
/// Deterministic for a fixed seed: iteration i draws from an independent
/// substream derived from (seed, i), in the order target bearing, target
/// range, then bearing and range per beacon.
RmseReport run_monte_carlo(const Scenario& scene, const NoiseModel& noise, int iterations,
                           std::uint64_t seed);

}  // namespace sltr
