#pragma once

#include <cmath>
#include <random>

#include "sltr/simulate.hpp"

namespace sltr::testing {

inline double uniform(std::mt19937& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Absolute difference between two line orientations, mod pi.
inline double orientation_diff(double a, double b) {
    return std::abs(std::remainder(a - b, kPi));
}

/// Absolute difference between two bearings, mod 2*pi.
inline double bearing_diff(double a, double b) {
    return std::abs(std::remainder(a - b, 2.0 * kPi));
}

inline MirrorLine random_line(std::mt19937& rng) {
    return MirrorLine({uniform(rng, -10.0, 10.0), uniform(rng, -10.0, 10.0)},
                      uniform(rng, 0.0, kPi));
}

inline Pose2D random_point(std::mt19937& rng, double extent = 10.0) {
    return {uniform(rng, -extent, extent), uniform(rng, -extent, extent)};
}

/// A random valid one-bounce world: observer, finite reflector, target and
/// beacons that all see the reflector well inside its extent and away from
/// grazing incidence. By construction the target's reflection point is the
/// reflector anchor.
inline Scenario random_scene(std::mt19937& rng, int beacon_count = 1) {
    const Pose2D obs = random_point(rng, 5.0);
    const double alpha = uniform(rng, -kPi, kPi);
    const Bearing bearing(alpha);
    const double d1 = uniform(rng, 2.0, 6.0);
    const Pose2D reflection = obs + bearing.unit() * d1;

    // Keep the mirror at least 20 degrees away from the sight line.
    const double tilt = uniform(rng, radians_from_degrees(20.0), radians_from_degrees(160.0));
    const MirrorLine line(reflection, alpha + tilt);
    const double size = uniform(rng, 1.0, 4.0);
    const double d2 = uniform(rng, 1.0, 5.0);
    const Pose2D target = reflection + reflect_bearing(bearing, line).unit() * d2;

    Scenario scene{obs, ReflectorState(line, size), target, {}, radians_from_degrees(5.0)};
    for (int j = 0; j < beacon_count; ++j) {
        const double offset = uniform(rng, -0.4, 0.4) * (size / 2.0);
        const Pose2D hit = reflection + line.direction() * offset;
        const Bearing beacon_bearing = bearing_between(obs, hit);
        const double d2b = uniform(rng, 1.0, 4.0);
        scene.beacon_truths.push_back(hit + reflect_bearing(beacon_bearing, line).unit() * d2b);
    }
    return scene;
}

/// Beacon specs with exact (noiseless) observations for a scene.
inline std::vector<BeaconSpec> exact_beacons(const Scenario& scene) {
    std::vector<BeaconSpec> beacons;
    beacons.reserve(scene.beacon_truths.size());
    for (const Pose2D& p : scene.beacon_truths)
        beacons.push_back(BeaconSpec{p, synthesize_observation(scene, p)});
    return beacons;
}

}  // namespace sltr::testing
