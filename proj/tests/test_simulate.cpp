#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "sltr/random.hpp"
#include "sltr/simulate.hpp"

using namespace sltr;
using namespace sltr::testing;

namespace {

Scenario exp2_scene() {
    return Scenario{{0.0, 0.0},
                    ReflectorState(MirrorLine({15.5, 34.0}, 0.0), 18.2),
                    {23.5, 16.4},
                    {{18.2, 0.0}},
                    radians_from_degrees(5.0)};
}

}  // namespace

TEST_CASE("synthesize_observation reproduces the exp2 measurement") {
    const Scenario scene = exp2_scene();
    const Observation obs = synthesize_observation(scene, scene.target_truth);
    CHECK(obs.estimated_range() == doctest::Approx(56.7).epsilon(0.05 / 56.7));
    CHECK(obs.bearing().degrees() == doctest::Approx(65.5).epsilon(0.01));
}

TEST_CASE("observing the reflection point gives d_total = d1") {
    const Scenario scene = exp2_scene();
    const Pose2D reflection = scene.reflector_truth.line().point();
    const Observation obs = synthesize_observation(scene, reflection);
    CHECK(obs.estimated_range() ==
          doctest::Approx(distance(scene.observer, reflection)).epsilon(1e-12));
}

TEST_CASE("synthesize then localize recovers the point exactly") {
    std::mt19937 rng(61);
    for (int i = 0; i < 100; ++i) {
        const Scenario scene = random_scene(rng);
        const Observation obs = synthesize_observation(scene, scene.target_truth);
        const SolveResult result =
            localize_target(scene.observer, obs, scene.reflector_truth.line());
        CHECK(distance(result.target, scene.target_truth) < 1e-9);
    }
}

TEST_CASE("points without a one-bounce view are rejected") {
    const Scenario scene = exp2_scene();
    // Far to the side: the sight line to its virtual image misses the mirror.
    CHECK_THROWS_AS(synthesize_observation(scene, {70.0, 33.0}), RayMissesReflector);
}

TEST_CASE("zero noise gives zero RMSE") {
    const Scenario scene = exp2_scene();
    const RmseReport report = run_monte_carlo(scene, {0.0, 0.0}, 50, 123);
    CHECK(report.failures == 0);
    CHECK(report.rmse_reflector < 1e-12);
    CHECK(report.rmse_target < 1e-12);
}

TEST_CASE("monte carlo runs are deterministic per seed") {
    const Scenario scene = exp2_scene();
    const NoiseModel noise{radians_from_degrees(1.0), 0.2};
    const RmseReport a = run_monte_carlo(scene, noise, 40, 7);
    const RmseReport b = run_monte_carlo(scene, noise, 40, 7);
    CHECK(a.rmse_reflector == b.rmse_reflector);
    CHECK(a.rmse_target == b.rmse_target);
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        CHECK(a.records[i].ok == b.records[i].ok);
        if (a.records[i].ok) {
            CHECK(a.records[i].solved_target.x == b.records[i].solved_target.x);
            CHECK(a.records[i].solved_target.y == b.records[i].solved_target.y);
        }
    }

    const RmseReport c = run_monte_carlo(scene, noise, 40, 8);
    CHECK(a.rmse_target != c.rmse_target);
}

TEST_CASE("rmse decreases toward zero with the noise level") {
    const Scenario scene = exp2_scene();
    double previous_ref = -1.0;
    double previous_tar = -1.0;
    for (const double scale : {1e-2, 1e-4, 1e-6}) {
        const RmseReport report =
            run_monte_carlo(scene, {scale, scale}, 60, 99);
        if (previous_ref >= 0.0) {
            CHECK(report.rmse_reflector < previous_ref);
            CHECK(report.rmse_target < previous_tar);
        }
        previous_ref = report.rmse_reflector;
        previous_tar = report.rmse_target;
    }
}

TEST_CASE("rmse is monotone in range noise, averaged over seeds") {
    const Scenario scene = exp2_scene();
    const double sigma_bearing = radians_from_degrees(1.0);
    double previous_ref = -1.0;
    double previous_tar = -1.0;
    for (const double sigma_range : {0.05, 0.4, 1.6}) {
        double mean_ref = 0.0;
        double mean_tar = 0.0;
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const RmseReport report =
                run_monte_carlo(scene, {sigma_bearing, sigma_range}, 60, seed);
            mean_ref += report.rmse_reflector / 5.0;
            mean_tar += report.rmse_target / 5.0;
        }
        if (previous_ref >= 0.0) {
            CHECK(mean_ref >= previous_ref);
            CHECK(mean_tar >= previous_tar);
        }
        previous_ref = mean_ref;
        previous_tar = mean_tar;
    }
}

TEST_CASE("noisy runs land near the reference error scale") {
    // Observation at 70 deg with total path 5, mirror a fifth of the path:
    // under the first noise row the target RMSE sits within a factor of 3
    // of 0.10.
    const Bearing bearing(radians_from_degrees(70.0));
    const Pose2D reflection = bearing.unit() * 2.0;
    const MirrorLine line(reflection, radians_from_degrees(155.0));
    Scenario scene{{0.0, 0.0}, ReflectorState(line, 1.0),
                   reflection + reflect_bearing(bearing, line).unit() * 3.0,
                   {}, radians_from_degrees(5.0)};
    const Pose2D hit = reflection + line.direction() * (-0.15);
    const Bearing beacon_bearing = bearing_between(scene.observer, hit);
    scene.beacon_truths.push_back(hit + reflect_bearing(beacon_bearing, line).unit() * 14.0);

    const RmseReport report =
        run_monte_carlo(scene, {radians_from_degrees(1.73), 0.16}, 200, 1);
    CHECK(report.failures == 0);
    CHECK(report.rmse_target > 0.10 / 3.0);
    CHECK(report.rmse_target < 0.10 * 3.0);
    CHECK(report.rmse_reflector > 0.036 / 3.0);
    CHECK(report.rmse_reflector < 0.036 * 3.0);
}

TEST_CASE("failed iterations are counted and excluded") {
    // d2 of only 0.5 with violent range noise: many draws put d_total below d1.
    Scenario scene{{0.0, 0.0},
                   ReflectorState(MirrorLine({5.0, 0.0}, kPi / 2.0), 2.0),
                   {4.5, 0.0},
                   {},
                   radians_from_degrees(5.0)};
    scene.beacon_truths.push_back(
        reflect_point(virtual_point({0, 0}, Bearing(std::atan2(0.5, 5.0)), 7.0),
                      scene.reflector_truth.line()));

    const RmseReport report = run_monte_carlo(scene, {0.0, 2.0}, 200, 5);
    CHECK(report.failures > 0);
    CHECK(report.failures < report.iterations);
    CHECK(report.rmse_target > 0.0);
    CHECK(std::isfinite(report.rmse_target));
}

TEST_CASE("iteration count is validated") {
    CHECK_THROWS_AS(run_monte_carlo(exp2_scene(), {0.0, 0.0}, 0, 1), InvalidCount);
}

TEST_CASE("placement legs are untouched by bearing noise") {
    const Scenario scene = exp2_scene();
    const PlacementParams params = placement_params(scene);
    const double b = step_size(params);
    const double a2 = lateral_half_extent(params);

    GaussianSampler gaussian(3);
    for (int i = 0; i < 20; ++i) {
        PlacementParams noisy = params;
        noisy.alpha = Bearing(gaussian.next(params.alpha.radians(), radians_from_degrees(2.0)));
        // The noisy triangle translates and rotates with the ray, but its
        // leg lengths depend only on (s, epsilon).
        CHECK(step_size(noisy) == doctest::Approx(b).epsilon(1e-9));
        CHECK(lateral_half_extent(noisy) == doctest::Approx(a2).epsilon(1e-9));

        const PlacementPlan plan = build_plan(scene.observer, noisy);
        const BeaconSite& site = plan.stations.front().sites[0];
        CHECK(distance(site.triangle[0], site.triangle[1]) == doctest::Approx(b).epsilon(1e-9));
        CHECK(distance(site.triangle[0], site.triangle[2]) == doctest::Approx(a2).epsilon(1e-9));
    }
}
