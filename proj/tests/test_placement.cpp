#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "sltr/placement.hpp"

using namespace sltr;
using namespace sltr::testing;

namespace {

PlacementParams params_deg(double alpha_deg, double d_total, double size, double epsilon_deg) {
    return {Bearing::from_degrees(alpha_deg), d_total, size, radians_from_degrees(epsilon_deg)};
}

// Closed-form oracle for the leg lengths, derived in the frame where the
// observation line is the x axis: b = s / (4 cos e), a/2 = (s/2) sin e / cos 2e.
double oracle_step(double s, double eps) { return s / (4.0 * std::cos(eps)); }
double oracle_lateral(double s, double eps) {
    return (s / 2.0) * std::sin(eps) / std::cos(2.0 * eps);
}

// Independent line intersection in general (implicit) form, Cramer's rule.
Pose2D intersect_implicit(const Pose2D& p0, double ang0, const Pose2D& p1, double ang1) {
    const double a0 = std::sin(ang0), b0 = -std::cos(ang0);
    const double c0 = a0 * p0.x + b0 * p0.y;
    const double a1 = std::sin(ang1), b1 = -std::cos(ang1);
    const double c1 = a1 * p1.x + b1 * p1.y;
    const double det = a0 * b1 - a1 * b0;
    return {(c0 * b1 - c1 * b0) / det, (a0 * c1 - a1 * c0) / det};
}

// Signed-area point-in-triangle test (strictly inside).
bool strictly_inside(const Pose2D& p, const std::array<Pose2D, 3>& tri) {
    auto side = [&p](const Pose2D& a, const Pose2D& b) {
        return (b - a).cross(p - a);
    };
    const double s0 = side(tri[0], tri[1]);
    const double s1 = side(tri[1], tri[2]);
    const double s2 = side(tri[2], tri[0]);
    return (s0 > 0 && s1 > 0 && s2 > 0) || (s0 < 0 && s1 < 0 && s2 < 0);
}

}  // namespace

TEST_CASE("edge_point_C examples") {
    // epsilon = 0 keeps the reflector on the sight line: C = R - s/2 along it.
    const Pose2D c0 = edge_point_C({Bearing(0.0), 10.0, 2.0, 0.0});
    CHECK(distance(c0, {9.0, 0.0}) < 1e-12);

    // s -> 0 collapses C onto R.
    const Pose2D c1 = edge_point_C(params_deg(60.0, 10.0, 1e-300, 5.0));
    CHECK(distance(c1, Bearing::from_degrees(60.0).unit() * 10.0) < 1e-12);

    // Direct vector-arithmetic oracle.
    const PlacementParams p = params_deg(60.0, 10.0, 1.0, 5.0);
    const Pose2D r = Bearing::from_degrees(60.0).unit() * 10.0;
    const double theta_w = radians_from_degrees(55.0);
    const Pose2D expected = r - Pose2D{std::cos(theta_w), std::sin(theta_w)} * 0.5;
    CHECK(distance(edge_point_C(p), expected) < 1e-12);
}

TEST_CASE("step_size matches the closed form and an independent intersection") {
    const double eps = radians_from_degrees(5.0);
    const PlacementParams p = params_deg(60.0, 10.0, 1.0, 5.0);
    const double b = step_size(p);
    CHECK(b == doctest::Approx(oracle_step(1.0, eps)).epsilon(1e-12));

    // Same value from an implicit-form intersection written independently.
    const Pose2D r = Bearing::from_degrees(60.0).unit() * 10.0;
    const Pose2D c = edge_point_C(p);
    const Pose2D meet = intersect_implicit(c, radians_from_degrees(60.0 - 10.0), r,
                                           radians_from_degrees(60.0));
    CHECK(b == doctest::Approx(distance(meet, r)).epsilon(1e-12));

    // Identical across total distances.
    for (const double d : {5.0, 50.0, 500.0}) {
        CHECK(step_size(params_deg(60.0, d, 1.0, 5.0)) == doctest::Approx(b).epsilon(1e-12));
    }

    // Linear in the reflector size, vanishing with it.
    CHECK(step_size(params_deg(60.0, 10.0, 2.0, 5.0)) == doctest::Approx(2.0 * b).epsilon(1e-12));
    CHECK(step_size(params_deg(60.0, 10.0, 1e-12, 5.0)) < 1e-11);
}

TEST_CASE("lateral_half_extent matches the closed form") {
    const double eps = radians_from_degrees(5.0);
    const double a2 = lateral_half_extent(params_deg(60.0, 10.0, 1.0, 5.0));
    CHECK(a2 == doctest::Approx(oracle_lateral(1.0, eps)).epsilon(1e-12));

    for (const double d : {5.0, 50.0}) {
        CHECK(lateral_half_extent(params_deg(60.0, d, 1.0, 5.0)) ==
              doctest::Approx(a2).epsilon(1e-12));
    }

    // Vanishes with the reflector.
    CHECK(lateral_half_extent(params_deg(60.0, 10.0, 1e-12, 5.0)) < 1e-11);

    CHECK_THROWS_AS(lateral_half_extent(params_deg(60.0, 10.0, 1.0, 45.0)), DegenerateGeometry);
    CHECK_THROWS_AS(lateral_half_extent(params_deg(60.0, 10.0, 1.0, 60.0)), DegenerateGeometry);
}

TEST_CASE("vertical observation line is not special") {
    // Slope-form intersections blow up at alpha = 90 deg; the parametric
    // form must not.
    const double eps = radians_from_degrees(5.0);
    const double b = step_size(params_deg(90.0, 10.0, 1.0, 5.0));
    const double a2 = lateral_half_extent(params_deg(90.0, 10.0, 1.0, 5.0));
    CHECK(b == doctest::Approx(oracle_step(1.0, eps)).epsilon(1e-12));
    CHECK(a2 == doctest::Approx(oracle_lateral(1.0, eps)).epsilon(1e-12));

    const PlacementPlan plan = build_plan({3.0, -2.0}, params_deg(90.0, 2.0, 1.0, 5.0));
    for (const PlacementStation& station : plan.stations)
        CHECK(station.candidate.x == doctest::Approx(3.0));
}

TEST_CASE("degenerate epsilon raises") {
    CHECK_THROWS_AS(step_size(params_deg(60.0, 10.0, 1.0, 0.0)), DegenerateEpsilon);
    CHECK_THROWS_AS(step_size({Bearing(1.0), 10.0, 1.0, 1e-13}), DegenerateEpsilon);
    CHECK_THROWS_AS(lateral_half_extent(params_deg(60.0, 10.0, 1.0, 0.0)), DegenerateEpsilon);
}

TEST_CASE("beacon_count rounding") {
    CHECK(beacon_count(10.0, 2.0) == 10);
    CHECK(beacon_count(10.0, 3.0) == 8);
    CHECK(beacon_count(0.0, 3.0) == 0);
    CHECK_THROWS_AS(beacon_count(10.0, 0.0), NonPositiveStep);
    CHECK_THROWS_AS(beacon_count(10.0, -1.0), NonPositiveStep);
}

TEST_CASE("build_plan station layout") {
    std::mt19937 rng(11);
    const Pose2D obs{2.0, -3.0};
    const PlacementParams probe = params_deg(40.0, 1.0, 2.5, 7.0);
    const double b = step_size(probe);

    // Exactly three steps of coverage.
    PlacementParams p = probe;
    p.d_total = 3.0 * b;
    const PlacementPlan plan = build_plan(obs, p);
    CHECK(plan.stations.size() == 3);
    CHECK(plan.beacon_count == 6);
    CHECK(plan.beacon_count == beacon_count(p.d_total, plan.step_size));

    const Pose2D along = p.alpha.unit();
    for (std::size_t i = 0; i < plan.stations.size(); ++i) {
        const PlacementStation& station = plan.stations[i];
        // Spacing is exactly one step along the ray.
        const double expected_d = static_cast<double>(i + 1) * plan.step_size;
        CHECK(distance(station.candidate, obs + along * expected_d) < 1e-9);

        const MirrorLine sight(obs, p.alpha.radians());
        const double side0 = sight.signed_distance(station.sites[0].beacon);
        const double side1 = sight.signed_distance(station.sites[1].beacon);
        CHECK(side0 * side1 < 0.0);  // opposite sides of the observation line

        for (const BeaconSite& site : station.sites)
            CHECK(strictly_inside(site.beacon, site.triangle));
    }
}

TEST_CASE("beacon_count agrees with emitted stations for random parameters") {
    std::mt19937 rng(12);
    for (int i = 0; i < 50; ++i) {
        const PlacementParams p{Bearing(uniform(rng, -kPi, kPi)), uniform(rng, 0.5, 30.0),
                                uniform(rng, 0.2, 5.0),
                                uniform(rng, radians_from_degrees(1.0), radians_from_degrees(40.0))};
        const PlacementPlan plan = build_plan({0, 0}, p);
        CHECK(plan.beacon_count == beacon_count(p.d_total, plan.step_size));
        CHECK(plan.beacon_count == 2 * static_cast<int>(plan.stations.size()));
        CHECK(plan.beacon_count % 2 == 0);
        CHECK(plan.beacon_count >= 2);
    }
}

TEST_CASE("leg lengths are independent of total distance and rotation") {
    std::mt19937 rng(13);
    for (int i = 0; i < 50; ++i) {
        const double alpha = uniform(rng, -kPi, kPi);
        const double s = uniform(rng, 0.2, 5.0);
        const double eps = uniform(rng, radians_from_degrees(1.0), radians_from_degrees(40.0));

        const double b_ref = step_size({Bearing(alpha), 1.0, s, eps});
        const double a2_ref = lateral_half_extent({Bearing(alpha), 1.0, s, eps});
        for (const double d : {5.0, 50.0, 500.0}) {
            CHECK(step_size({Bearing(alpha), d, s, eps}) ==
                  doctest::Approx(b_ref).epsilon(1e-9));
            CHECK(lateral_half_extent({Bearing(alpha), d, s, eps}) ==
                  doctest::Approx(a2_ref).epsilon(1e-9));
        }

        const double rotated = alpha + uniform(rng, -kPi, kPi);
        CHECK(step_size({Bearing(rotated), 10.0, s, eps}) ==
              doctest::Approx(b_ref).epsilon(1e-9));
        CHECK(lateral_half_extent({Bearing(rotated), 10.0, s, eps}) ==
              doctest::Approx(a2_ref).epsilon(1e-9));

        // Both legs scale linearly in s and vanish with it.
        CHECK(step_size({Bearing(alpha), 10.0, 2.0 * s, eps}) ==
              doctest::Approx(2.0 * b_ref).epsilon(1e-9));
        CHECK(lateral_half_extent({Bearing(alpha), 10.0, 2.0 * s, eps}) ==
              doctest::Approx(2.0 * a2_ref).epsilon(1e-9));
    }
}
