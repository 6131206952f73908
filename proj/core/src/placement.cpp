#include "sltr/placement.hpp"

#include <cmath>

namespace sltr {

namespace {

void validate(const PlacementParams& params) {
    if (!(params.reflector_size > 0.0)) throw NonPositiveInput("reflector size must be > 0");
    if (!(params.d_total > 0.0)) throw NonPositiveInput("d_total must be > 0");
}

// Reflected line through the reflector edge C, at bearing alpha - 2*epsilon.
MirrorLine reflected_edge_line(const PlacementParams& params) {
    const Pose2D c = edge_point_C(params);
    return MirrorLine(c, params.alpha.radians() - 2.0 * params.epsilon);
}

// Stations needed to cover d_total > 0; tiny slack so exact multiples of
// the step do not round up through floating error.
int count_stations(double d_total, double step) {
    const double ratio = d_total / step;
    if (!(ratio < 1e8))
        throw Error("station count " + std::to_string(ratio) + " exceeds the supported range");
    const int n = static_cast<int>(std::ceil(ratio - 1e-9 * std::max(1.0, ratio)));
    return n < 1 ? 1 : n;
}

}  // namespace

Pose2D edge_point_C(const PlacementParams& params) {
    validate(params);
    const Pose2D r = params.alpha.unit() * params.d_total;
    const double theta_world = params.alpha.radians() - params.epsilon;
    const Pose2D along{std::cos(theta_world), std::sin(theta_world)};
    return r - along * (params.reflector_size / 2.0);
}

double step_size(const PlacementParams& params) {
    validate(params);
    if (params.epsilon <= kParallelTol)
        throw DegenerateEpsilon();

    const Pose2D r = params.alpha.unit() * params.d_total;
    const MirrorLine observation_line(Pose2D{0.0, 0.0}, params.alpha.radians());
    const auto hit = try_intersect(reflected_edge_line(params), observation_line);
    if (!hit) throw DegenerateEpsilon();
    return distance(*hit, r);
}

double lateral_half_extent(const PlacementParams& params) {
    validate(params);
    if (params.epsilon <= kParallelTol)
        throw DegenerateEpsilon();
    if (params.epsilon >= kPi / 4.0 - kParallelTol)
        throw DegenerateGeometry(
            "reflected edge line parallel to the perpendicular through R (epsilon >= 45 deg)");

    const Pose2D r = params.alpha.unit() * params.d_total;
    const MirrorLine perpendicular(r, params.alpha.radians() + kPi / 2.0);
    const auto hit = try_intersect(reflected_edge_line(params), perpendicular);
    if (!hit) throw DegenerateGeometry();
    return distance(*hit, r);
}

int beacon_count(double d_total, double step) {
    if (!(step > 0.0)) throw NonPositiveStep();
    if (d_total <= 0.0) return 0;
    return 2 * count_stations(d_total, step);
}

PlacementPlan build_plan(const Pose2D& obs, const PlacementParams& params) {
    PlacementPlan plan;
    plan.step_size = step_size(params);
    plan.lateral_half_extent = lateral_half_extent(params);

    const int n = count_stations(params.d_total, plan.step_size);
    plan.beacon_count = 2 * n;

    const Pose2D along = params.alpha.unit();
    const Pose2D across{-along.y, along.x};

    plan.stations.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        PlacementStation station;
        station.candidate = obs + along * (static_cast<double>(i) * plan.step_size);
        const Pose2D toward_obs = station.candidate - along * plan.step_size;
        for (int side = 0; side < 2; ++side) {
            const double sign = side == 0 ? 1.0 : -1.0;
            BeaconSite& site = station.sites[static_cast<std::size_t>(side)];
            site.triangle = {station.candidate, toward_obs,
                             station.candidate + across * (sign * plan.lateral_half_extent)};
            site.beacon = (site.triangle[0] + site.triangle[1] + site.triangle[2]) * (1.0 / 3.0);
        }
        plan.stations.push_back(station);
    }
    return plan;
}

}  // namespace sltr
