#pragma once

#include <array>
#include <vector>

#include "sltr/geometry.hpp"

namespace sltr {

/// Inputs of the beacon-placement construction. epsilon is the largest
/// reflector tilt (radians) considered relative to the observation line;
/// the operations expect 0 < epsilon < pi/4 and report the degenerate cases
/// outside that range.
struct PlacementParams {
    Bearing alpha;          // target observation bearing
    double d_total{0.0};    // total estimated path length, cm
    double reflector_size{0.0};  // s, cm
    double epsilon{0.0};    // max tilt from the observation line, rad
};

/// One beacon position together with the triangular region it was chosen
/// from (right angle at the reflection-point candidate).
struct BeaconSite {
    Pose2D beacon;
    std::array<Pose2D, 3> triangle;
};

/// Reflection-point candidate R_i and its two beacon sites, one on each
/// side of the observation line.
struct PlacementStation {
    Pose2D candidate;
    std::array<BeaconSite, 2> sites;
};

struct PlacementPlan {
    double step_size{0.0};           // b
    double lateral_half_extent{0.0}; // a/2
    int beacon_count{0};             // 2 * station count
    std::vector<PlacementStation> stations;
};

/// Edge C of the reflector tilted epsilon from the observation line:
/// C = R - (s/2) * unit(alpha - epsilon), with R at d_total along alpha
/// from an observer at the origin of the working frame.
Pose2D edge_point_C(const PlacementParams& params);

/// Step size b: distance from R to where the line through C at bearing
/// alpha - 2*epsilon crosses the observation line.
/// Independent of d_total; scales linearly with reflector size.
double step_size(const PlacementParams& params);

/// Half the lateral extent a/2: distance from R to where the reflected edge
/// line crosses the perpendicular to the observation line through R.
/// Degenerates when epsilon reaches 45 degrees (the two lines go parallel).
double lateral_half_extent(const PlacementParams& params);

/// Beacons needed to cover d_total at the given step: 2 * ceil(d/step).
int beacon_count(double d_total, double step);

/// Full placement: stations at i*step along the observation ray from obs,
/// each with a mirrored pair of region triangles (legs b toward the observer
/// and a/2 across the ray) and one beacon per side at the triangle centroid.
PlacementPlan build_plan(const Pose2D& obs, const PlacementParams& params);

}  // namespace sltr
