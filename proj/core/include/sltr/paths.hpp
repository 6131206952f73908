#pragma once

#include <vector>

#include "sltr/geometry.hpp"

namespace sltr {

/// Moving-beacon path families. All three visit both beacon sites of every
/// station; they differ in how they hop between stations.
enum class PathKind { Linear, Rectangular, SawTooth };

const char* to_string(PathKind kind);

/// A concrete polyline realization of one path family over n stations with
/// pair separation a and station spacing b.
struct PathPlan {
    PathKind kind{PathKind::Linear};
    std::vector<Pose2D> waypoints;
    double total_length{0.0};
    double a{0.0};
    double b{0.0};
    int n{0};
};

/// Closed-form path length over n stations:
///   Linear       a + 2*(n-1)*b
///   Rectangular  a + (n-1)*(a + b)
///   SawTooth     a + (n-1)*(a + sqrt(a^2 + b^2))
double path_length(PathKind kind, double a, double b, int n);

/// Build the polyline for a path family.
///
/// Stations advance by b per step in the direction opposite ray.direction,
/// starting at ray.origin; with the caller passing a ray that points from the
/// first station's reflection candidate back toward the observer, stations
/// run from nearest-to-observer outward and the prefix of the path is usable
/// as soon as the reflector is found. start must be one of the two beacon
/// sites of the first station; its partner sits a across the ray line.
PathPlan generate_waypoints(PathKind kind, const Pose2D& start, const Ray& ray, double a, double b,
                            int n);

}  // namespace sltr
