#include "sltr/paths.hpp"

#include <cmath>

namespace sltr {

namespace {

void validate(double a, double b, int n) {
    if (n < 1) throw InvalidCount("station count must be >= 1");
    if (!(a > 0.0)) throw NonPositiveInput("pair separation a must be > 0");
    if (!(b > 0.0)) throw NonPositiveInput("step size b must be > 0");
}

double polyline_length(const std::vector<Pose2D>& pts) {
    double total = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) total += distance(pts[i - 1], pts[i]);
    return total;
}

}  // namespace

const char* to_string(PathKind kind) {
    switch (kind) {
        case PathKind::Linear: return "linear";
        case PathKind::Rectangular: return "rectangular";
        case PathKind::SawTooth: return "saw_tooth";
    }
    return "unknown";
}

double path_length(PathKind kind, double a, double b, int n) {
    validate(a, b, n);
    const double steps = static_cast<double>(n - 1);
    switch (kind) {
        case PathKind::Linear: return a + 2.0 * steps * b;
        case PathKind::Rectangular: return a + steps * (a + b);
        case PathKind::SawTooth: return a + steps * (a + std::sqrt(a * a + b * b));
    }
    throw Error("unknown path kind");
}

PathPlan generate_waypoints(PathKind kind, const Pose2D& start, const Ray& ray, double a, double b,
                            int n) {
    validate(a, b, n);

    const Pose2D u = ray.direction.unit();
    const Pose2D advance = -u * b;  // station axis, opposite the ray
    const Pose2D left{-u.y, u.x};
    // The partner beacon lies across the ray line from start.
    const double offset = (start - ray.origin).dot(left);
    const Pose2D cross_step = left * (offset > 0.0 ? -a : a);

    std::vector<Pose2D> near(static_cast<std::size_t>(n));
    std::vector<Pose2D> far(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        near[static_cast<std::size_t>(i)] = start + advance * static_cast<double>(i);
        far[static_cast<std::size_t>(i)] = near[static_cast<std::size_t>(i)] + cross_step;
    }

    PathPlan plan;
    plan.kind = kind;
    plan.a = a;
    plan.b = b;
    plan.n = n;
    plan.waypoints.reserve(static_cast<std::size_t>(2 * n));

    switch (kind) {
        case PathKind::Linear:
            // Out along the start side, cross once, back along the other.
            for (int i = 0; i < n; ++i) plan.waypoints.push_back(near[static_cast<std::size_t>(i)]);
            for (int i = n - 1; i >= 0; --i) plan.waypoints.push_back(far[static_cast<std::size_t>(i)]);
            break;
        case PathKind::Rectangular:
            // Cross at each station, alternating which side moves forward.
            for (int i = 0; i < n; ++i) {
                const auto k = static_cast<std::size_t>(i);
                if (i % 2 == 0) {
                    plan.waypoints.push_back(near[k]);
                    plan.waypoints.push_back(far[k]);
                } else {
                    plan.waypoints.push_back(far[k]);
                    plan.waypoints.push_back(near[k]);
                }
            }
            break;
        case PathKind::SawTooth:
            // Cross at each station, diagonal hop back to the start side.
            for (int i = 0; i < n; ++i) {
                const auto k = static_cast<std::size_t>(i);
                plan.waypoints.push_back(near[k]);
                plan.waypoints.push_back(far[k]);
            }
            break;
    }

    plan.total_length = polyline_length(plan.waypoints);
    return plan;
}

}  // namespace sltr
