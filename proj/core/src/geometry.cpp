#include "sltr/geometry.hpp"

namespace sltr {

std::optional<LineHit> try_intersect(const Ray& ray, const MirrorLine& line) {
    const Pose2D u = ray.direction.unit();
    const Pose2D w = line.direction();
    const double denom = u.cross(w);  // sin of the angle between unit vectors
    if (std::abs(denom) < kParallelTol) return std::nullopt;

    const Pose2D delta = line.point() - ray.origin;
    const double t_ray = delta.cross(w) / denom;
    const double t_line = delta.cross(u) / denom;
    return LineHit{ray.origin + u * t_ray, t_ray, t_line};
}

std::optional<Pose2D> try_intersect(const MirrorLine& a, const MirrorLine& b) {
    const Pose2D u = a.direction();
    const Pose2D w = b.direction();
    const double denom = u.cross(w);
    if (std::abs(denom) < kParallelTol) return std::nullopt;

    const Pose2D delta = b.point() - a.point();
    const double t = delta.cross(w) / denom;
    return a.point() + u * t;
}

Pose2D reflect_point(const Pose2D& p, const MirrorLine& m) {
    const Pose2D n = m.normal();
    const double d = (p - m.point()).dot(n);
    return p - n * (2.0 * d);
}

Bearing reflect_bearing(Bearing incident, const MirrorLine& m) {
    return Bearing(2.0 * m.orientation() - incident.radians());
}

Pose2D virtual_point(const Pose2D& obs, Bearing alpha, double d_total) {
    return obs + alpha.unit() * d_total;
}

PathSplit path_split(const Pose2D& obs, const Pose2D& reflection, const Pose2D& target) {
    const double d1 = distance(obs, reflection);
    const double d2 = distance(target, reflection);
    return {d1, d2, d1 + d2};
}

Pose2D forward_target(const Pose2D& obs, Bearing alpha, const ReflectorState& reflector, double d2) {
    const auto hit = try_intersect(Ray{obs, alpha}, reflector.line());
    if (!hit) throw RayParallel("observation ray is parallel to the reflector");
    if (hit->t_ray < 0.0) throw RayMissesReflector("reflector lies behind the observer");
    if (std::abs(hit->t_line) > reflector.size() / 2.0)
        throw RayMissesReflector("observation ray passes outside the reflector extent");

    return hit->point + reflect_bearing(alpha, reflector.line()).unit() * d2;
}

}  // namespace sltr
