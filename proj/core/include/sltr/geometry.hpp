#pragma once

#include <array>
#include <cmath>
#include <optional>

#include "sltr/errors.hpp"

namespace sltr {

inline constexpr double kPi = 3.14159265358979323846;

/// Two lines are treated as parallel when |sin(angle between)| < this.
inline constexpr double kParallelTol = 1e-12;

inline constexpr double radians_from_degrees(double deg) { return deg * kPi / 180.0; }
inline constexpr double degrees_from_radians(double rad) { return rad * 180.0 / kPi; }

/// 2-D position (or displacement) in the world frame, in cm.
/// Coordinates are expected to be finite; nothing here introduces NaN/Inf.
struct Pose2D {
    double x{0.0};
    double y{0.0};

    constexpr Pose2D() = default;
    constexpr Pose2D(double x_, double y_) : x(x_), y(y_) {}

    constexpr Pose2D operator+(const Pose2D& r) const { return {x + r.x, y + r.y}; }
    constexpr Pose2D operator-(const Pose2D& r) const { return {x - r.x, y - r.y}; }
    constexpr Pose2D operator-() const { return {-x, -y}; }
    constexpr Pose2D operator*(double s) const { return {x * s, y * s}; }
    friend constexpr Pose2D operator*(double s, const Pose2D& p) { return {p.x * s, p.y * s}; }

    constexpr double dot(const Pose2D& r) const { return x * r.x + y * r.y; }
    /// z-component of the 2-D cross product.
    constexpr double cross(const Pose2D& r) const { return x * r.y - y * r.x; }
    double norm() const { return std::sqrt(x * x + y * y); }
};

inline double distance(const Pose2D& a, const Pose2D& b) { return (a - b).norm(); }

/// World-frame direction angle, kept normalized to (-pi, pi].
class Bearing {
  public:
    constexpr Bearing() = default;
    explicit Bearing(double rad) : value_(normalize(rad)) {}

    static Bearing from_degrees(double deg) { return Bearing(radians_from_degrees(deg)); }

    double radians() const { return value_; }
    double degrees() const { return degrees_from_radians(value_); }

    /// Unit direction vector (cos, sin).
    Pose2D unit() const { return {std::cos(value_), std::sin(value_)}; }

    /// Wrap into (-pi, pi].
    static double normalize(double rad) {
        double r = std::remainder(rad, 2.0 * kPi);
        if (r <= -kPi) r += 2.0 * kPi;
        return r;
    }

  private:
    double value_{0.0};
};

inline Bearing bearing_between(const Pose2D& from, const Pose2D& to) {
    return Bearing(std::atan2(to.y - from.y, to.x - from.x));
}

/// Half-line from an origin along a bearing.
struct Ray {
    Pose2D origin;
    Bearing direction;
};

/// Infinite line given by a point on it and an orientation in [0, pi).
/// Stored in point+angle form; all intersections are computed parametrically,
/// never through slopes, so vertical lines are not special.
class MirrorLine {
  public:
    MirrorLine() = default;
    MirrorLine(const Pose2D& point, double orientation)
        : point_(point), orientation_(canonicalize(orientation)) {}

    const Pose2D& point() const { return point_; }
    double orientation() const { return orientation_; }

    /// Unit vector along the line.
    Pose2D direction() const { return {std::cos(orientation_), std::sin(orientation_)}; }
    /// Unit normal (direction rotated +90 degrees).
    Pose2D normal() const { return {-std::sin(orientation_), std::cos(orientation_)}; }

    /// Signed distance of p from the line (positive on the normal side).
    double signed_distance(const Pose2D& p) const { return (p - point_).dot(normal()); }

    /// Wrap a line orientation into [0, pi).
    static double canonicalize(double rad) {
        double r = std::remainder(rad, kPi);
        if (r < 0.0) r += kPi;
        return r;
    }

  private:
    Pose2D point_;
    double orientation_{0.0};
};

/// Finite planar reflector: mirror line whose anchor point is the reflection
/// point R, plus a physical extent s centered on R.
class ReflectorState {
  public:
    ReflectorState(const MirrorLine& line, double size) : line_(line), size_(size) {
        if (!(size > 0.0)) throw NonPositiveInput("reflector size must be > 0");
    }

    const MirrorLine& line() const { return line_; }
    double size() const { return size_; }

    /// Segment endpoints R +/- (s/2) * direction.
    std::array<Pose2D, 2> endpoints() const {
        const Pose2D half = line_.direction() * (size_ / 2.0);
        return {line_.point() - half, line_.point() + half};
    }

  private:
    MirrorLine line_;
    double size_;
};

/// Parametric intersection of a ray with an infinite line.
/// t_ray is the distance from the ray origin (negative = behind),
/// t_line the signed offset from line.point() along line.direction().
struct LineHit {
    Pose2D point;
    double t_ray;
    double t_line;
};

/// Returns nullopt when the ray direction and the line are parallel
/// within kParallelTol.
std::optional<LineHit> try_intersect(const Ray& ray, const MirrorLine& line);

/// Intersection of two infinite lines; nullopt when parallel within tolerance.
std::optional<Pose2D> try_intersect(const MirrorLine& a, const MirrorLine& b);

/// Mirror image of p across the infinite line m. Involution: applying twice
/// returns p.
Pose2D reflect_point(const Pose2D& p, const MirrorLine& m);

/// Reflected direction of an incident bearing: 2*theta_ref - alpha.
Bearing reflect_bearing(Bearing incident, const MirrorLine& m);

/// Point at range d_total along bearing alpha from obs; this is where the
/// target appears to sit when seen through the mirror.
Pose2D virtual_point(const Pose2D& obs, Bearing alpha, double d_total);

struct PathSplit {
    double d1;       // observer -> reflection point
    double d2;       // reflection point -> target
    double d_total;  // d1 + d2
};

PathSplit path_split(const Pose2D& obs, const Pose2D& reflection, const Pose2D& target);

/// One-bounce forward model: intersect Ray(obs, alpha) with the finite
/// reflector, then walk d2 along the reflected bearing.
///
/// Throws RayParallel when the ray never crosses the mirror line, and
/// RayMissesReflector when the crossing lies behind obs or outside the
/// reflector extent.
Pose2D forward_target(const Pose2D& obs, Bearing alpha, const ReflectorState& reflector, double d2);

}  // namespace sltr
