#pragma once

#include <stdexcept>
#include <string>

namespace sltr {

/// Base class for every domain error thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A ray does not hit the finite reflector segment (misses the extent,
/// or the hit would lie behind the ray origin).
struct RayMissesReflector : Error {
    RayMissesReflector() : Error("ray misses the finite reflector segment") {}
    explicit RayMissesReflector(const std::string& what) : Error(what) {}
};

/// Ray and line are parallel within tolerance; no intersection point.
struct RayParallel : Error {
    RayParallel() : Error("ray is parallel to the line") {}
    explicit RayParallel(const std::string& what) : Error(what) {}
};

/// An input that must be strictly positive was zero or negative.
struct NonPositiveInput : Error {
    NonPositiveInput() : Error("input must be > 0") {}
    explicit NonPositiveInput(const std::string& what) : Error(what) {}
};

/// Reflector tilt epsilon is zero (or below tolerance): the reflected edge
/// line is parallel to the observation line and the step size is undefined.
struct DegenerateEpsilon : Error {
    DegenerateEpsilon() : Error("degenerate epsilon: reflected edge line parallel to the observation line") {}
    explicit DegenerateEpsilon(const std::string& what) : Error(what) {}
};

/// The placement construction degenerates for these parameters (e.g. the
/// reflected edge line is parallel to the perpendicular through R).
struct DegenerateGeometry : Error {
    DegenerateGeometry() : Error("degenerate placement geometry") {}
    explicit DegenerateGeometry(const std::string& what) : Error(what) {}
};

/// Step size passed to beacon_count must be > 0.
struct NonPositiveStep : Error {
    NonPositiveStep() : Error("step size must be > 0") {}
    explicit NonPositiveStep(const std::string& what) : Error(what) {}
};

/// A count parameter (stations, samples) is below the allowed minimum.
struct InvalidCount : Error {
    InvalidCount() : Error("count must be >= 1") {}
    explicit InvalidCount(const std::string& what) : Error(what) {}
};

/// True and virtual beacon positions coincide: the beacon sits on the mirror
/// line and the perpendicular bisector is underdetermined.
struct DegenerateBeacon : Error {
    DegenerateBeacon() : Error("beacon lies on the mirror line; bisector underdetermined") {}
    explicit DegenerateBeacon(const std::string& what) : Error(what) {}
};

/// The ray-line intersection exists but lies behind the ray origin.
struct BehindObserver : Error {
    BehindObserver() : Error("intersection lies behind the observer") {}
    explicit BehindObserver(const std::string& what) : Error(what) {}
};

/// Measured total range is shorter than the observer-reflector leg.
struct RangeTooShort : Error {
    RangeTooShort() : Error("d_total is shorter than the observer-reflector distance") {}
    explicit RangeTooShort(const std::string& what) : Error(what) {}
};

/// solve_sltr was called with an empty beacon list.
struct NoBeacons : Error {
    NoBeacons() : Error("at least one beacon observation is required") {}
    explicit NoBeacons(const std::string& what) : Error(what) {}
};

/// The best mirror-line fit leaves a residual above the configured threshold:
/// the beacon observations do not agree on a single reflector.
struct Inconsistent : Error {
    Inconsistent() : Error("beacon observations are inconsistent with a single reflector") {}
    explicit Inconsistent(const std::string& what) : Error(what) {}
};

}  // namespace sltr
