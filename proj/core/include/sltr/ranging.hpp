#pragma once

#include <optional>

#include "sltr/errors.hpp"
#include "sltr/geometry.hpp"

namespace sltr {

/// Size-constancy calibration: for a given object the product
/// (apparent size) x (distance) is constant, so one reference measurement
/// fixes the whole range scale. Sizes may be in cm or in pixel counts; the
/// library is unit-agnostic, but reference and observed sizes must use the
/// same unit -- mixing them is a caller error.
class SizeConstancy {
  public:
    SizeConstancy(double reference_size, double reference_distance)
        : reference_size_(reference_size), reference_distance_(reference_distance) {
        if (!(reference_size > 0.0)) throw NonPositiveInput("reference size must be > 0");
        if (!(reference_distance > 0.0)) throw NonPositiveInput("reference distance must be > 0");
        constant_ = reference_size_ * reference_distance_;
    }

    double reference_size() const { return reference_size_; }
    double reference_distance() const { return reference_distance_; }
    double constant() const { return constant_; }

  private:
    double reference_size_;
    double reference_distance_;
    double constant_;
};

inline SizeConstancy constancy_from_reference(double s_rfr, double d_rfr) {
    return SizeConstancy(s_rfr, d_rfr);
}

/// Range implied by an apparent size: constant / s_obj.
inline double estimate_range(double s_obj, const SizeConstancy& c) {
    if (!(s_obj > 0.0)) throw NonPositiveInput("apparent size must be > 0");
    return c.constant() / s_obj;
}

/// One reflected sighting: bearing of the arriving observation plus the
/// estimated total path length d_total. apparent_size is kept when the range
/// came from a size measurement.
class Observation {
  public:
    Observation(Bearing bearing, double estimated_range)
        : bearing_(bearing), estimated_range_(estimated_range) {
        if (!(estimated_range > 0.0)) throw NonPositiveInput("estimated range must be > 0");
    }

    static Observation from_apparent_size(Bearing bearing, double s_obj, const SizeConstancy& c) {
        Observation obs(bearing, estimate_range(s_obj, c));
        obs.apparent_size_ = s_obj;
        return obs;
    }

    Bearing bearing() const { return bearing_; }
    double estimated_range() const { return estimated_range_; }
    const std::optional<double>& apparent_size() const { return apparent_size_; }

  private:
    Bearing bearing_;
    double estimated_range_;
    std::optional<double> apparent_size_;
};

}  // namespace sltr
