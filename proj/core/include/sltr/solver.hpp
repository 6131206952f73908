#pragma once

#include <array>
#include <optional>
#include <span>

#include "sltr/geometry.hpp"
#include "sltr/ranging.hpp"

namespace sltr {

/// A beacon: accurately known true position plus its reflected observation
/// (bearing alpha_bea and total path length d_total_bea as seen from the
/// observer).
struct BeaconSpec {
    Pose2D position;
    Observation observation;
};

enum class SolveMethod { ClosedForm, GridOracle };

struct SolveResult {
    ReflectorState reflector;  // line anchored at the target's reflection point
    Pose2D target;
    double d1{0.0};
    double d2{0.0};
    double residual_norm{0.0};
    SolveMethod method{SolveMethod::ClosedForm};
};

struct SolveOptions {
    /// Physical reflector size when known. When unset the solved extent is
    /// derived from the geometry actually used (it covers every beacon hit,
    /// with a fifth of the path length as the floor).
    std::optional<double> reflector_size;
    /// Reject the fit as Inconsistent when the residual norm exceeds this
    /// fraction of the target's d_total.
    double inconsistency_threshold{0.05};
};

/// The mirror line implied by a single beacon: the perpendicular bisector of
/// the segment from the true beacon position to its virtual image at range
/// d_total_bea along alpha_bea. One beacon fixes both the line and its
/// orientation.
MirrorLine mirror_from_beacon(const Pose2D& obs, const BeaconSpec& beacon);

/// Ray-mirror intersection; the reflection point R = (x_ref, y_ref).
/// Throws RayParallel or BehindObserver.
Pose2D reflection_point(const MirrorLine& m, const Ray& ray);

/// Place the target given a known mirror line: the virtual point at
/// d_total along the bearing, reflected back across the line.
/// reflector_size <= 0 means "unknown"; see SolveOptions::reflector_size.
SolveResult localize_target(const Pose2D& obs, const Observation& target_obs, const MirrorLine& m,
                            double reflector_size = 0.0);

/// Per-beacon consistency of a candidate reflector: differences between the
/// predicted beacon position (x, y) and its given position, plus the
/// predicted-minus-given total path length. Zero at the true reflector on
/// noiseless data.
using ResidualVector = std::array<double, 3>;
ResidualVector residual(const ReflectorState& candidate, const Pose2D& obs,
                        const BeaconSpec& beacon);

/// Recover the reflector and localize the target.
///
/// One beacon: closed form through mirror_from_beacon. Two or more: damped
/// Gauss-Newton over (distance along the target ray, orientation),
/// minimizing the stacked beacon residuals, initialized from the first
/// beacon's closed form. Throws Inconsistent when the best fit leaves a
/// residual above the configured threshold.
SolveResult solve_sltr(const Pose2D& obs, const Observation& target_obs,
                       std::span<const BeaconSpec> beacons, const SolveOptions& options = {});

struct GridOptions {
    double step{0.0};                              // candidate spacing along the ray (b = delta d)
    double theta_step{radians_from_degrees(0.5)};  // orientation grid, rad
};

/// Brute-force sweep over reflection-point candidates spaced `step` along the
/// target ray crossed with an orientation grid, keeping the cell with the
/// smallest residual norm (ties broken by lowest cell index). Serves as the
/// independent verification path for solve_sltr.
SolveResult solve_grid(const Pose2D& obs, const Observation& target_obs,
                       std::span<const BeaconSpec> beacons, const GridOptions& grid,
                       const SolveOptions& options = {});

}  // namespace sltr
