#include "sltr/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace sltr {

namespace {

constexpr double kCoincidentTol = 1e-9;
constexpr double kDerivedSizeRatio = 0.2;  // solved extent floor when the size is unknown

// Residual against an infinite candidate line; used by the fit and the grid,
// where the extent is one of the things still being decided. Returns nullopt
// when the beacon ray cannot hit the candidate (parallel or behind).
std::optional<ResidualVector> line_residual(const MirrorLine& line, const Pose2D& obs,
                                            const BeaconSpec& beacon) {
    const auto hit = try_intersect(Ray{obs, beacon.observation.bearing()}, line);
    if (!hit || hit->t_ray < 0.0) return std::nullopt;

    const double d1 = hit->t_ray;
    const double d2 = distance(beacon.position, hit->point);
    const Pose2D predicted =
        hit->point + reflect_bearing(beacon.observation.bearing(), line).unit() * d2;
    return ResidualVector{predicted.x - beacon.position.x, predicted.y - beacon.position.y,
                          (d1 + d2) - beacon.observation.estimated_range()};
}

double squared_norm(const ResidualVector& r) { return r[0] * r[0] + r[1] * r[1] + r[2] * r[2]; }

// Sum of squared residuals over all beacons; infinity when any beacon ray
// cannot reach the candidate line.
double objective(const MirrorLine& line, const Pose2D& obs, std::span<const BeaconSpec> beacons) {
    double total = 0.0;
    for (const BeaconSpec& beacon : beacons) {
        const auto r = line_residual(line, obs, beacon);
        if (!r) return std::numeric_limits<double>::infinity();
        total += squared_norm(*r);
    }
    return total;
}

MirrorLine line_at(const Pose2D& obs, const Bearing& target_bearing, double d, double theta) {
    return MirrorLine(obs + target_bearing.unit() * d, theta);
}

// Damped Gauss-Newton over (d, theta) with a numeric Jacobian. The problem
// is two-dimensional and smooth near the initializer, so a handful of
// iterations suffices; steps that leave the valid region are rejected by the
// infinite objective.
void refine_fit(const Pose2D& obs, const Bearing& target_bearing,
                std::span<const BeaconSpec> beacons, double& d, double& theta) {
    auto eval = [&](double dd, double th) {
        return objective(line_at(obs, target_bearing, dd, th), obs, beacons);
    };

    double f = eval(d, theta);
    if (!std::isfinite(f)) return;

    double lambda = 1e-3;
    for (int iter = 0; iter < 60; ++iter) {
        if (f < 1e-24) break;

        const std::size_t m = beacons.size() * 3;
        std::vector<double> r0(m), jd(m), jt(m);
        {
            const MirrorLine line = line_at(obs, target_bearing, d, theta);
            std::size_t k = 0;
            for (const BeaconSpec& beacon : beacons) {
                const auto r = line_residual(line, obs, beacon);
                if (!r) return;
                for (double v : *r) r0[k++] = v;
            }
        }
        const double hd = 1e-6 * std::max(1.0, std::abs(d));
        const double ht = 1e-7;
        auto stack = [&](double dd, double th, std::vector<double>& out) {
            const MirrorLine line = line_at(obs, target_bearing, dd, th);
            std::size_t k = 0;
            for (const BeaconSpec& beacon : beacons) {
                const auto r = line_residual(line, obs, beacon);
                if (!r) return false;
                for (double v : *r) out[k++] = v;
            }
            return true;
        };
        std::vector<double> plus(m), minus(m);
        if (!stack(d + hd, theta, plus) || !stack(d - hd, theta, minus)) return;
        for (std::size_t i = 0; i < m; ++i) jd[i] = (plus[i] - minus[i]) / (2.0 * hd);
        if (!stack(d, theta + ht, plus) || !stack(d, theta - ht, minus)) return;
        for (std::size_t i = 0; i < m; ++i) jt[i] = (plus[i] - minus[i]) / (2.0 * ht);

        // Normal equations of the 2-parameter least squares.
        double a11 = 0.0, a12 = 0.0, a22 = 0.0, g1 = 0.0, g2 = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            a11 += jd[i] * jd[i];
            a12 += jd[i] * jt[i];
            a22 += jt[i] * jt[i];
            g1 += jd[i] * r0[i];
            g2 += jt[i] * r0[i];
        }

        bool accepted = false;
        for (int attempt = 0; attempt < 12; ++attempt) {
            const double b11 = a11 + lambda * (1.0 + a11);
            const double b22 = a22 + lambda * (1.0 + a22);
            const double det = b11 * b22 - a12 * a12;
            if (det == 0.0) {
                lambda *= 10.0;
                continue;
            }
            const double step_d = -(b22 * g1 - a12 * g2) / det;
            const double step_t = -(b11 * g2 - a12 * g1) / det;
            const double f_new = eval(d + step_d, theta + step_t);
            if (f_new < f) {
                d += step_d;
                theta += step_t;
                f = f_new;
                lambda = std::max(lambda / 3.0, 1e-12);
                accepted = true;
                const double scale = std::max(1.0, std::abs(d));
                if (std::abs(step_d) < 1e-12 * scale && std::abs(step_t) < 1e-12) return;
                break;
            }
            lambda *= 10.0;
        }
        if (!accepted) return;
    }
}

// Reported fit quality: sqrt of the summed squared beacon residuals.
double residual_norm_at(const MirrorLine& line, const Pose2D& obs,
                        std::span<const BeaconSpec> beacons) {
    const double f = objective(line, obs, beacons);
    return std::isfinite(f) ? std::sqrt(f) : std::numeric_limits<double>::infinity();
}

// Extent for the solved reflector when no physical size is supplied: cover
// every beacon hit on the line, floored at a fraction of the path length.
double derived_size(const MirrorLine& line, const Pose2D& obs, const Observation& target_obs,
                    std::span<const BeaconSpec> beacons, const Pose2D& reflection) {
    double max_offset = 0.0;
    for (const BeaconSpec& beacon : beacons) {
        const auto hit = try_intersect(Ray{obs, beacon.observation.bearing()}, line);
        if (!hit) continue;
        max_offset = std::max(max_offset, distance(hit->point, reflection));
    }
    return std::max(2.0 * max_offset * (1.0 + 1e-9),
                    kDerivedSizeRatio * target_obs.estimated_range());
}

SolveResult finish(const Pose2D& obs, const Observation& target_obs,
                   std::span<const BeaconSpec> beacons, const MirrorLine& line,
                   const SolveOptions& options, SolveMethod method, bool enforce_consistency) {
    const double norm = residual_norm_at(line, obs, beacons);
    if (enforce_consistency &&
        !(norm <= options.inconsistency_threshold * target_obs.estimated_range()))
        throw Inconsistent("beacon residual norm " + std::to_string(norm) +
                           " exceeds threshold; observations disagree on the reflector");

    SolveResult result = localize_target(obs, target_obs, line,
                                         options.reflector_size.value_or(0.0));
    if (!options.reflector_size) {
        const MirrorLine& solved = result.reflector.line();
        result.reflector = ReflectorState(
            solved, derived_size(solved, obs, target_obs, beacons, solved.point()));
    }
    result.residual_norm = norm;
    result.method = method;
    return result;
}

}  // namespace

MirrorLine mirror_from_beacon(const Pose2D& obs, const BeaconSpec& beacon) {
    const Pose2D virt =
        virtual_point(obs, beacon.observation.bearing(), beacon.observation.estimated_range());
    const Pose2D chord = virt - beacon.position;
    if (chord.norm() < kCoincidentTol)
        throw DegenerateBeacon();

    const Pose2D midpoint = (virt + beacon.position) * 0.5;
    const double orientation = std::atan2(chord.y, chord.x) + kPi / 2.0;
    return MirrorLine(midpoint, orientation);
}

Pose2D reflection_point(const MirrorLine& m, const Ray& ray) {
    const auto hit = try_intersect(ray, m);
    if (!hit) throw RayParallel("observation ray is parallel to the mirror line");
    if (hit->t_ray < 0.0) throw BehindObserver();
    return hit->point;
}

SolveResult localize_target(const Pose2D& obs, const Observation& target_obs, const MirrorLine& m,
                            double reflector_size) {
    const Ray ray{obs, target_obs.bearing()};
    const Pose2D reflection = reflection_point(m, ray);
    const double d1 = distance(obs, reflection);
    const double d_total = target_obs.estimated_range();
    if (d_total < d1)
        throw RangeTooShort("d_total " + std::to_string(d_total) + " < d1 " + std::to_string(d1));

    const Pose2D virt = virtual_point(obs, target_obs.bearing(), d_total);
    const Pose2D target = reflect_point(virt, m);
    const double d2 = d_total - d1;

    // Consistency of the two equivalent formulations: walking d2 along the
    // reflected bearing must land on the reflected virtual point.
    const Pose2D forward = reflection + reflect_bearing(target_obs.bearing(), m).unit() * d2;
    const double norm = distance(forward, target);

    const double size =
        reflector_size > 0.0 ? reflector_size : kDerivedSizeRatio * d_total;
    return SolveResult{ReflectorState(MirrorLine(reflection, m.orientation()), size),
                       target,
                       d1,
                       d2,
                       norm,
                       SolveMethod::ClosedForm};
}

ResidualVector residual(const ReflectorState& candidate, const Pose2D& obs,
                        const BeaconSpec& beacon) {
    const auto hit = try_intersect(Ray{obs, beacon.observation.bearing()}, candidate.line());
    if (!hit) throw RayMissesReflector("beacon ray is parallel to the candidate reflector");
    if (hit->t_ray < 0.0) throw RayMissesReflector("candidate reflector lies behind the observer");
    if (std::abs(hit->t_line) > candidate.size() / 2.0)
        throw RayMissesReflector("beacon ray passes outside the candidate extent");

    const auto r = line_residual(candidate.line(), obs, beacon);
    return *r;  // hit checks above guarantee a value
}

SolveResult solve_sltr(const Pose2D& obs, const Observation& target_obs,
                       std::span<const BeaconSpec> beacons, const SolveOptions& options) {
    if (beacons.empty()) throw NoBeacons();

    MirrorLine line = mirror_from_beacon(obs, beacons.front());
    if (beacons.size() > 1) {
        const auto hit = try_intersect(Ray{obs, target_obs.bearing()}, line);
        if (!hit) throw RayParallel("target ray is parallel to the initial mirror estimate");
        double d = hit->t_ray;
        double theta = line.orientation();
        refine_fit(obs, target_obs.bearing(), beacons, d, theta);
        line = line_at(obs, target_obs.bearing(), d, theta);
    }
    return finish(obs, target_obs, beacons, line, options, SolveMethod::ClosedForm, true);
}

SolveResult solve_grid(const Pose2D& obs, const Observation& target_obs,
                       std::span<const BeaconSpec> beacons, const GridOptions& grid,
                       const SolveOptions& options) {
    if (beacons.empty()) throw NoBeacons();
    if (!(grid.step > 0.0)) throw NonPositiveStep("grid step must be > 0");
    if (!(grid.theta_step > 0.0)) throw NonPositiveStep("theta step must be > 0");

    const double d_total = target_obs.estimated_range();
    double best_f = std::numeric_limits<double>::infinity();
    double best_d = 0.0;
    double best_theta = 0.0;

    for (double d = 0.0; d <= d_total * (1.0 + 1e-12); d += grid.step) {
        for (double theta = 0.0; theta < kPi; theta += grid.theta_step) {
            const double f = objective(line_at(obs, target_obs.bearing(), d, theta), obs, beacons);
            if (f < best_f) {
                best_f = f;
                best_d = d;
                best_theta = theta;
            }
        }
    }
    if (!std::isfinite(best_f))
        throw Inconsistent("no grid cell admits a one-bounce solution for all beacons");

    // The best cell keeps a quantization residual; that is resolution, not
    // data inconsistency, so the threshold does not apply here.
    return finish(obs, target_obs, beacons, line_at(obs, target_obs.bearing(), best_d, best_theta),
                  options, SolveMethod::GridOracle, false);
}

}  // namespace sltr
