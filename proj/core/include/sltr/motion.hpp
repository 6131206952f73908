#pragma once

#include <cstdint>
#include <vector>

#include "sltr/geometry.hpp"

namespace sltr {

/// Velocity command over one interval. The heading is taken as commanded;
/// only the translation magnitude is noisy.
struct MotionCommand {
    double velocity{0.0};  // cm per unit time
    double duration{0.0};  // time units, >= 0
    Bearing heading;
};

struct MotionNoise {
    double sigma_translation{0.0};  // cm, >= 0
};

/// Draw `count` successor poses from p(X(t+1) | X(t), v): each sample is
/// pose + (v*dt + n_i) * unit(heading) with n_i ~ Normal(0, sigma^2).
/// Deterministic for a fixed seed.
std::vector<Pose2D> sample_motion(const Pose2D& pose, const MotionCommand& cmd,
                                  const MotionNoise& noise, int count, std::uint64_t seed);

}  // namespace sltr
