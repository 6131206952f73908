#include "sltr/motion.hpp"

#include "sltr/random.hpp"

namespace sltr {

std::vector<Pose2D> sample_motion(const Pose2D& pose, const MotionCommand& cmd,
                                  const MotionNoise& noise, int count, std::uint64_t seed) {
    if (count < 1) throw InvalidCount("sample count must be >= 1");
    if (cmd.duration < 0.0) throw NonPositiveInput("duration must be >= 0");
    if (noise.sigma_translation < 0.0) throw NonPositiveInput("sigma_translation must be >= 0");

    const double commanded = cmd.velocity * cmd.duration;
    const Pose2D dir = cmd.heading.unit();

    GaussianSampler gaussian(seed);
    std::vector<Pose2D> samples;
    samples.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const double translation = gaussian.next(commanded, noise.sigma_translation);
        samples.push_back(pose + dir * translation);
    }
    return samples;
}

}  // namespace sltr
