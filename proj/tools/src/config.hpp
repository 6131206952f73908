#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sltr/ranging.hpp"
#include "sltr/simulate.hpp"

namespace sltr::cli {

/// Malformed config or observation file; maps to exit code 2.
struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(what) {}
};

struct NoiseRow {
    double sigma_bearing_deg{0.0};
    double sigma_range{0.0};
};

/// Scenario file contents. Angles are degrees and lengths cm at this
/// boundary; conversion to radians happens when building the Scenario.
struct ScenarioConfig {
    Pose2D observer{0.0, 0.0};

    Pose2D reflector_point{0.0, 0.0};
    double reflector_orientation_deg{0.0};
    double reflector_size{0.0};

    Pose2D target{0.0, 0.0};
    std::vector<Pose2D> beacons;

    // Size-constancy references; 0 = not configured. Required only when an
    // observations file gives apparent sizes instead of ranges.
    double target_reference_size{0.0};
    double target_reference_distance{0.0};
    double beacon_reference_size{0.0};
    double beacon_reference_distance{0.0};

    double epsilon_deg{5.0};

    std::vector<NoiseRow> noise_rows;
    int iterations{200};
    std::uint64_t seed{1};
};

/// Measured inputs for the solve command: target bearing/range plus one
/// (bearing, range) pair per beacon, matched to the config's beacons by
/// order.
/// One measured sighting: the range is either given directly (d_total) or as
/// an apparent size that the configured size-constancy reference converts.
struct MeasuredSighting {
    double bearing_deg{0.0};
    std::optional<double> d_total;
    std::optional<double> apparent_size;
};

struct ObservationsFile {
    MeasuredSighting target;
    std::vector<MeasuredSighting> beacons;
};

ScenarioConfig parse_config(const std::string& text);
ScenarioConfig load_config(const std::string& path);
std::string serialize_config(const ScenarioConfig& config);

ObservationsFile parse_observations(const std::string& text);
ObservationsFile load_observations(const std::string& path);

Scenario to_scenario(const ScenarioConfig& config);

/// Fixed-width significant-digit formatting shared by every emitted file.
std::string format_number(double value);

}  // namespace sltr::cli
