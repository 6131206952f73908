#include "config.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace sltr::cli {

namespace {

struct Section {
    std::string name;
    int line{0};
    std::map<std::string, std::string> entries;
};

std::string trim(const std::string& s) {
    std::size_t begin = 0;
    std::size_t end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
    return s.substr(begin, end - begin);
}

// Flat key-value sections:  [name] headers, key = value lines, '#' comments.
std::vector<Section> parse_sections(const std::string& text) {
    std::vector<Section> sections;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("line " + std::to_string(line_no) + ": unterminated section header");
            sections.push_back(Section{trim(line.substr(1, line.size() - 2)), line_no, {}});
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
        if (sections.empty())
            throw ConfigError("line " + std::to_string(line_no) + ": entry outside any section");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("line " + std::to_string(line_no) + ": empty key or value");
        if (!sections.back().entries.emplace(key, value).second)
            throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    }
    return sections;
}

double require_double(const Section& s, const std::string& key) {
    const auto it = s.entries.find(key);
    if (it == s.entries.end())
        throw ConfigError("section [" + s.name + "] (line " + std::to_string(s.line) +
                          "): missing key '" + key + "'");
    std::size_t consumed = 0;
    double value = 0.0;
    try {
        value = std::stod(it->second, &consumed);
    } catch (const std::exception&) {
        throw ConfigError("section [" + s.name + "]: key '" + key + "' is not a number");
    }
    if (consumed != it->second.size())
        throw ConfigError("section [" + s.name + "]: trailing characters after '" + key + "'");
    return value;
}

double optional_double(const Section& s, const std::string& key, double fallback) {
    return s.entries.count(key) ? require_double(s, key) : fallback;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

ScenarioConfig parse_config(const std::string& text) {
    ScenarioConfig config;
    bool saw_reflector = false;
    bool saw_target = false;

    for (const Section& s : parse_sections(text)) {
        if (s.name == "observer") {
            config.observer = {require_double(s, "x"), require_double(s, "y")};
        } else if (s.name == "reflector") {
            config.reflector_point = {require_double(s, "x"), require_double(s, "y")};
            config.reflector_orientation_deg = require_double(s, "orientation_deg");
            config.reflector_size = require_double(s, "size");
            saw_reflector = true;
        } else if (s.name == "target") {
            config.target = {require_double(s, "x"), require_double(s, "y")};
            saw_target = true;
        } else if (s.name == "beacon") {
            config.beacons.push_back({require_double(s, "x"), require_double(s, "y")});
        } else if (s.name == "size_constancy") {
            if (s.entries.count("target_reference_size")) {
                config.target_reference_size = require_double(s, "target_reference_size");
                config.target_reference_distance = require_double(s, "target_reference_distance");
            }
            if (s.entries.count("beacon_reference_size")) {
                config.beacon_reference_size = require_double(s, "beacon_reference_size");
                config.beacon_reference_distance = require_double(s, "beacon_reference_distance");
            }
        } else if (s.name == "placement") {
            config.epsilon_deg = require_double(s, "epsilon_deg");
        } else if (s.name == "noise") {
            config.noise_rows.push_back(
                {require_double(s, "sigma_bearing_deg"), require_double(s, "sigma_range")});
        } else if (s.name == "simulation") {
            config.iterations = static_cast<int>(optional_double(s, "iterations", 200.0));
            config.seed = static_cast<std::uint64_t>(optional_double(s, "seed", 1.0));
        } else {
            throw ConfigError("unknown section [" + s.name + "] at line " + std::to_string(s.line));
        }
    }

    if (!saw_reflector) throw ConfigError("missing [reflector] section");
    if (!saw_target) throw ConfigError("missing [target] section");
    return config;
}

ScenarioConfig load_config(const std::string& path) { return parse_config(read_file(path)); }

std::string serialize_config(const ScenarioConfig& config) {
    std::ostringstream out;
    out << "[observer]\n"
        << "x = " << format_number(config.observer.x) << "\n"
        << "y = " << format_number(config.observer.y) << "\n\n";
    out << "[reflector]\n"
        << "x = " << format_number(config.reflector_point.x) << "\n"
        << "y = " << format_number(config.reflector_point.y) << "\n"
        << "orientation_deg = " << format_number(config.reflector_orientation_deg) << "\n"
        << "size = " << format_number(config.reflector_size) << "\n\n";
    out << "[target]\n"
        << "x = " << format_number(config.target.x) << "\n"
        << "y = " << format_number(config.target.y) << "\n";
    for (const Pose2D& beacon : config.beacons) {
        out << "\n[beacon]\n"
            << "x = " << format_number(beacon.x) << "\n"
            << "y = " << format_number(beacon.y) << "\n";
    }
    if (config.target_reference_size > 0.0 || config.beacon_reference_size > 0.0) {
        out << "\n[size_constancy]\n";
        if (config.target_reference_size > 0.0) {
            out << "target_reference_size = " << format_number(config.target_reference_size)
                << "\n"
                << "target_reference_distance = "
                << format_number(config.target_reference_distance) << "\n";
        }
        if (config.beacon_reference_size > 0.0) {
            out << "beacon_reference_size = " << format_number(config.beacon_reference_size)
                << "\n"
                << "beacon_reference_distance = "
                << format_number(config.beacon_reference_distance) << "\n";
        }
    }
    out << "\n[placement]\n"
        << "epsilon_deg = " << format_number(config.epsilon_deg) << "\n";
    for (const NoiseRow& row : config.noise_rows) {
        out << "\n[noise]\n"
            << "sigma_bearing_deg = " << format_number(row.sigma_bearing_deg) << "\n"
            << "sigma_range = " << format_number(row.sigma_range) << "\n";
    }
    out << "\n[simulation]\n"
        << "iterations = " << config.iterations << "\n"
        << "seed = " << config.seed << "\n";
    return out.str();
}

ObservationsFile parse_observations(const std::string& text) {
    auto read_sighting = [](const Section& s) {
        MeasuredSighting sighting;
        sighting.bearing_deg = require_double(s, "bearing_deg");
        if (s.entries.count("d_total")) sighting.d_total = require_double(s, "d_total");
        if (s.entries.count("apparent_size"))
            sighting.apparent_size = require_double(s, "apparent_size");
        if (!sighting.d_total && !sighting.apparent_size)
            throw ConfigError("section [" + s.name + "] (line " + std::to_string(s.line) +
                              "): needs d_total or apparent_size");
        return sighting;
    };

    ObservationsFile obs;
    bool saw_target = false;
    for (const Section& s : parse_sections(text)) {
        if (s.name == "target_observation") {
            obs.target = read_sighting(s);
            saw_target = true;
        } else if (s.name == "beacon_observation") {
            obs.beacons.push_back(read_sighting(s));
        } else {
            throw ConfigError("unknown section [" + s.name + "] at line " + std::to_string(s.line));
        }
    }
    if (!saw_target) throw ConfigError("missing [target_observation] section");
    return obs;
}

ObservationsFile load_observations(const std::string& path) {
    return parse_observations(read_file(path));
}

Scenario to_scenario(const ScenarioConfig& config) {
    const MirrorLine line(config.reflector_point,
                          radians_from_degrees(config.reflector_orientation_deg));
    return Scenario{config.observer, ReflectorState(line, config.reflector_size), config.target,
                    config.beacons, radians_from_degrees(config.epsilon_deg)};
}

std::string format_number(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.6g", value);
    return buffer;
}

}  // namespace sltr::cli
