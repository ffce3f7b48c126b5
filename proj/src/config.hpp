#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

namespace sllg {

/// Flat run configuration shared by the JSON config file, the C API and the
/// CLI. Keys mirror the field names; values arrive as strings and are parsed
/// here so every front end behaves identically.
struct SimulationConfig {
    int n = 20;                  // mesh subdivisions per side
    int steps = 40;              // J; ignored when k_rule is set
    std::string k_rule;          // "", "h", "h/2", "h/4" (h = 1/n convention)
    double T = 1.0;
    double theta = 0.7;
    double lambda1 = 1.0;
    double lambda2 = 1.0;
    int paths = 20;              // L
    std::uint64_t seed = 42;
    std::string g = "1,0,0";     // "gx,gy,gz" or catalog id
    int workers = 0;             // 0 = auto
    std::string out = "out";
    std::string snapshot_steps;  // comma list; empty = every ceil(J/8) steps
    std::vector<int> n_list;           // convergence
    std::vector<double> lambda2_list;  // energy
    double solver_tol = 1e-10;
    bool full_scale = false;

    /// Parses and stores one key; throws std::invalid_argument on unknown
    /// keys or unparsable values.
    void set(const std::string& key, const std::string& value);

    bool was_set(const std::string& key) const { return explicit_keys.count(key) > 0; }

    /// Loads a flat JSON object; file values do not count as explicit CLI
    /// overrides applied later.
    void load_json_file(const std::string& path);

    /// Throws ConfigError on invalid ranges or inconsistent settings.
    void validate() const;

    /// Step count for a mesh with the given subdivisions: k_rule "h", "h/2",
    /// "h/4" resolve to k ~ 1/n scaled, rounded so that k = T/J with integer
    /// J; otherwise the explicit steps value.
    int resolved_steps(int n_for_rule) const;

    std::vector<int> resolved_snapshot_steps(int steps_total) const;

    nlohmann::json to_json() const;

    std::set<std::string> explicit_keys;
};

}  // namespace sllg
