#include "config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"

namespace sllg {

namespace {

double parse_double(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    double d = 0.0;
    try {
        d = std::stod(value, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad numeric value for '" + key + "'");
    }
    if (pos != value.size())
        throw std::invalid_argument("config: trailing characters in value for '" + key + "'");
    return d;
}

long long parse_int(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    long long i = 0;
    try {
        i = std::stoll(value, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad integer value for '" + key + "'");
    }
    if (pos != value.size())
        throw std::invalid_argument("config: trailing characters in value for '" + key + "'");
    return i;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "1" || value == "true") return true;
    if (value == "0" || value == "false") return false;
    throw std::invalid_argument("config: bad boolean value for '" + key + "'");
}

template <typename T, typename Parse>
std::vector<T> parse_list(const std::string& key, const std::string& value, Parse parse) {
    std::vector<T> items;
    std::istringstream in(value);
    std::string tok;
    while (std::getline(in, tok, ','))
        if (!tok.empty()) items.push_back(static_cast<T>(parse(key, tok)));
    if (items.empty())
        throw std::invalid_argument("config: empty list for '" + key + "'");
    return items;
}

}  // namespace

void SimulationConfig::set(const std::string& key, const std::string& value) {
    if (key == "n") n = static_cast<int>(parse_int(key, value));
    else if (key == "steps") steps = static_cast<int>(parse_int(key, value));
    else if (key == "k_rule") k_rule = value;
    else if (key == "T") T = parse_double(key, value);
    else if (key == "theta") theta = parse_double(key, value);
    else if (key == "lambda1") lambda1 = parse_double(key, value);
    else if (key == "lambda2") lambda2 = parse_double(key, value);
    else if (key == "paths") paths = static_cast<int>(parse_int(key, value));
    else if (key == "seed") seed = static_cast<std::uint64_t>(parse_int(key, value));
    else if (key == "g") g = value;
    else if (key == "workers") workers = static_cast<int>(parse_int(key, value));
    else if (key == "out") out = value;
    else if (key == "snapshot_steps") snapshot_steps = value;
    else if (key == "n_list") n_list = parse_list<int>(key, value, parse_int);
    else if (key == "lambda2_list") lambda2_list = parse_list<double>(key, value, parse_double);
    else if (key == "solver_tol") solver_tol = parse_double(key, value);
    else if (key == "full_scale") full_scale = parse_bool(key, value);
    else throw std::invalid_argument("config: unknown key '" + key + "'");
    explicit_keys.insert(key);
}

void SimulationConfig::load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ConfigError("config: bad JSON in '" + path + "': " + e.what());
    }
    if (!j.is_object()) throw ConfigError("config: '" + path + "' is not a JSON object");

    const auto keys_before = explicit_keys;
    for (const auto& [key, value] : j.items()) {
        std::string text;
        if (value.is_string()) text = value.get<std::string>();
        else if (value.is_boolean()) text = value.get<bool>() ? "1" : "0";
        else if (value.is_number()) text = value.dump();
        else if (value.is_array()) {
            std::string joined;
            for (const auto& item : value) {
                if (!joined.empty()) joined += ",";
                joined += item.is_string() ? item.get<std::string>() : item.dump();
            }
            text = joined;
        } else {
            throw ConfigError("config: unsupported JSON type for key '" + key + "'");
        }
        try {
            set(key, text);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    }
    explicit_keys = keys_before;  // file values may still be overridden by flags
}

void SimulationConfig::validate() const {
    if (n < 1) throw ConfigError("n must be >= 1");
    if (!(T > 0.0)) throw ConfigError("T must be positive");
    if (!(theta >= 0.0 && theta <= 1.0)) throw ConfigError("theta must be in [0, 1]");
    if (lambda1 == 0.0) throw ConfigError("lambda1 must be nonzero");
    if (!(lambda2 > 0.0)) throw ConfigError("lambda2 must be positive");
    if (paths < 1) throw ConfigError("paths must be >= 1");
    if (workers < 0) throw ConfigError("workers must be >= 0");
    if (!(solver_tol > 0.0)) throw ConfigError("solver_tol must be positive");
    if (!k_rule.empty() && k_rule != "h" && k_rule != "h/2" && k_rule != "h/4")
        throw ConfigError("k_rule must be one of h, h/2, h/4");
    if (k_rule.empty() && steps < 1) throw ConfigError("steps must be >= 1");
    for (int m : n_list)
        if (m < 1) throw ConfigError("n_list entries must be >= 1");
    for (double l2 : lambda2_list)
        if (!(l2 > 0.0)) throw ConfigError("lambda2_list entries must be positive");
}

int SimulationConfig::resolved_steps(int n_for_rule) const {
    if (k_rule.empty()) return steps;
    double factor = 1.0;
    if (k_rule == "h/2") factor = 2.0;
    else if (k_rule == "h/4") factor = 4.0;
    else if (k_rule != "h") throw ConfigError("k_rule must be one of h, h/2, h/4");
    // target k = (1/n) / factor, rounded so that k = T/J with integer J
    const long long j = std::llround(T * n_for_rule * factor);
    if (j < 1) throw ConfigError("k rule '" + k_rule + "' yields no full step for T=" +
                                 std::to_string(T));
    return static_cast<int>(j);
}

std::vector<int> SimulationConfig::resolved_snapshot_steps(int steps_total) const {
    std::vector<int> result;
    if (snapshot_steps.empty()) {
        const int stride = (steps_total + 7) / 8;
        for (int s = 0; s <= steps_total; s += stride) result.push_back(s);
        if (result.back() != steps_total) result.push_back(steps_total);
        return result;
    }
    for (int s : parse_list<int>("snapshot_steps", snapshot_steps, parse_int)) {
        if (s < 0 || s > steps_total)
            throw ConfigError("snapshot step " + std::to_string(s) +
                              " outside [0, " + std::to_string(steps_total) + "]");
        result.push_back(s);
    }
    return result;
}

nlohmann::json SimulationConfig::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["steps"] = steps;
    j["k_rule"] = k_rule;
    j["T"] = T;
    j["theta"] = theta;
    j["lambda1"] = lambda1;
    j["lambda2"] = lambda2;
    j["paths"] = paths;
    j["seed"] = seed;
    j["g"] = g;
    j["workers"] = workers;
    j["out"] = out;
    j["snapshot_steps"] = snapshot_steps;
    j["n_list"] = n_list;
    j["lambda2_list"] = lambda2_list;
    j["solver_tol"] = solver_tol;
    j["full_scale"] = full_scale;
    return j;
}

}  // namespace sllg
