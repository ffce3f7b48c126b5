#pragma once

#include <stdexcept>
#include <string>

namespace sllg {

/// Invalid or inconsistent run configuration (bad parameter ranges, unknown
/// keys, unresolvable time-step rules).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Linear solver failure after the iteration cap and (when permitted) the
/// dense fallback. Carries the step index and the last relative residual so
/// a failing run can be reported precisely.
class SolverError : public std::runtime_error {
public:
    SolverError(const std::string& what, int step, double residual)
        : std::runtime_error(what), step(step), residual(residual) {}
    int step = -1;
    double residual = 0.0;
};

/// Filesystem / output failure.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sllg
