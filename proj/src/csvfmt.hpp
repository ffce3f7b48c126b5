#pragma once

#include <cstdio>
#include <string>

namespace sllg {

/// Fixed float formatting for byte-deterministic CSV output: 17 significant
/// digits round-trip any double.
inline std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace sllg
