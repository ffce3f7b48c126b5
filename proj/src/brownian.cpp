#include "brownian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sllg {
namespace rng {

namespace {

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t mix(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter,
                  std::uint64_t lane) {
    std::uint64_t h = mix64(seed);
    h = mix64(h ^ stream);
    h = mix64(h ^ counter);
    h = mix64(h ^ lane);
    return h;
}

double uniform01(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter,
                 std::uint64_t lane) {
    return static_cast<double>(mix(seed, stream, counter, lane) >> 11) * 0x1.0p-53;
}

double normal(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    // u1 in (0, 1] so the log is finite.
    const double u1 = 1.0 - uniform01(seed, stream, counter, 0);
    const double u2 = uniform01(seed, stream, counter, 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace rng

BrownianPath BrownianPath::sample(std::uint64_t seed, int path_index, int steps,
                                  double dt) {
    if (steps < 1) throw std::invalid_argument("BrownianPath: steps must be >= 1");
    if (!(dt > 0.0)) throw std::invalid_argument("BrownianPath: dt must be positive");
    BrownianPath p;
    p.seed = seed;
    p.path_index = path_index;
    p.increments.resize(steps);
    p.cumulative.resize(steps + 1);
    p.cumulative[0] = 0.0;
    const double scale = std::sqrt(dt);
    for (int j = 0; j < steps; ++j) {
        const double dw =
            scale * rng::normal(seed, static_cast<std::uint64_t>(path_index), j);
        p.cumulative[j + 1] = p.cumulative[j] + dw;
        // Stored as the exact difference of the running sums, so the
        // telescoping identity holds bitwise.
        p.increments[j] = p.cumulative[j + 1] - p.cumulative[j];
    }
    return p;
}

double BrownianPath::at_time(double t, double dt) const {
    const int steps = static_cast<int>(increments.size());
    int j = static_cast<int>(std::floor(t / dt));
    j = std::clamp(j, 0, steps);
    return cumulative[j];
}

}  // namespace sllg
