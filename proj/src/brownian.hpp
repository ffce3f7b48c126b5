#pragma once

#include <cstdint>
#include <vector>

namespace sllg {

namespace rng {

/// Stateless counter-based generator: every draw is a hash of
/// (seed, stream, counter, lane), so paths regenerate bit-identically and
/// workers never share state.
std::uint64_t mix(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter,
                  std::uint64_t lane);

/// Uniform in [0, 1).
double uniform01(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter,
                 std::uint64_t lane);

/// Standard normal via Box-Muller (lanes 0 and 1 of the given counter).
double normal(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter);

}  // namespace rng

/// One discrete Wiener path on the uniform grid t_j = j k: J independent
/// N(0, k) increments plus their running sums (cumulative[0] = 0). The
/// piecewise-constant-in-time value on [t_j, t_{j+1}) is the left endpoint
/// value W(t_j).
struct BrownianPath {
    std::vector<double> increments;  // size J
    std::vector<double> cumulative;  // size J+1, cumulative[0] = 0
    std::uint64_t seed = 0;
    int path_index = 0;

    static BrownianPath sample(std::uint64_t seed, int path_index, int steps,
                               double dt);

    double at_step(int j) const { return cumulative[j]; }

    /// Left-endpoint evaluation at time t (step index floor(t/dt), clamped).
    double at_time(double t, double dt) const;
};

}  // namespace sllg
