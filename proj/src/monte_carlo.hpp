#pragma once

#include <cstdint>
#include <vector>

#include "brownian.hpp"
#include "field.hpp"
#include "scheme.hpp"

namespace sllg {

/// Compensated (Kahan) scalar accumulator; keeps ensemble means
/// permutation-invariant well below 1e-12.
class KahanSum {
public:
    void add(double x) {
        const double y = x - c_;
        const double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

private:
    double s_ = 0.0;
    double c_ = 0.0;
};

struct MonteCarloConfig {
    int paths = 20;              // L
    std::uint64_t seed = 42;     // master seed; path j uses stream j
    int workers = 0;             // 0 = auto
    std::vector<int> snapshot_steps;
    /// Reuse one trajectory across paths when the coefficient makes the
    /// co-rotating problem deterministic (constant g); estimators still run
    /// per path. Results are bit-identical to the generic loop.
    bool share_deterministic_trajectory = true;
};

/// Per-path observables: everything is computed on the physical field
/// M^(j) = e^{w_j G} m^(j).
struct PathEstimates {
    std::vector<double> lab_energy;          // |grad M|^2 at steps 0..J
    double modulus_dev_sq = 0.0;             // sum_j dt * int (1 - |M^(j)|)^2
    std::vector<NodalField> snapshots;       // aligned with snapshot_steps
};

struct EnsembleStats {
    int paths = 0;
    std::vector<int> snapshot_steps;
    double ehk = 0.0;                        // sqrt(mean modulus_dev_sq)
    std::vector<double> mean_energy;         // per time level 0..J
    std::vector<double> std_energy;          // sample std (0 for L = 1)
    std::vector<NodalField> mean_magnetization;  // per snapshot step
};

/// Accumulates per-path estimates in a fixed order (ascending path index),
/// so results are bitwise reproducible for any worker count.
class EnsembleAccumulator {
public:
    EnsembleAccumulator(const Mesh& mesh, int energy_levels,
                        std::vector<int> snapshot_steps);
    void add(const PathEstimates& est);
    EnsembleStats finalize() const;

private:
    const Mesh* mesh_;
    int count_ = 0;
    std::vector<int> snapshot_steps_;
    KahanSum dev_sq_;
    std::vector<KahanSum> energy_sum_;
    std::vector<KahanSum> energy_sum_sq_;
    std::vector<std::vector<KahanSum>> snap_sum_;  // [snapshot][3 * node]
};

/// Observables of one path given its trajectory and Brownian path.
PathEstimates estimate_path(const SchemeContext& ctx, const Trajectory& traj,
                            const BrownianPath& path,
                            const std::vector<int>& snapshot_steps);

/// Runs L independent paths of the scheme from m0 and averages the
/// estimators. Any path failure aborts with the failing path index and the
/// master seed in the message.
EnsembleStats run_monte_carlo(const SchemeContext& ctx, const NodalField& m0,
                              const MonteCarloConfig& mc);

}  // namespace sllg
