#include "monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>

#include "errors.hpp"

namespace sllg {

EnsembleAccumulator::EnsembleAccumulator(const Mesh& mesh, int energy_levels,
                                         std::vector<int> snapshot_steps)
    : mesh_(&mesh), snapshot_steps_(std::move(snapshot_steps)),
      energy_sum_(energy_levels), energy_sum_sq_(energy_levels),
      snap_sum_(snapshot_steps_.size(),
                std::vector<KahanSum>(3 * static_cast<std::size_t>(mesh.node_count()))) {}

void EnsembleAccumulator::add(const PathEstimates& est) {
    if (est.lab_energy.size() != energy_sum_.size())
        throw std::invalid_argument("ensemble: ragged energy trace");
    if (est.snapshots.size() != snap_sum_.size())
        throw std::invalid_argument("ensemble: ragged snapshot list");
    dev_sq_.add(est.modulus_dev_sq);
    for (std::size_t j = 0; j < energy_sum_.size(); ++j) {
        energy_sum_[j].add(est.lab_energy[j]);
        energy_sum_sq_[j].add(est.lab_energy[j] * est.lab_energy[j]);
    }
    for (std::size_t s = 0; s < snap_sum_.size(); ++s)
        for (int n = 0; n < mesh_->node_count(); ++n)
            for (int c = 0; c < 3; ++c)
                snap_sum_[s][3 * n + c].add(est.snapshots[s][n][c]);
    ++count_;
}

EnsembleStats EnsembleAccumulator::finalize() const {
    EnsembleStats stats;
    stats.paths = count_;
    stats.snapshot_steps = snapshot_steps_;
    const double inv = 1.0 / count_;
    stats.ehk = std::sqrt(std::max(0.0, dev_sq_.value() * inv));
    stats.mean_energy.resize(energy_sum_.size());
    stats.std_energy.resize(energy_sum_.size());
    for (std::size_t j = 0; j < energy_sum_.size(); ++j) {
        const double mean = energy_sum_[j].value() * inv;
        stats.mean_energy[j] = mean;
        double var = 0.0;
        if (count_ > 1)
            var = std::max(0.0, (energy_sum_sq_[j].value() - count_ * mean * mean) /
                                    (count_ - 1));
        stats.std_energy[j] = std::sqrt(var);
    }
    for (std::size_t s = 0; s < snap_sum_.size(); ++s) {
        NodalField f(*mesh_);
        for (int n = 0; n < mesh_->node_count(); ++n)
            for (int c = 0; c < 3; ++c)
                f[n][c] = snap_sum_[s][3 * n + c].value() * inv;
        stats.mean_magnetization.push_back(std::move(f));
    }
    return stats;
}

PathEstimates estimate_path(const SchemeContext& ctx, const Trajectory& traj,
                            const BrownianPath& path,
                            const std::vector<int>& snapshot_steps) {
    const int steps = ctx.params.steps;
    const double dt = ctx.params.dt();
    PathEstimates est;
    est.lab_energy.reserve(steps + 1);
    est.snapshots.reserve(snapshot_steps.size());

    auto dev_sq = [](const Vec3& v) {
        const double d = 1.0 - norm(v);
        return d * d;
    };

    KahanSum dev;
    for (int j = 0; j <= steps; ++j) {
        const NodalField lab = to_lab(traj.m[j], path.at_step(j), ctx.nc);
        est.lab_energy.push_back(grad_energy(ctx.stiffness, lab));
        if (j < steps) dev.add(dt * edge_midpoint_integral(lab, dev_sq));
        for (std::size_t s = 0; s < snapshot_steps.size(); ++s)
            if (snapshot_steps[s] == j) est.snapshots.push_back(lab);
    }
    est.modulus_dev_sq = dev.value();
    return est;
}

namespace {

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hw, 1u, 8u));
}

}  // namespace

EnsembleStats run_monte_carlo(const SchemeContext& ctx, const NodalField& m0,
                              const MonteCarloConfig& mc) {
    if (mc.paths < 1) throw ConfigError("paths must be >= 1");
    for (int s : mc.snapshot_steps)
        if (s < 0 || s > ctx.params.steps)
            throw ConfigError("snapshot step out of range [0, steps]");

    const int workers = resolve_workers(mc.workers);
    EnsembleAccumulator acc(ctx.mesh, ctx.params.steps + 1, mc.snapshot_steps);

    std::optional<Trajectory> shared;
    if (mc.share_deterministic_trajectory && ctx.nc.is_constant()) {
        // The co-rotating problem does not see the noise when g is constant;
        // all paths share one trajectory and only the estimators differ.
        const std::vector<double> zeros(ctx.params.steps, 0.0);
        shared = run_trajectory(ctx, m0, zeros);
    }

    auto run_one = [&](int index) -> PathEstimates {
        const BrownianPath path = BrownianPath::sample(mc.seed, index,
                                                       ctx.params.steps, ctx.params.dt());
        if (shared) return estimate_path(ctx, *shared, path, mc.snapshot_steps);
        const Trajectory traj = run_trajectory(ctx, m0, path.cumulative);
        return estimate_path(ctx, traj, path, mc.snapshot_steps);
    };

    const int block = std::max(1, workers) * 4;
    for (int base = 0; base < mc.paths; base += block) {
        const int count = std::min(block, mc.paths - base);
        std::vector<PathEstimates> results(count);
        std::vector<std::exception_ptr> errors(count);

        if (workers <= 1 || count == 1) {
            for (int i = 0; i < count; ++i) {
                try {
                    results[i] = run_one(base + i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        } else {
            std::vector<std::thread> pool;
            std::atomic<int> next{0};
            const int nthreads = std::min(workers, count);
            pool.reserve(nthreads);
            for (int t = 0; t < nthreads; ++t)
                pool.emplace_back([&]() {
                    for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                        try {
                            results[i] = run_one(base + i);
                        } catch (...) {
                            errors[i] = std::current_exception();
                        }
                    }
                });
            for (auto& th : pool) th.join();
        }

        for (int i = 0; i < count; ++i) {
            if (errors[i]) {
                try {
                    std::rethrow_exception(errors[i]);
                } catch (const std::exception& e) {
                    throw SolverError("path " + std::to_string(base + i) + " (seed " +
                                          std::to_string(mc.seed) + ") failed: " + e.what(),
                                      -1, 0.0);
                }
            }
            acc.add(results[i]);
        }
    }
    return acc.finalize();
}

}  // namespace sllg
