#include "scheme.hpp"

#include <cmath>
#include <stdexcept>

#include "errors.hpp"

namespace sllg {

void SchemeParams::validate() const {
    if (lambda1 == 0.0) throw ConfigError("lambda1 must be nonzero");
    if (!(lambda2 > 0.0)) throw ConfigError("lambda2 must be positive");
    if (!(theta >= 0.0 && theta <= 1.0)) throw ConfigError("theta must be in [0, 1]");
    if (!(T > 0.0)) throw ConfigError("T must be positive");
    if (steps < 1) throw ConfigError("steps must be >= 1");
}

TangentFrame build_tangent_frame(const NodalField& m) {
    TangentFrame frame;
    frame.e1.resize(m.size());
    frame.e2.resize(m.size());
    for (int n = 0; n < m.size(); ++n) {
        const Vec3 mn = m[n];
        if (std::abs(norm(mn) - 1.0) > 1e-8)
            throw std::invalid_argument("build_tangent_frame: nodal modulus far from 1");
        // Axis least aligned with m, then Gram-Schmidt.
        int axis = 0;
        double best = std::abs(mn.x);
        if (std::abs(mn.y) < best) { axis = 1; best = std::abs(mn.y); }
        if (std::abs(mn.z) < best) { axis = 2; }
        Vec3 t{};
        t[axis] = 1.0;
        t -= dot(t, mn) * mn;
        frame.e1[n] = normalized(t);
        frame.e2[n] = cross(mn, frame.e1[n]);
    }
    return frame;
}

StepSystem assemble_step_system(const NodalField& m, const TangentFrame& frame,
                                const SchemeParams& params, const NodalField& r_field,
                                const SparseMatrix& stiffness,
                                const std::vector<double>& lumped) {
    const int nn = m.size();
    if (static_cast<int>(frame.e1.size()) != nn ||
        static_cast<int>(lumped.size()) != nn || stiffness.rows != nn)
        throw std::invalid_argument("assemble_step_system: inconsistent sizes");
    require_same_mesh(m, r_field);
    params.validate();

    const double dt = params.dt();
    const double mu = params.mu();
    const double stiff_scale = mu * params.theta * dt;

    std::vector<Triplet> triplets;
    triplets.reserve(4 * static_cast<std::size_t>(stiffness.nnz()) + 4 * nn);

    if (stiff_scale != 0.0) {
        for (int i = 0; i < nn; ++i) {
            for (int k = stiffness.row_ptr[i]; k < stiffness.row_ptr[i + 1]; ++k) {
                const int j = stiffness.col[k];
                const double a = stiff_scale * stiffness.val[k];
                triplets.push_back({2 * i, 2 * j, a * dot(frame.e1[i], frame.e1[j])});
                triplets.push_back({2 * i, 2 * j + 1, a * dot(frame.e1[i], frame.e2[j])});
                triplets.push_back({2 * i + 1, 2 * j, a * dot(frame.e2[i], frame.e1[j])});
                triplets.push_back({2 * i + 1, 2 * j + 1, a * dot(frame.e2[i], frame.e2[j])});
            }
        }
    }
    // Nodal blocks: with e2 = m x e1 the lambda1 coupling reduces to
    // [[0, +1], [-1, 0]] per node.
    for (int i = 0; i < nn; ++i) {
        const double w = lumped[i];
        triplets.push_back({2 * i, 2 * i, params.lambda2 * w});
        triplets.push_back({2 * i + 1, 2 * i + 1, params.lambda2 * w});
        triplets.push_back({2 * i, 2 * i + 1, params.lambda1 * w});
        triplets.push_back({2 * i + 1, 2 * i, -params.lambda1 * w});
    }

    StepSystem sys;
    sys.matrix = SparseMatrix::from_triplets(2 * nn, 2 * nn, std::move(triplets));

    const NodalField grad_term = stiffness_apply(stiffness, m);
    sys.rhs.resize(2 * static_cast<std::size_t>(nn));
    for (int i = 0; i < nn; ++i) {
        const Vec3 rhs_vec = -mu * grad_term[i] - lumped[i] * r_field[i];
        sys.rhs[2 * i] = dot(rhs_vec, frame.e1[i]);
        sys.rhs[2 * i + 1] = dot(rhs_vec, frame.e2[i]);
    }
    return sys;
}

StepSolution solve_step(const StepSystem& system, const TangentFrame& frame,
                        const Mesh& mesh, double rel_tol) {
    if (!(rel_tol > 0.0)) throw std::invalid_argument("solve_step: tolerance must be positive");
    const int dim = system.matrix.rows;
    std::vector<double> x(dim, 0.0);

    SolveReport report = bicgstab(system.matrix, system.rhs, x, rel_tol, 10 * dim);
    if (!report.converged) {
        if (mesh.node_count() <= 2000) {
            dense_solve(system.matrix, system.rhs, x);
            std::vector<double> res(dim);
            system.matrix.matvec(x, res);
            double rn = 0.0, bn = 0.0;
            for (int i = 0; i < dim; ++i) {
                const double d = system.rhs[i] - res[i];
                rn += d * d;
                bn += system.rhs[i] * system.rhs[i];
            }
            report.residual = bn > 0.0 ? std::sqrt(rn / bn) : 0.0;
            report.converged = true;
            report.dense_fallback = true;
        } else {
            throw SolverError("linear solve failed: residual " +
                                  std::to_string(report.residual) + " after " +
                                  std::to_string(report.iterations) + " iterations",
                              -1, report.residual);
        }
    }

    StepSolution sol{NodalField(mesh), report};
    for (int n = 0; n < mesh.node_count(); ++n)
        sol.v[n] = x[2 * n] * frame.e1[n] + x[2 * n + 1] * frame.e2[n];
    return sol;
}

SchemeContext::SchemeContext(const Mesh& mesh, const NoiseCoefficient& nc,
                             SchemeParams params, double solver_tol)
    : mesh(mesh), nc(nc), params(params),
      stiffness(assemble_stiffness(mesh)),
      lumped(lumped_mass_weights(mesh)),
      solver_tol(solver_tol) {
    params.validate();
}

PathState init_path_state(const SchemeContext& ctx, const NodalField& m0) {
    PathState state;
    state.m = m0;
    for (int n = 0; n < state.m.size(); ++n) {
        const double len = norm(state.m[n]);
        if (std::abs(len - 1.0) > 1e-12) state.m[n] = state.m[n] / len;
    }
    state.energy_trace.push_back(grad_energy(ctx.stiffness, state.m));
    return state;
}

void advance(PathState& state, const SchemeContext& ctx, double w) {
    const TangentFrame frame = build_tangent_frame(state.m);
    const NodalField r_field = noise_forcing(w, state.m, ctx.nc,
                                             ctx.params.lambda1, ctx.params.lambda2);
    const StepSystem system = assemble_step_system(state.m, frame, ctx.params,
                                                   r_field, ctx.stiffness, ctx.lumped);
    StepSolution sol;
    try {
        sol = solve_step(system, frame, ctx.mesh, ctx.solver_tol);
    } catch (const SolverError& e) {
        throw SolverError(std::string(e.what()) + " at step " + std::to_string(state.step),
                          state.step, e.residual);
    }

    const double dt = ctx.params.dt();
    state.last_v = sol.v;
    for (int n = 0; n < state.m.size(); ++n) {
        const Vec3 updated = state.m[n] + dt * sol.v[n];
        state.m[n] = updated / norm(updated);  // |m + dt v| >= 1, never degenerate
    }

    state.v_norm_trace.push_back(lumped_inner(ctx.lumped, sol.v, sol.v));
    state.grad_v_trace.push_back(grad_energy(ctx.stiffness, sol.v));
    state.reports.push_back(sol.report);
    state.energy_trace.push_back(grad_energy(ctx.stiffness, state.m));
    ++state.step;
}

NodalField to_lab(const NodalField& m, double w, const NoiseCoefficient& nc) {
    return rotate_about_g(w, m, nc);
}

Trajectory run_trajectory(const SchemeContext& ctx, const NodalField& m0,
                          const std::vector<double>& noise_levels) {
    if (static_cast<int>(noise_levels.size()) < ctx.params.steps)
        throw std::invalid_argument("run_trajectory: not enough noise levels");
    Trajectory traj;
    traj.m.reserve(ctx.params.steps + 1);
    PathState state = init_path_state(ctx, m0);
    traj.m.push_back(state.m);
    for (int j = 0; j < ctx.params.steps; ++j) {
        advance(state, ctx, noise_levels[j]);
        traj.m.push_back(state.m);
    }
    traj.final_state = std::move(state);
    return traj;
}

}  // namespace sllg
