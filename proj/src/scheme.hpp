#pragma once

#include <vector>

#include "assembly.hpp"
#include "field.hpp"
#include "mesh.hpp"
#include "noise.hpp"
#include "sparse.hpp"

namespace sllg {

struct SchemeParams {
    double lambda1 = 1.0;  // precession coefficient, nonzero
    double lambda2 = 1.0;  // damping coefficient, positive
    double theta = 0.7;    // implicitness weight in [0, 1]
    double T = 1.0;        // final time
    int steps = 40;        // J, so dt = T / J

    double dt() const { return T / steps; }
    double mu() const { return lambda1 * lambda1 + lambda2 * lambda2; }

    /// Throws ConfigError on out-of-range values.
    void validate() const;
};

/// Per-node orthonormal pair spanning the plane orthogonal to the current
/// magnetization; coordinates for the nodally tangential update space.
struct TangentFrame {
    std::vector<Vec3> e1;
    std::vector<Vec3> e2;  // e2 = m x e1, so (e1, e2, m) is right-handed
};

/// Deterministic frame: pick the coordinate axis least aligned with m(x_n),
/// orthogonalize against m, complete with the cross product. Throws when a
/// nodal modulus differs from 1 by more than 1e-8.
TangentFrame build_tangent_frame(const NodalField& m);

struct StepSystem {
    SparseMatrix matrix;      // 2N x 2N in frame coordinates
    std::vector<double> rhs;  // length 2N
};

/// One implicit step in frame coordinates. For trial v = a e1 + b e2 and
/// test w from the same frame:
///   lambda2 <v, w>_lumped - lambda1 <m x v, w>_lumped
///     + mu theta dt <grad v, grad w>
///   = -mu <grad m, grad w> - <r, w>_lumped.
/// The lumped products make the lambda1 block exactly skew and the diagonal
/// blocks lambda2-coercive.
StepSystem assemble_step_system(const NodalField& m, const TangentFrame& frame,
                                const SchemeParams& params, const NodalField& r_field,
                                const SparseMatrix& stiffness,
                                const std::vector<double>& lumped);

struct StepSolution {
    NodalField v;  // reconstructed tangential update, v(x_n).m(x_n) = 0
    SolveReport report;
};

/// Krylov solve with iteration cap 10 * 2N; on failure falls back to the
/// dense direct solve for meshes up to 2000 nodes, otherwise throws
/// SolverError (step index filled by the caller).
StepSolution solve_step(const StepSystem& system, const TangentFrame& frame,
                        const Mesh& mesh, double rel_tol);

/// Shared immutable context for one run: mesh, assembled matrices, noise
/// coefficient, parameters.
struct SchemeContext {
    const Mesh& mesh;
    const NoiseCoefficient& nc;
    SchemeParams params;
    SparseMatrix stiffness;
    std::vector<double> lumped;
    double solver_tol = 1e-10;

    SchemeContext(const Mesh& mesh, const NoiseCoefficient& nc, SchemeParams params,
                  double solver_tol = 1e-10);
};

struct PathState {
    int step = 0;
    NodalField m;                       // unit nodal moduli
    NodalField last_v;                  // update field of the last step
    std::vector<double> energy_trace;   // |grad m|^2 at steps 0..step
    std::vector<double> v_norm_trace;   // lumped |v|^2 per completed step
    std::vector<double> grad_v_trace;   // |grad v|^2 per completed step
    std::vector<SolveReport> reports;   // per completed step
};

/// Starts a path from the nodal interpolant of m0; nodal values are
/// renormalized when the analytic formula drifts from unit modulus by more
/// than 1e-12.
PathState init_path_state(const SchemeContext& ctx, const NodalField& m0);

/// One step: frame, forcing at noise level w, solve, nodewise projection
/// update m <- (m + dt v)/|m + dt v|, traces appended.
void advance(PathState& state, const SchemeContext& ctx, double w);

/// Physical magnetization from the co-rotating variable: rotation about g by
/// the accumulated noise w.
NodalField to_lab(const NodalField& m, double w, const NoiseCoefficient& nc);

/// Full trajectory m^(0..J); the per-step noise levels are the left-endpoint
/// path values.
struct Trajectory {
    std::vector<NodalField> m;  // size J+1
    PathState final_state;      // traces for the whole run
};

Trajectory run_trajectory(const SchemeContext& ctx, const NodalField& m0,
                          const std::vector<double>& noise_levels);

}  // namespace sllg
