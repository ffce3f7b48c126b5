#pragma once

#include <array>
#include <functional>
#include <vector>

#include "field.hpp"
#include "mesh.hpp"
#include "sparse.hpp"

namespace sllg {

/// Scalar P1 stiffness matrix (applied componentwise to vector fields).
/// Exact: P1 gradients are constant per element. Symmetric, PSD, constants
/// in the kernel.
SparseMatrix assemble_stiffness(const Mesh& mesh);

/// Diagonal of the lumped mass matrix: a third of the area of the elements
/// touching each node. Entries sum to |D|.
std::vector<double> lumped_mass_weights(const Mesh& mesh);

/// Lumped mass as a diagonal sparse matrix.
SparseMatrix assemble_lumped_mass(const Mesh& mesh);

/// Lumped (nodal quadrature) inner product sum_n w_n u(x_n).v(x_n).
double lumped_inner(const std::vector<double>& weights, const NodalField& u,
                    const NodalField& v);

/// <grad u, grad v> via the scalar stiffness matrix, componentwise.
double grad_inner(const SparseMatrix& stiffness, const NodalField& u,
                  const NodalField& v);

inline double grad_energy(const SparseMatrix& stiffness, const NodalField& u) {
    return grad_inner(stiffness, u, u);
}

/// stiffness * u, componentwise (result is nodal).
NodalField stiffness_apply(const SparseMatrix& stiffness, const NodalField& u);

/// Per-element constant gradient of a P1 field: columns d u / d x_i, i=1,2.
std::vector<std::array<Vec3, 2>> element_gradients(const Mesh& mesh,
                                                   const NodalField& u);

/// (h^d sum_n |u(x_n)|^p)^{1/p} with d=2; max_n |u(x_n)| for p = infinity.
/// Throws std::invalid_argument for p < 1.
double discrete_lp_norm(const NodalField& u, double p);

/// Integral over D of f(u(x)) using 3 edge-midpoint samples per element
/// (exact for integrands quadratic in x).
double edge_midpoint_integral(const NodalField& u,
                              const std::function<double(const Vec3&)>& f);

}  // namespace sllg
