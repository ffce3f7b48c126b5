#pragma once

#include <array>
#include <utility>
#include <vector>

#include "sparse.hpp"
#include "vec.hpp"

namespace sllg {

/// Conforming triangulation of a planar polygon. Immutable after finalize();
/// safe to share read-only across concurrent simulation paths.
struct Mesh {
    std::vector<Vec2> nodes;
    std::vector<std::array<int, 3>> elements;  // node index triples, CCW
    std::vector<int> boundary_nodes;           // sorted
    double h = 0.0;                            // max element diameter

    // Derived per-element geometry, filled by finalize().
    std::vector<double> areas;
    std::vector<std::array<Vec2, 3>> basis_gradients;  // grad of P1 hat at each vertex

    /// Computes areas, basis gradients and h. Throws std::invalid_argument on
    /// out-of-range indices or non-positive element areas.
    void finalize();

    int node_count() const { return static_cast<int>(nodes.size()); }
    int element_count() const { return static_cast<int>(elements.size()); }

    Vec2 centroid(int e) const {
        const auto& t = elements[e];
        return (1.0 / 3.0) * (nodes[t[0]] + nodes[t[1]] + nodes[t[2]]);
    }
};

/// Uniform triangulation of D = (-0.5, 0.5)^2: (n+1)^2 nodes, 2n^2 right
/// triangles, every cell split along its bottom-left to top-right diagonal.
Mesh uniform_unit_square_mesh(int n);

struct MeshConditionReport {
    bool ok = false;
    std::vector<std::pair<int, int>> violations;  // (i, j) with positive coupling
};

/// Checks that every off-diagonal entry of the scalar P1 stiffness matrix is
/// <= tol. This is the acuteness condition under which the nodewise sphere
/// projection cannot increase the Dirichlet energy.
MeshConditionReport check_mesh_condition(const Mesh& mesh,
                                         const SparseMatrix& stiffness,
                                         double tol = 1e-12);

}  // namespace sllg
