#include "mesh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sllg {

void Mesh::finalize() {
    const int nn = node_count();
    areas.clear();
    basis_gradients.clear();
    areas.reserve(elements.size());
    basis_gradients.reserve(elements.size());
    h = 0.0;

    for (const auto& t : elements) {
        for (int v : t)
            if (v < 0 || v >= nn)
                throw std::invalid_argument("mesh: element node index out of range");
        const Vec2 a = nodes[t[0]], b = nodes[t[1]], c = nodes[t[2]];
        const double area2 = cross(b - a, c - a);  // twice the signed area
        if (!(area2 > 0.0))
            throw std::invalid_argument("mesh: element with non-positive area");
        areas.push_back(0.5 * area2);

        // grad of the hat function at vertex i is perp(opposite edge) / (2A),
        // with the edge oriented so the gradient points toward vertex i.
        basis_gradients.push_back({(1.0 / area2) * perp(c - b),
                                   (1.0 / area2) * perp(a - c),
                                   (1.0 / area2) * perp(b - a)});

        h = std::max({h, norm(b - a), norm(c - b), norm(a - c)});
    }
}

Mesh uniform_unit_square_mesh(int n) {
    if (n < 1) throw std::invalid_argument("uniform_unit_square_mesh: n must be >= 1");
    Mesh mesh;
    const int side = n + 1;
    mesh.nodes.reserve(static_cast<std::size_t>(side) * side);
    for (int j = 0; j < side; ++j)
        for (int i = 0; i < side; ++i)
            mesh.nodes.push_back({-0.5 + static_cast<double>(i) / n,
                                  -0.5 + static_cast<double>(j) / n});

    auto id = [side](int i, int j) { return j * side + i; };
    mesh.elements.reserve(2 * static_cast<std::size_t>(n) * n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            const int bl = id(i, j), br = id(i + 1, j);
            const int tl = id(i, j + 1), tr = id(i + 1, j + 1);
            mesh.elements.push_back({bl, br, tr});
            mesh.elements.push_back({bl, tr, tl});
        }

    for (int j = 0; j < side; ++j)
        for (int i = 0; i < side; ++i)
            if (i == 0 || i == n || j == 0 || j == n)
                mesh.boundary_nodes.push_back(id(i, j));

    mesh.finalize();
    return mesh;
}

MeshConditionReport check_mesh_condition(const Mesh& mesh,
                                         const SparseMatrix& stiffness,
                                         double tol) {
    if (stiffness.rows != mesh.node_count() || stiffness.cols != mesh.node_count())
        throw std::invalid_argument("check_mesh_condition: matrix/mesh size mismatch");
    MeshConditionReport report;
    for (int r = 0; r < stiffness.rows; ++r)
        for (int k = stiffness.row_ptr[r]; k < stiffness.row_ptr[r + 1]; ++k)
            if (stiffness.col[k] != r && stiffness.val[k] > tol)
                report.violations.emplace_back(r, stiffness.col[k]);
    report.ok = report.violations.empty();
    return report;
}

}  // namespace sllg
