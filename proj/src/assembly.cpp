#include "assembly.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace sllg {

SparseMatrix assemble_stiffness(const Mesh& mesh) {
    std::vector<Triplet> triplets;
    triplets.reserve(9 * mesh.elements.size());
    for (int e = 0; e < mesh.element_count(); ++e) {
        const auto& t = mesh.elements[e];
        const auto& g = mesh.basis_gradients[e];
        const double area = mesh.areas[e];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                triplets.push_back({t[i], t[j], area * dot(g[i], g[j])});
    }
    return SparseMatrix::from_triplets(mesh.node_count(), mesh.node_count(),
                                       std::move(triplets), /*symmetric=*/true);
}

std::vector<double> lumped_mass_weights(const Mesh& mesh) {
    std::vector<double> w(mesh.node_count(), 0.0);
    for (int e = 0; e < mesh.element_count(); ++e) {
        const double third = mesh.areas[e] / 3.0;
        for (int v : mesh.elements[e]) w[v] += third;
    }
    return w;
}

SparseMatrix assemble_lumped_mass(const Mesh& mesh) {
    const auto w = lumped_mass_weights(mesh);
    std::vector<Triplet> triplets;
    triplets.reserve(w.size());
    for (int n = 0; n < static_cast<int>(w.size()); ++n)
        triplets.push_back({n, n, w[n]});
    return SparseMatrix::from_triplets(mesh.node_count(), mesh.node_count(),
                                       std::move(triplets), /*symmetric=*/true);
}

double lumped_inner(const std::vector<double>& weights, const NodalField& u,
                    const NodalField& v) {
    require_same_mesh(u, v);
    double s = 0.0;
    for (int n = 0; n < u.size(); ++n) s += weights[n] * dot(u[n], v[n]);
    return s;
}

double grad_inner(const SparseMatrix& stiffness, const NodalField& u,
                  const NodalField& v) {
    require_same_mesh(u, v);
    double s = 0.0;
    for (int r = 0; r < stiffness.rows; ++r) {
        Vec3 row{};
        for (int k = stiffness.row_ptr[r]; k < stiffness.row_ptr[r + 1]; ++k)
            row += stiffness.val[k] * v[stiffness.col[k]];
        s += dot(u[r], row);
    }
    return s;
}

NodalField stiffness_apply(const SparseMatrix& stiffness, const NodalField& u) {
    NodalField y(u.mesh());
    for (int r = 0; r < stiffness.rows; ++r) {
        Vec3 row{};
        for (int k = stiffness.row_ptr[r]; k < stiffness.row_ptr[r + 1]; ++k)
            row += stiffness.val[k] * u[stiffness.col[k]];
        y[r] = row;
    }
    return y;
}

std::vector<std::array<Vec3, 2>> element_gradients(const Mesh& mesh,
                                                   const NodalField& u) {
    std::vector<std::array<Vec3, 2>> grads(mesh.element_count());
    for (int e = 0; e < mesh.element_count(); ++e) {
        const auto& t = mesh.elements[e];
        const auto& g = mesh.basis_gradients[e];
        Vec3 dx{}, dy{};
        for (int i = 0; i < 3; ++i) {
            dx += g[i].x * u[t[i]];
            dy += g[i].y * u[t[i]];
        }
        grads[e] = {dx, dy};
    }
    return grads;
}

double discrete_lp_norm(const NodalField& u, double p) {
    if (p < 1.0) throw std::invalid_argument("discrete_lp_norm: p must be >= 1");
    if (std::isinf(p)) {
        double m = 0.0;
        for (int n = 0; n < u.size(); ++n) m = std::max(m, norm(u[n]));
        return m;
    }
    const double h = u.mesh().h;
    double s = 0.0;
    for (int n = 0; n < u.size(); ++n) s += std::pow(norm(u[n]), p);
    return std::pow(h * h * s, 1.0 / p);
}

double edge_midpoint_integral(const NodalField& u,
                              const std::function<double(const Vec3&)>& f) {
    const Mesh& mesh = u.mesh();
    double s = 0.0;
    for (int e = 0; e < mesh.element_count(); ++e) {
        const auto& t = mesh.elements[e];
        const Vec3 a = u[t[0]], b = u[t[1]], c = u[t[2]];
        const double w = mesh.areas[e] / 3.0;
        s += w * (f(0.5 * (a + b)) + f(0.5 * (b + c)) + f(0.5 * (c + a)));
    }
    return s;
}

}  // namespace sllg
