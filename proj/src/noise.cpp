#include "noise.hpp"

#include <cmath>
#include <stdexcept>

namespace sllg {

NoiseCoefficient NoiseCoefficient::constant(const Mesh& mesh, Vec3 g) {
    const double len = norm(g);
    if (len < 1e-14)
        throw std::invalid_argument("NoiseCoefficient: zero direction");
    const Vec3 unit = g / len;
    NoiseCoefficient nc;
    nc.constant_ = true;
    nc.g_ = NodalField(mesh, unit);
    nc.grad_g_.assign(mesh.node_count(), {Vec3{}, Vec3{}});
    nc.lap_g_ = NodalField(mesh, Vec3{});
    return nc;
}

NoiseCoefficient NoiseCoefficient::analytic(
    const Mesh& mesh, const std::function<Vec3(Vec2)>& g,
    const std::function<std::array<Vec3, 2>(Vec2)>& grad_g,
    const std::function<Vec3(Vec2)>& lap_g) {
    NoiseCoefficient nc;
    nc.constant_ = false;
    nc.g_ = NodalField(mesh);
    nc.grad_g_.resize(mesh.node_count());
    nc.lap_g_ = NodalField(mesh);
    for (int n = 0; n < mesh.node_count(); ++n) {
        const Vec2 x = mesh.nodes[n];
        Vec3 gn = g(x);
        if (std::abs(norm(gn) - 1.0) > 1e-9)
            throw std::invalid_argument("NoiseCoefficient: |g| != 1 at a node");
        nc.g_[n] = normalized(gn);
        nc.grad_g_[n] = grad_g(x);
        nc.lap_g_[n] = lap_g(x);
        if (!finite(nc.grad_g_[n][0]) || !finite(nc.grad_g_[n][1]) || !finite(nc.lap_g_[n]))
            throw std::invalid_argument("NoiseCoefficient: non-finite derivative sample");
    }
    return nc;
}

NodalField cross_g(const NodalField& u, const NoiseCoefficient& nc) {
    require_same_mesh(u, nc.g());
    NodalField out(u.mesh());
    for (int n = 0; n < u.size(); ++n) out[n] = cross(u[n], nc.g()[n]);
    return out;
}

Vec3 rotate_about_axis(double s, Vec3 u, Vec3 g) {
    const Vec3 ug = cross(u, g);
    return u + std::sin(s) * ug + (1.0 - std::cos(s)) * cross(ug, g);
}

NodalField rotate_about_g(double s, const NodalField& u, const NoiseCoefficient& nc) {
    require_same_mesh(u, nc.g());
    NodalField out(u.mesh());
    const double sn = std::sin(s);
    const double cs1 = 1.0 - std::cos(s);
    for (int n = 0; n < u.size(); ++n) {
        const Vec3 ug = cross(u[n], nc.g()[n]);
        out[n] = u[n] + sn * ug + cs1 * cross(ug, nc.g()[n]);
    }
    return out;
}

NodalField laplace_commutator(const NodalField& u, const NoiseCoefficient& nc) {
    require_same_mesh(u, nc.g());
    const Mesh& mesh = u.mesh();
    NodalField out(mesh);

    // Zeroth-order part, fully nodal.
    for (int n = 0; n < u.size(); ++n) out[n] = cross(u[n], nc.lap_g()[n]);

    if (nc.is_constant()) return out;

    // Gradient part: element-constant, recovered to nodes by area-weighted
    // averaging over incident elements.
    std::vector<Vec3> acc(mesh.node_count(), Vec3{});
    std::vector<double> patch_area(mesh.node_count(), 0.0);
    for (int e = 0; e < mesh.element_count(); ++e) {
        const auto& t = mesh.elements[e];
        const auto& bg = mesh.basis_gradients[e];
        Vec3 du_dx{}, du_dy{};
        std::array<Vec3, 2> gg{};  // I(dg/dx_i) at the element centroid
        for (int i = 0; i < 3; ++i) {
            du_dx += bg[i].x * u[t[i]];
            du_dy += bg[i].y * u[t[i]];
            gg[0] += (1.0 / 3.0) * nc.grad_g()[t[i]][0];
            gg[1] += (1.0 / 3.0) * nc.grad_g()[t[i]][1];
        }
        const Vec3 q = 2.0 * (cross(du_dx, gg[0]) + cross(du_dy, gg[1]));
        const double area = mesh.areas[e];
        for (int i = 0; i < 3; ++i) {
            acc[t[i]] += area * q;
            patch_area[t[i]] += area;
        }
    }
    for (int n = 0; n < mesh.node_count(); ++n) out[n] += acc[n] / patch_area[n];
    return out;
}

NodalField noise_forcing(double w, const NodalField& u, const NoiseCoefficient& nc,
                         double lambda1, double lambda2) {
    require_same_mesh(u, nc.g());
    if (nc.is_constant()) return NodalField(u.mesh(), Vec3{});

    const double sn = std::sin(w);
    const double cs1 = 1.0 - std::cos(w);

    const NodalField cu = laplace_commutator(u, nc);
    const NodalField cgu = laplace_commutator(cross_g(u, nc), nc);
    const NodalField gcu = cross_g(cu, nc);

    NodalField d(u.mesh());
    for (int n = 0; n < u.size(); ++n)
        d[n] = sn * cu[n] + cs1 * (gcu[n] + cgu[n]);

    NodalField ct(u.mesh());
    for (int n = 0; n < u.size(); ++n) {
        const Vec3 gd = cross(d[n], nc.g()[n]);
        ct[n] = d[n] - sn * gd + cs1 * cross(gd, nc.g()[n]);
    }

    const double l1sq = lambda1 * lambda1;
    const double l2sq = lambda2 * lambda2;
    NodalField r(u.mesh());
    for (int n = 0; n < u.size(); ++n)
        r[n] = l2sq * cross(u[n], cross(u[n], ct[n])) - l1sq * ct[n];
    return r;
}

Mat3 cross_shift_matrix(double lambda1, double lambda2, Vec3 zeta) {
    Mat3 m;
    m.a = {{{lambda1, lambda2 * zeta.z, -lambda2 * zeta.y},
            {-lambda2 * zeta.z, lambda1, lambda2 * zeta.x},
            {lambda2 * zeta.y, -lambda2 * zeta.x, lambda1}}};
    return m;
}

Vec3 cross_shift_solve(double lambda1, double lambda2, Vec3 zeta, Vec3 psi) {
    if (lambda1 == 0.0)
        throw std::invalid_argument("cross_shift_solve: lambda1 must be nonzero");
    if (std::abs(norm(zeta) - 1.0) > 1e-9)
        throw std::invalid_argument("cross_shift_solve: zeta must be a unit vector");

    const Mat3 m = cross_shift_matrix(lambda1, lambda2, zeta);
    const double d = det(m);

    auto replace_col = [&m](int c, Vec3 b) {
        Mat3 r = m;
        for (int i = 0; i < 3; ++i) r.a[i][c] = b[i];
        return r;
    };
    return {det(replace_col(0, psi)) / d,
            det(replace_col(1, psi)) / d,
            det(replace_col(2, psi)) / d};
}

}  // namespace sllg
