#include "field.hpp"

#include <stdexcept>

namespace sllg {

NodalField interpolate(const Mesh& mesh, const std::function<Vec3(Vec2)>& f) {
    NodalField u(mesh);
    for (int n = 0; n < mesh.node_count(); ++n) {
        const Vec3 v = f(mesh.nodes[n]);
        if (!finite(v)) throw std::invalid_argument("interpolate: non-finite sample");
        u[n] = v;
    }
    return u;
}

NodalField project_to_sphere(const NodalField& u) {
    NodalField p(u.mesh());
    for (int n = 0; n < u.size(); ++n) {
        const double len = norm(u[n]);
        if (len < 1e-14)
            throw std::domain_error("project_to_sphere: zero nodal vector");
        p[n] = u[n] / len;
    }
    return p;
}

void require_same_mesh(const NodalField& a, const NodalField& b) {
    if (!a.same_mesh(b))
        throw std::invalid_argument("nodal fields live on different meshes");
}

}  // namespace sllg
