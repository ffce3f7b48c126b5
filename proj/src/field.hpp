#pragma once

#include <functional>
#include <vector>

#include "mesh.hpp"
#include "vec.hpp"

namespace sllg {

/// Continuous piecewise-linear vector field, stored as one 3-vector per mesh
/// node. Value type; copies are cheap relative to the per-step solves.
class NodalField {
public:
    NodalField() = default;
    explicit NodalField(const Mesh& mesh) : mesh_(&mesh), values_(mesh.node_count()) {}
    NodalField(const Mesh& mesh, Vec3 fill)
        : mesh_(&mesh), values_(mesh.node_count(), fill) {}

    const Mesh& mesh() const { return *mesh_; }
    int size() const { return static_cast<int>(values_.size()); }

    Vec3& operator[](int n) { return values_[n]; }
    const Vec3& operator[](int n) const { return values_[n]; }

    std::vector<Vec3>& values() { return values_; }
    const std::vector<Vec3>& values() const { return values_; }

    bool same_mesh(const NodalField& other) const { return mesh_ == other.mesh_; }

private:
    const Mesh* mesh_ = nullptr;
    std::vector<Vec3> values_;
};

/// Nodal interpolation: samples f at every mesh node. Throws on non-finite
/// samples.
NodalField interpolate(const Mesh& mesh, const std::function<Vec3(Vec2)>& f);

/// Nodewise renormalization u(x_n)/|u(x_n)|. Throws std::domain_error when a
/// nodal value is (numerically) zero.
NodalField project_to_sphere(const NodalField& u);

void require_same_mesh(const NodalField& a, const NodalField& b);

}  // namespace sllg
