#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <map>
#include <set>

#include "assembly.hpp"
#include "mesh.hpp"

using namespace sllg;

namespace {

std::map<std::pair<int, int>, int> edge_counts(const Mesh& mesh) {
    std::map<std::pair<int, int>, int> counts;
    for (const auto& t : mesh.elements)
        for (int i = 0; i < 3; ++i) {
            int a = t[i], b = t[(i + 1) % 3];
            if (a > b) std::swap(a, b);
            ++counts[{a, b}];
        }
    return counts;
}

}  // namespace

TEST_CASE("uniform unit square mesh counts and diameter") {
    const Mesh m1 = uniform_unit_square_mesh(1);
    CHECK(m1.node_count() == 4);
    CHECK(m1.element_count() == 2);

    const Mesh m2 = uniform_unit_square_mesh(2);
    CHECK(m2.node_count() == 9);
    CHECK(m2.element_count() == 8);

    const Mesh m10 = uniform_unit_square_mesh(10);
    CHECK(m10.node_count() == 121);
    CHECK(m10.element_count() == 200);
    CHECK(m10.h == doctest::Approx(std::sqrt(2.0) / 10.0).epsilon(1e-15));

    CHECK_THROWS_AS(uniform_unit_square_mesh(0), std::invalid_argument);
}

TEST_CASE("element areas partition the unit square") {
    for (int n : {1, 3, 8}) {
        const Mesh mesh = uniform_unit_square_mesh(n);
        double total = 0.0;
        for (double a : mesh.areas) {
            CHECK(a > 0.0);
            total += a;
        }
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("interior edges are shared by exactly two elements") {
    const Mesh mesh = uniform_unit_square_mesh(5);
    const std::set<int> boundary(mesh.boundary_nodes.begin(), mesh.boundary_nodes.end());
    for (const auto& [edge, count] : edge_counts(mesh)) {
        CHECK(count <= 2);
        const bool on_boundary = boundary.count(edge.first) && boundary.count(edge.second);
        if (count == 1) CHECK(on_boundary);
    }
}

TEST_CASE("acuteness condition holds on the uniform meshes") {
    for (int n : {1, 4, 9}) {
        const Mesh mesh = uniform_unit_square_mesh(n);
        const SparseMatrix stiffness = assemble_stiffness(mesh);
        const auto report = check_mesh_condition(mesh, stiffness);
        CHECK(report.ok);
        CHECK(report.violations.empty());
    }
}

TEST_CASE("an obtuse triangle violates the off-diagonal sign condition") {
    Mesh mesh;
    mesh.nodes = {{0.0, 0.0}, {1.0, 0.0}, {-2.0, 1.0}};
    mesh.elements = {{0, 1, 2}};
    mesh.finalize();
    const SparseMatrix stiffness = assemble_stiffness(mesh);
    const auto report = check_mesh_condition(mesh, stiffness);
    CHECK_FALSE(report.ok);
    // The obtuse angle sits at node 0; the positive coupling is between the
    // two acute vertices 1 and 2.
    for (const auto& [i, j] : report.violations) {
        CHECK(i != 0);
        CHECK(j != 0);
    }
}

TEST_CASE("a single right triangle passes the condition") {
    Mesh mesh;
    mesh.nodes = {{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}};
    mesh.elements = {{0, 1, 2}};
    mesh.finalize();
    const SparseMatrix stiffness = assemble_stiffness(mesh);
    CHECK(check_mesh_condition(mesh, stiffness).ok);
}

TEST_CASE("mesh condition rejects mismatched matrices") {
    const Mesh mesh = uniform_unit_square_mesh(2);
    const SparseMatrix wrong = assemble_stiffness(uniform_unit_square_mesh(3));
    CHECK_THROWS_AS(check_mesh_condition(mesh, wrong), std::invalid_argument);
}

TEST_CASE("degenerate elements are rejected") {
    Mesh mesh;
    mesh.nodes = {{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}};
    mesh.elements = {{0, 1, 2}};
    CHECK_THROWS_AS(mesh.finalize(), std::invalid_argument);
}
