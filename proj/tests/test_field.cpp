#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "assembly.hpp"
#include "field.hpp"
#include "initial_data.hpp"
#include "mesh.hpp"

using namespace sllg;

TEST_CASE("interpolation samples nodal values") {
    const Mesh mesh = uniform_unit_square_mesh(3);
    const NodalField c = interpolate(mesh, [](Vec2) { return Vec3{1.0, 0.0, 0.0}; });
    for (int n = 0; n < c.size(); ++n) {
        CHECK(c[n].x == 1.0);
        CHECK(c[n].y == 0.0);
        CHECK(c[n].z == 0.0);
    }

    // Interpolation is the identity on nodal data.
    auto f = [](Vec2 x) { return Vec3{x.x, x.y, x.x * x.y}; };
    const NodalField u = interpolate(mesh, f);
    for (int n = 0; n < u.size(); ++n) {
        const Vec3 expected = f(mesh.nodes[n]);
        CHECK(norm(u[n] - expected) == 0.0);
    }

    CHECK_THROWS_AS(
        interpolate(mesh, [](Vec2) { return Vec3{std::nan(""), 0.0, 0.0}; }),
        std::invalid_argument);
}

TEST_CASE("initial magnetization interpolates to the north pole at the center") {
    const Mesh mesh = uniform_unit_square_mesh(4);  // even n: (0,0) is a node
    const NodalField m0 = interpolate(mesh, initial_magnetization);
    const int center = (4 + 1) * 2 + 2;
    CHECK(m0[center].x == doctest::Approx(0.0));
    CHECK(m0[center].y == doctest::Approx(0.0));
    CHECK(m0[center].z == doctest::Approx(1.0));
}

TEST_CASE("projection to the sphere") {
    const Mesh mesh = uniform_unit_square_mesh(2);
    NodalField u(mesh, Vec3{1.0, 1.0, 0.0});
    const NodalField p = project_to_sphere(u);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int n = 0; n < p.size(); ++n) {
        CHECK(p[n].x == doctest::Approx(inv_sqrt2).epsilon(1e-15));
        CHECK(p[n].y == doctest::Approx(inv_sqrt2).epsilon(1e-15));
        CHECK(norm(p[n]) == doctest::Approx(1.0).epsilon(1e-15));
    }

    // Idempotent; a unit field is (numerically) unchanged.
    const NodalField pp = project_to_sphere(p);
    for (int n = 0; n < p.size(); ++n) CHECK(norm(pp[n] - p[n]) <= 1e-15);

    NodalField zero(mesh, Vec3{});
    CHECK_THROWS_AS(project_to_sphere(zero), std::domain_error);
}

TEST_CASE("projection does not increase Dirichlet energy on acute meshes") {
    std::mt19937_64 gen(23);
    for (int n : {4, 8}) {
        const Mesh mesh = uniform_unit_square_mesh(n);
        const SparseMatrix a = assemble_stiffness(mesh);
        REQUIRE(check_mesh_condition(mesh, a).ok);
        std::uniform_real_distribution<double> dir(-1.0, 1.0);
        std::uniform_real_distribution<double> len(1.0, 3.0);
        for (int trial = 0; trial < 100; ++trial) {
            NodalField u(mesh);
            for (int i = 0; i < u.size(); ++i) {
                Vec3 v{dir(gen), dir(gen), dir(gen)};
                while (norm(v) < 1e-3) v = {dir(gen), dir(gen), dir(gen)};
                u[i] = len(gen) * normalized(v);  // nodal moduli >= 1
            }
            const double before = grad_energy(a, u);
            const double after = grad_energy(a, project_to_sphere(u));
            CHECK(after <= before * (1.0 + 1e-12) + 1e-12);
        }
    }
}

TEST_CASE("nodal interpolation does not increase the sup norm") {
    const Mesh mesh = uniform_unit_square_mesh(6);
    auto f = [](Vec2 x) { return Vec3{std::sin(3.0 * x.x), std::cos(2.0 * x.y), x.x}; };
    const NodalField u = interpolate(mesh, f);
    double sup = 0.0;
    for (int i = 0; i <= 120; ++i)
        for (int j = 0; j <= 120; ++j)
            sup = std::max(sup, norm(f({-0.5 + i / 120.0, -0.5 + j / 120.0})));
    CHECK(discrete_lp_norm(u, std::numeric_limits<double>::infinity()) <= sup + 1e-12);
}
