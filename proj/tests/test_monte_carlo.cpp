#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "assembly.hpp"
#include "initial_data.hpp"
#include "mesh.hpp"
#include "monte_carlo.hpp"

using namespace sllg;

namespace {

SchemeParams small_params(int steps) {
    SchemeParams p;
    p.theta = 0.7;
    p.steps = steps;
    return p;
}

}  // namespace

TEST_CASE("modulus deviation estimator: exactly unit fields give zero") {
    const Mesh mesh = uniform_unit_square_mesh(4);
    const NoiseCoefficient nc = NoiseCoefficient::constant(mesh, {1.0, 0.0, 0.0});
    const SchemeContext ctx(mesh, nc, small_params(2));

    // A constant unit field stays constant; |M| is 1 everywhere, including at
    // the quadrature points.
    const NodalField m0(mesh, Vec3{0.0, 0.0, 1.0});
    MonteCarloConfig mc;
    mc.paths = 3;
    const EnsembleStats stats = run_monte_carlo(ctx, m0, mc);
    CHECK(stats.ehk <= 1e-13);
}

TEST_CASE("modulus deviation arithmetic on one element and one step") {
    Mesh mesh;
    mesh.nodes = {{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}};
    mesh.elements = {{0, 1, 2}};
    mesh.finalize();

    // Constant |M| = 0.9 at every quadrature point; one step of length k.
    const double k = 0.25;
    const double area = 0.5;
    NodalField constant(mesh, Vec3{0.9, 0.0, 0.0});
    const double integral = edge_midpoint_integral(constant, [](const Vec3& v) {
        const double d = 1.0 - norm(v);
        return d * d;
    });
    const double e = std::sqrt(k * integral);
    CHECK(e == doctest::Approx(0.1 * std::sqrt(area * k)).epsilon(1e-12));
}

TEST_CASE("single-path ensemble equals the path itself") {
    const Mesh mesh = uniform_unit_square_mesh(5);
    const NoiseCoefficient nc = make_noise_coefficient(mesh, "helix");
    const SchemeContext ctx(mesh, nc, small_params(4));
    const NodalField m0 = interpolate(mesh, initial_magnetization);

    MonteCarloConfig mc;
    mc.paths = 1;
    mc.seed = 99;
    mc.snapshot_steps = {0, 4};
    const EnsembleStats stats = run_monte_carlo(ctx, m0, mc);

    const BrownianPath path = BrownianPath::sample(99, 0, 4, ctx.params.dt());
    const Trajectory traj = run_trajectory(ctx, m0, path.cumulative);
    const PathEstimates est = estimate_path(ctx, traj, path, mc.snapshot_steps);

    CHECK(stats.ehk == std::sqrt(est.modulus_dev_sq));
    for (int j = 0; j <= 4; ++j) {
        CHECK(stats.mean_energy[j] == est.lab_energy[j]);
        CHECK(stats.std_energy[j] == 0.0);
    }
    for (int n = 0; n < mesh.node_count(); ++n)
        CHECK(norm(stats.mean_magnetization[1][n] - est.snapshots[1][n]) == 0.0);
}

TEST_CASE("reruns with the same master seed are bitwise identical") {
    const Mesh mesh = uniform_unit_square_mesh(4);
    const NoiseCoefficient nc = make_noise_coefficient(mesh, "helix");
    const SchemeContext ctx(mesh, nc, small_params(4));
    const NodalField m0 = interpolate(mesh, initial_magnetization);

    MonteCarloConfig mc;
    mc.paths = 6;
    mc.seed = 31415;
    const EnsembleStats a = run_monte_carlo(ctx, m0, mc);
    const EnsembleStats b = run_monte_carlo(ctx, m0, mc);
    CHECK(a.ehk == b.ehk);
    for (std::size_t j = 0; j < a.mean_energy.size(); ++j) {
        CHECK(a.mean_energy[j] == b.mean_energy[j]);
        CHECK(a.std_energy[j] == b.std_energy[j]);
    }

    // Worker count must not change the result.
    MonteCarloConfig mc4 = mc;
    mc4.workers = 4;
    const EnsembleStats c = run_monte_carlo(ctx, m0, mc4);
    CHECK(a.ehk == c.ehk);
    for (std::size_t j = 0; j < a.mean_energy.size(); ++j)
        CHECK(a.mean_energy[j] == c.mean_energy[j]);
}

TEST_CASE("shared deterministic trajectory is bitwise equal to the generic loop") {
    const Mesh mesh = uniform_unit_square_mesh(5);
    const NoiseCoefficient nc = NoiseCoefficient::constant(mesh, {1.0, 0.0, 0.0});
    const SchemeContext ctx(mesh, nc, small_params(5));
    const NodalField m0 = interpolate(mesh, initial_magnetization);

    MonteCarloConfig fast;
    fast.paths = 4;
    fast.seed = 2718;
    fast.snapshot_steps = {0, 5};
    MonteCarloConfig generic = fast;
    generic.share_deterministic_trajectory = false;

    const EnsembleStats a = run_monte_carlo(ctx, m0, fast);
    const EnsembleStats b = run_monte_carlo(ctx, m0, generic);
    CHECK(a.ehk == b.ehk);
    for (std::size_t j = 0; j < a.mean_energy.size(); ++j)
        CHECK(a.mean_energy[j] == b.mean_energy[j]);
    for (std::size_t s = 0; s < a.mean_magnetization.size(); ++s)
        for (int n = 0; n < mesh.node_count(); ++n)
            CHECK(norm(a.mean_magnetization[s][n] - b.mean_magnetization[s][n]) == 0.0);
}

TEST_CASE("ensemble means are permutation invariant to 1e-12") {
    const Mesh mesh = uniform_unit_square_mesh(2);
    std::mt19937_64 gen(55);
    std::uniform_real_distribution<double> dist(0.0, 10.0);

    std::vector<PathEstimates> estimates;
    for (int i = 0; i < 40; ++i) {
        PathEstimates e;
        e.modulus_dev_sq = dist(gen);
        e.lab_energy = {dist(gen), dist(gen), dist(gen)};
        estimates.push_back(std::move(e));
    }

    auto accumulate = [&](const std::vector<int>& order) {
        EnsembleAccumulator acc(mesh, 3, {});
        for (int idx : order) acc.add(estimates[idx]);
        return acc.finalize();
    };

    std::vector<int> order(estimates.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    const EnsembleStats forward = accumulate(order);
    std::shuffle(order.begin(), order.end(), gen);
    const EnsembleStats shuffled = accumulate(order);

    CHECK(std::abs(forward.ehk - shuffled.ehk) <= 1e-12);
    for (int j = 0; j < 3; ++j)
        CHECK(std::abs(forward.mean_energy[j] - shuffled.mean_energy[j]) <= 1e-12);
}

TEST_CASE("constant g: lab energy equals co-rotating energy") {
    const Mesh mesh = uniform_unit_square_mesh(6);
    const NoiseCoefficient nc = NoiseCoefficient::constant(mesh, {1.0, 0.0, 0.0});
    const SchemeContext ctx(mesh, nc, small_params(6));
    const NodalField m0 = interpolate(mesh, initial_magnetization);

    const BrownianPath path = BrownianPath::sample(11, 0, 6, ctx.params.dt());
    const Trajectory traj = run_trajectory(ctx, m0, path.cumulative);
    const PathEstimates est = estimate_path(ctx, traj, path, {});
    for (int j = 0; j <= 6; ++j) {
        const double corot = grad_energy(ctx.stiffness, traj.m[j]);
        CHECK(std::abs(est.lab_energy[j] - corot) <= 1e-12 * std::max(1.0, corot));
    }
}

TEST_CASE("doubling the path count moves the estimate at Monte Carlo scale") {
    const Mesh mesh = uniform_unit_square_mesh(4);
    const NoiseCoefficient nc = make_noise_coefficient(mesh, "helix");
    const SchemeContext ctx(mesh, nc, small_params(4));
    const NodalField m0 = interpolate(mesh, initial_magnetization);

    MonteCarloConfig mc10;
    mc10.paths = 10;
    mc10.seed = 5;
    MonteCarloConfig mc20 = mc10;
    mc20.paths = 20;

    const double e10 = run_monte_carlo(ctx, m0, mc10).mean_energy.back();
    const double e20 = run_monte_carlo(ctx, m0, mc20).mean_energy.back();
    // Sanity only: the two estimates agree within a generous O(1/sqrt(L)).
    CHECK(std::abs(e20 - e10) <= 5.0 / std::sqrt(10.0) * std::max(1.0, std::abs(e10)));
}

TEST_CASE("energy trace starts from the initial interpolant independent of seed") {
    const Mesh mesh = uniform_unit_square_mesh(5);
    const NoiseCoefficient nc = make_noise_coefficient(mesh, "helix");
    const SchemeContext ctx(mesh, nc, small_params(3));
    const NodalField m0 = interpolate(mesh, initial_magnetization);
    const double e0 = grad_energy(ctx.stiffness, init_path_state(ctx, m0).m);

    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        MonteCarloConfig mc;
        mc.paths = 2;
        mc.seed = seed;
        const EnsembleStats stats = run_monte_carlo(ctx, m0, mc);
        CHECK(stats.mean_energy[0] == doctest::Approx(e0).epsilon(1e-14));
    }
}

TEST_CASE("invalid monte carlo settings are rejected") {
    const Mesh mesh = uniform_unit_square_mesh(2);
    const NoiseCoefficient nc = NoiseCoefficient::constant(mesh, {1.0, 0.0, 0.0});
    const SchemeContext ctx(mesh, nc, small_params(2));
    const NodalField m0(mesh, Vec3{0.0, 0.0, 1.0});

    MonteCarloConfig mc;
    mc.paths = 0;
    CHECK_THROWS(run_monte_carlo(ctx, m0, mc));
    mc.paths = 1;
    mc.snapshot_steps = {5};
    CHECK_THROWS(run_monte_carlo(ctx, m0, mc));
}
