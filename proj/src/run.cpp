#include "run.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>

#include "csvfmt.hpp"
#include "errors.hpp"
#include "initial_data.hpp"
#include "monte_carlo.hpp"
#include "scheme.hpp"
#include "sha1.hpp"
#include "vtk.hpp"

namespace sllg {

namespace {

/// Collects output files and writes the run manifest (config, seed, git-style
/// content hash of every artifact) last.
class OutputDir {
public:
    explicit OutputDir(const std::string& dir) : dir_(dir) {
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        if (ec) throw IoError("cannot create output directory '" + dir + "'");
    }

    void write(const std::string& name, const std::string& content) {
        write_text_file((std::filesystem::path(dir_) / name).string(), content);
        hashes_[name] = git_blob_hash(content);
    }

    void write_manifest(const std::string& command, const SimulationConfig& cfg,
                        const nlohmann::json& measurements) {
        nlohmann::json m;
        m["command"] = command;
        m["config"] = cfg.to_json();
        m["outputs"] = hashes_;
        m["measurements"] = measurements;
        write_text_file((std::filesystem::path(dir_) / "manifest.json").string(),
                        m.dump(2) + "\n");
    }

private:
    std::string dir_;
    std::map<std::string, std::string> hashes_;
};

void warn_if_unstable(const SimulationConfig& cfg, const Mesh& mesh, double dt) {
    if (cfg.theta < 0.5 && dt > mesh.h * mesh.h)
        std::fprintf(stderr,
                     "warning: theta=%g < 1/2 needs k = o(h^2) for stability; "
                     "here k=%g exceeds h^2=%g\n",
                     cfg.theta, dt, mesh.h * mesh.h);
}

SchemeParams scheme_params(const SimulationConfig& cfg, int steps) {
    SchemeParams p;
    p.lambda1 = cfg.lambda1;
    p.lambda2 = cfg.lambda2;
    p.theta = cfg.theta;
    p.T = cfg.T;
    p.steps = steps;
    return p;
}

std::string lambda_tag(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", value);
    std::string tag(buf);
    for (char& c : tag)
        if (c == '.') c = 'p';
    return tag;
}

}  // namespace

void run_simulate(const SimulationConfig& cfg) {
    cfg.validate();
    const int steps = cfg.resolved_steps(cfg.n);
    const Mesh mesh = uniform_unit_square_mesh(cfg.n);
    const NoiseCoefficient nc = make_noise_coefficient(mesh, cfg.g);
    const SchemeParams params = scheme_params(cfg, steps);
    warn_if_unstable(cfg, mesh, params.dt());

    const SchemeContext ctx(mesh, nc, params, cfg.solver_tol);
    const NodalField m0 = interpolate(mesh, initial_magnetization);
    const BrownianPath path = BrownianPath::sample(cfg.seed, 0, steps, params.dt());
    const Trajectory traj = run_trajectory(ctx, m0, path.cumulative);
    const PathState& state = traj.final_state;

    std::string csv = "j,t,energy,v_norm_sq,solver_iterations,residual\n";
    for (int j = 0; j < steps; ++j) {
        csv += std::to_string(j) + "," + fmt_double(j * params.dt()) + "," +
               fmt_double(state.energy_trace[j]) + "," +
               fmt_double(state.v_norm_trace[j]) + "," +
               std::to_string(state.reports[j].iterations) + "," +
               fmt_double(state.reports[j].residual) + "\n";
    }

    OutputDir out(cfg.out);
    out.write("trace.csv", csv);
    out.write("final_m.vtk", vtk_field_string(traj.m[steps], "corotating magnetization", "m"));
    const NodalField lab = to_lab(traj.m[steps], path.at_step(steps), nc);
    out.write("final_M.vtk", vtk_field_string(lab, "magnetization", "M"));

    nlohmann::json measurements;
    measurements["initial_energy"] = state.energy_trace.front();
    measurements["final_energy"] = state.energy_trace.back();
    measurements["steps"] = steps;
    out.write_manifest("simulate", cfg, measurements);
}

void run_convergence(const SimulationConfig& cfg) {
    cfg.validate();
    SimulationConfig effective = cfg;
    if (effective.k_rule.empty()) effective.k_rule = "h";
    std::vector<int> n_list = cfg.n_list;
    if (n_list.empty()) n_list = cfg.full_scale ? std::vector<int>{10, 20, 30, 40, 50}
                                                : std::vector<int>{5, 10, 20};
    const int paths = cfg.was_set("paths") ? cfg.paths : (cfg.full_scale ? 400 : 20);

    std::string csv = "n,k,L,seed,E_hk\n";
    nlohmann::json rows = nlohmann::json::array();
    for (int n : n_list) {
        const int steps = effective.resolved_steps(n);
        const Mesh mesh = uniform_unit_square_mesh(n);
        const NoiseCoefficient nc = make_noise_coefficient(mesh, cfg.g);
        const SchemeParams params = scheme_params(cfg, steps);
        warn_if_unstable(cfg, mesh, params.dt());

        const SchemeContext ctx(mesh, nc, params, cfg.solver_tol);
        const NodalField m0 = interpolate(mesh, initial_magnetization);
        MonteCarloConfig mc;
        mc.paths = paths;
        mc.seed = cfg.seed;
        mc.workers = cfg.workers;
        const EnsembleStats stats = run_monte_carlo(ctx, m0, mc);

        csv += std::to_string(n) + "," + fmt_double(params.dt()) + "," +
               std::to_string(paths) + "," + std::to_string(cfg.seed) + "," +
               fmt_double(stats.ehk) + "\n";
        rows.push_back({{"n", n}, {"steps", steps}, {"k", params.dt()},
                        {"E_hk", stats.ehk}});
    }

    OutputDir out(cfg.out);
    out.write("errors.csv", csv);
    nlohmann::json measurements;
    measurements["rows"] = rows;
    measurements["paths"] = paths;
    measurements["k_rule"] = effective.k_rule;
    out.write_manifest("convergence", cfg, measurements);
}

void run_energy(const SimulationConfig& cfg) {
    cfg.validate();
    const int n = cfg.was_set("n") ? cfg.n : (cfg.full_scale ? 60 : 20);
    const int default_steps = cfg.full_scale ? 100 : 50;
    SimulationConfig stepped = cfg;
    stepped.n = n;
    if (!cfg.was_set("steps") && cfg.k_rule.empty()) stepped.steps = default_steps;
    const int steps = stepped.resolved_steps(n);
    const int paths = cfg.was_set("paths") ? cfg.paths : (cfg.full_scale ? 400 : 20);
    std::vector<double> lambda2_list = cfg.lambda2_list;
    if (lambda2_list.empty()) lambda2_list = {cfg.lambda2};

    const Mesh mesh = uniform_unit_square_mesh(n);
    const NoiseCoefficient nc = make_noise_coefficient(mesh, cfg.g);
    const NodalField m0 = interpolate(mesh, initial_magnetization);
    const std::vector<int> snapshot_steps = cfg.resolved_snapshot_steps(steps);

    OutputDir out(cfg.out);
    nlohmann::json measurements;
    for (double lambda2 : lambda2_list) {
        SimulationConfig run_cfg = stepped;
        run_cfg.lambda2 = lambda2;
        const SchemeParams params = scheme_params(run_cfg, steps);
        warn_if_unstable(run_cfg, mesh, params.dt());

        const SchemeContext ctx(mesh, nc, params, cfg.solver_tol);
        MonteCarloConfig mc;
        mc.paths = paths;
        mc.seed = cfg.seed;
        mc.workers = cfg.workers;
        mc.snapshot_steps = snapshot_steps;
        const EnsembleStats stats = run_monte_carlo(ctx, m0, mc);

        std::string csv = "t,mean_energy,std_energy\n";
        for (int j = 0; j <= steps; ++j)
            csv += fmt_double(j * params.dt()) + "," + fmt_double(stats.mean_energy[j]) +
                   "," + fmt_double(stats.std_energy[j]) + "\n";
        const std::string tag = lambda_tag(lambda2);
        out.write("energy_lambda2_" + tag + ".csv", csv);

        for (std::size_t s = 0; s < snapshot_steps.size(); ++s) {
            const std::string name = "snapshot_lambda2_" + tag + "_step_" +
                                     std::to_string(snapshot_steps[s]) + ".vtk";
            out.write(name, vtk_field_string(stats.mean_magnetization[s],
                                             "ensemble mean magnetization", "mean_M"));
        }

        nlohmann::json entry;
        entry["lambda2"] = lambda2;
        entry["initial_mean_energy"] = stats.mean_energy.front();
        entry["final_mean_energy"] = stats.mean_energy.back();
        entry["energy_ratio_final_over_initial"] =
            stats.mean_energy.back() / stats.mean_energy.front();
        measurements["lambda2_" + tag] = entry;
    }
    measurements["n"] = n;
    measurements["steps"] = steps;
    measurements["paths"] = paths;
    out.write_manifest("energy", cfg, measurements);
}

}  // namespace sllg
