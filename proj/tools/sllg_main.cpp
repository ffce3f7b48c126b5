// Command-line front end. Links only the C API of the shared library.

#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "sllg/sllg.h"

namespace {

struct ConfigHandle {
    sllg_config* cfg = sllg_config_new();
    ~ConfigHandle() { sllg_config_free(cfg); }
};

int status_to_exit_code(sllg_status s) {
    switch (s) {
        case SLLG_OK: return 0;
        case SLLG_ERR_ARG:
        case SLLG_ERR_CONFIG: return 2;
        case SLLG_ERR_SOLVER: return 3;
        default: return 4;
    }
}

int finish(sllg_status s) {
    if (s != SLLG_OK) std::fprintf(stderr, "error: %s\n", sllg_last_error());
    return status_to_exit_code(s);
}

void add_common_options(CLI::App* cmd, std::vector<std::pair<std::string, std::string>>& kv,
                        std::string& config_file) {
    cmd->add_option("--config", config_file, "JSON config file (flags override it)");
    auto opt = [cmd, &kv](const std::string& flag, const std::string& key,
                          const std::string& help) {
        cmd->add_option_function<std::string>(
            flag, [&kv, key](const std::string& v) { kv.emplace_back(key, v); }, help);
    };
    opt("--n", "n", "mesh subdivisions per side");
    opt("--steps", "steps", "number of time steps J (k = T/J)");
    opt("--k-rule", "k_rule", "time step rule: h, h/2 or h/4 (h = 1/n)");
    opt("--T", "T", "final time");
    opt("--theta", "theta", "implicitness weight in [0, 1]");
    opt("--lambda1", "lambda1", "precession coefficient (nonzero)");
    opt("--lambda2", "lambda2", "damping coefficient (positive)");
    opt("--paths", "paths", "Monte Carlo paths L");
    opt("--seed", "seed", "master seed");
    opt("--g", "g", "noise direction \"gx,gy,gz\" or catalog id (helix)");
    opt("--workers", "workers", "worker threads (0 = auto)");
    opt("--out", "out", "output directory");
    opt("--snapshot-steps", "snapshot_steps", "comma list of snapshot steps");
    opt("--n-list", "n_list", "comma list of mesh sizes (convergence)");
    opt("--lambda2-list", "lambda2_list", "comma list of lambda2 values (energy)");
    opt("--solver-tol", "solver_tol", "relative Krylov tolerance");
    cmd->add_flag_function(
        "--full-scale",
        [&kv](std::int64_t) { kv.emplace_back("full_scale", "1"); },
        "full-size experiment defaults instead of desk scale");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stochastic Landau-Lifshitz-Gilbert finite element simulator"};
    app.require_subcommand(1);

    std::vector<std::pair<std::string, std::string>> kv;
    std::string config_file;

    CLI::App* simulate =
        app.add_subcommand("simulate", "run one path; write per-step trace and final fields");
    CLI::App* convergence =
        app.add_subcommand("convergence", "modulus-deviation error table over a mesh list");
    CLI::App* energy =
        app.add_subcommand("energy", "ensemble energy traces per lambda2, with snapshots");
    for (CLI::App* cmd : {simulate, convergence, energy})
        add_common_options(cmd, kv, config_file);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    ConfigHandle handle;
    if (!handle.cfg) {
        std::fprintf(stderr, "error: out of memory\n");
        return 4;
    }
    if (!config_file.empty()) {
        const sllg_status s = sllg_config_load_file(handle.cfg, config_file.c_str());
        if (s != SLLG_OK) return finish(s);
    }
    for (const auto& [key, value] : kv) {
        const sllg_status s = sllg_config_set(handle.cfg, key.c_str(), value.c_str());
        if (s != SLLG_OK) return finish(s);
    }

    if (simulate->parsed()) return finish(sllg_run_simulate(handle.cfg));
    if (convergence->parsed()) return finish(sllg_run_convergence(handle.cfg));
    return finish(sllg_run_energy(handle.cfg));
}
