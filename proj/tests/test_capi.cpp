#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>

#include "sllg/sllg.h"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

struct Handle {
    sllg_config* cfg = sllg_config_new();
    ~Handle() { sllg_config_free(cfg); }
};

}  // namespace

TEST_CASE("version and null-argument handling") {
    REQUIRE(sllg_version() != nullptr);
    CHECK(std::strlen(sllg_version()) > 0);

    CHECK(sllg_config_set(nullptr, "n", "4") == SLLG_ERR_ARG);
    CHECK(sllg_config_validate(nullptr) == SLLG_ERR_ARG);
    CHECK(sllg_run_simulate(nullptr) == SLLG_ERR_ARG);
    CHECK(std::strlen(sllg_last_error()) > 0);
}

TEST_CASE("config lifecycle, unknown keys, validation errors") {
    Handle h;
    REQUIRE(h.cfg != nullptr);

    CHECK(sllg_config_set(h.cfg, "n", "4") == SLLG_OK);
    CHECK(sllg_config_set(h.cfg, "bogus", "1") == SLLG_ERR_ARG);
    CHECK(std::strlen(sllg_last_error()) > 0);
    CHECK(sllg_config_set(h.cfg, "theta", "nope") == SLLG_ERR_ARG);

    CHECK(sllg_config_set(h.cfg, "lambda2", "-1") == SLLG_OK);
    CHECK(sllg_config_validate(h.cfg) == SLLG_ERR_CONFIG);
    CHECK(std::strlen(sllg_last_error()) > 0);
    CHECK(sllg_config_set(h.cfg, "lambda2", "1") == SLLG_OK);
    CHECK(sllg_config_validate(h.cfg) == SLLG_OK);
    CHECK(sllg_last_error()[0] == '\0');
}

TEST_CASE("simulate through the C surface: layout and determinism") {
    const std::string dir = "capi_sim_out";
    const std::string dir2 = "capi_sim_out_2";
    std::filesystem::remove_all(dir);
    std::filesystem::remove_all(dir2);

    Handle h;
    CHECK(sllg_config_set(h.cfg, "n", "4") == SLLG_OK);
    CHECK(sllg_config_set(h.cfg, "steps", "8") == SLLG_OK);
    CHECK(sllg_config_set(h.cfg, "seed", "42") == SLLG_OK);
    CHECK(sllg_config_set(h.cfg, "out", dir.c_str()) == SLLG_OK);
    REQUIRE(sllg_run_simulate(h.cfg) == SLLG_OK);

    const std::string trace = slurp(dir + "/trace.csv");
    int rows = -1;  // discount the header
    for (char c : trace) rows += (c == '\n');
    CHECK(rows == 8);
    CHECK(std::filesystem::exists(dir + "/final_m.vtk"));
    CHECK(std::filesystem::exists(dir + "/final_M.vtk"));
    CHECK(std::filesystem::exists(dir + "/manifest.json"));

    CHECK(sllg_config_set(h.cfg, "out", dir2.c_str()) == SLLG_OK);
    REQUIRE(sllg_run_simulate(h.cfg) == SLLG_OK);
    CHECK(slurp(dir2 + "/trace.csv") == trace);
    CHECK(slurp(dir2 + "/manifest.json") != "");
    CHECK(slurp(dir2 + "/final_M.vtk") == slurp(dir + "/final_M.vtk"));

    std::filesystem::remove_all(dir);
    std::filesystem::remove_all(dir2);
}

TEST_CASE("convergence and energy through the C surface") {
    const std::string dir = "capi_table_out";
    std::filesystem::remove_all(dir);

    Handle h;
    CHECK(sllg_config_set(h.cfg, "n_list", "2,4") == SLLG_OK);
    CHECK(sllg_config_set(h.cfg, "k_rule", "h") == SLLG_OK);
    CHECK(sllg_config_set(h.cfg, "paths", "2") == SLLG_OK);
    CHECK(sllg_config_set(h.cfg, "out", dir.c_str()) == SLLG_OK);
    REQUIRE(sllg_run_convergence(h.cfg) == SLLG_OK);

    const std::string errors = slurp(dir + "/errors.csv");
    CHECK(errors.rfind("n,k,L,seed,E_hk\n", 0) == 0);
    int rows = -1;
    for (char c : errors) rows += (c == '\n');
    CHECK(rows == 2);
    std::filesystem::remove_all(dir);

    const std::string edir = "capi_energy_out";
    std::filesystem::remove_all(edir);
    Handle e;
    CHECK(sllg_config_set(e.cfg, "n", "4") == SLLG_OK);
    CHECK(sllg_config_set(e.cfg, "steps", "6") == SLLG_OK);
    CHECK(sllg_config_set(e.cfg, "paths", "2") == SLLG_OK);
    CHECK(sllg_config_set(e.cfg, "lambda2_list", "1") == SLLG_OK);
    CHECK(sllg_config_set(e.cfg, "snapshot_steps", "0,6") == SLLG_OK);
    CHECK(sllg_config_set(e.cfg, "out", edir.c_str()) == SLLG_OK);
    REQUIRE(sllg_run_energy(e.cfg) == SLLG_OK);

    const std::string energy = slurp(edir + "/energy_lambda2_1.csv");
    CHECK(energy.rfind("t,mean_energy,std_energy\n", 0) == 0);
    rows = -1;
    for (char c : energy) rows += (c == '\n');
    CHECK(rows == 7);  // steps + 1 time levels
    CHECK(std::filesystem::exists(edir + "/snapshot_lambda2_1_step_0.vtk"));
    CHECK(std::filesystem::exists(edir + "/snapshot_lambda2_1_step_6.vtk"));
    std::filesystem::remove_all(edir);

    // Multiple damping values: the t=0 row is shared (same initial field)
    // and every trace ends below its initial mean energy.
    const std::string mdir = "capi_energy_multi";
    std::filesystem::remove_all(mdir);
    Handle m;
    CHECK(sllg_config_set(m.cfg, "n", "5") == SLLG_OK);
    CHECK(sllg_config_set(m.cfg, "steps", "8") == SLLG_OK);
    CHECK(sllg_config_set(m.cfg, "paths", "2") == SLLG_OK);
    CHECK(sllg_config_set(m.cfg, "lambda2_list", "0.5,1") == SLLG_OK);
    CHECK(sllg_config_set(m.cfg, "snapshot_steps", "0") == SLLG_OK);
    CHECK(sllg_config_set(m.cfg, "out", mdir.c_str()) == SLLG_OK);
    REQUIRE(sllg_run_energy(m.cfg) == SLLG_OK);
    auto first_data_row = [](const std::string& csv) {
        const auto head = csv.find('\n');
        return csv.substr(head + 1, csv.find('\n', head + 1) - head - 1);
    };
    auto last_mean = [](const std::string& csv) {
        const auto tail = csv.rfind('\n', csv.size() - 2);
        const std::string row = csv.substr(tail + 1);
        const auto c1 = row.find(',');
        return std::stod(row.substr(c1 + 1, row.find(',', c1 + 1) - c1 - 1));
    };
    const std::string e_half = slurp(mdir + "/energy_lambda2_0p5.csv");
    const std::string e_one = slurp(mdir + "/energy_lambda2_1.csv");
    CHECK(first_data_row(e_half) == first_data_row(e_one));
    const double initial = std::stod(first_data_row(e_one).substr(2));
    CHECK(last_mean(e_half) < initial);
    CHECK(last_mean(e_one) < initial);
    std::filesystem::remove_all(mdir);
}

TEST_CASE("config file loading through the C surface") {
    const std::string path = "capi_cfg.json";
    {
        std::ofstream out(path);
        out << R"({"n": 3, "steps": 4, "paths": 1})";
    }
    Handle h;
    CHECK(sllg_config_load_file(h.cfg, path.c_str()) == SLLG_OK);
    CHECK(sllg_config_load_file(h.cfg, "missing.json") == SLLG_ERR_CONFIG);
    std::filesystem::remove(path);

    const std::string dir = "capi_cfg_out";
    std::filesystem::remove_all(dir);
    CHECK(sllg_config_set(h.cfg, "out", dir.c_str()) == SLLG_OK);
    REQUIRE(sllg_run_simulate(h.cfg) == SLLG_OK);
    const std::string trace = slurp(dir + "/trace.csv");
    int rows = -1;
    for (char c : trace) rows += (c == '\n');
    CHECK(rows == 4);
    std::filesystem::remove_all(dir);
}
