#include "sllg/sllg.h"

#include <exception>
#include <functional>
#include <new>
#include <stdexcept>
#include <string>

#include "config.hpp"
#include "errors.hpp"
#include "run.hpp"

struct sllg_config {
    sllg::SimulationConfig cfg;
};

namespace {

thread_local std::string g_last_error;

sllg_status guard(const std::function<void()>& body) {
    try {
        body();
        g_last_error.clear();
        return SLLG_OK;
    } catch (const sllg::ConfigError& e) {
        g_last_error = e.what();
        return SLLG_ERR_CONFIG;
    } catch (const sllg::SolverError& e) {
        g_last_error = e.what();
        return SLLG_ERR_SOLVER;
    } catch (const sllg::IoError& e) {
        g_last_error = e.what();
        return SLLG_ERR_IO;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return SLLG_ERR_ARG;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SLLG_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return SLLG_ERR_INTERNAL;
    }
}

}  // namespace

extern "C" {

const char* sllg_version(void) { return "0.1.0"; }

sllg_config* sllg_config_new(void) {
    return new (std::nothrow) sllg_config{};
}

void sllg_config_free(sllg_config* cfg) { delete cfg; }

sllg_status sllg_config_set(sllg_config* cfg, const char* key, const char* value) {
    if (!cfg || !key || !value) {
        g_last_error = "null argument";
        return SLLG_ERR_ARG;
    }
    return guard([&] { cfg->cfg.set(key, value); });
}

sllg_status sllg_config_load_file(sllg_config* cfg, const char* path) {
    if (!cfg || !path) {
        g_last_error = "null argument";
        return SLLG_ERR_ARG;
    }
    return guard([&] { cfg->cfg.load_json_file(path); });
}

sllg_status sllg_config_validate(const sllg_config* cfg) {
    if (!cfg) {
        g_last_error = "null argument";
        return SLLG_ERR_ARG;
    }
    return guard([&] { cfg->cfg.validate(); });
}

sllg_status sllg_run_simulate(const sllg_config* cfg) {
    if (!cfg) {
        g_last_error = "null argument";
        return SLLG_ERR_ARG;
    }
    return guard([&] { sllg::run_simulate(cfg->cfg); });
}

sllg_status sllg_run_convergence(const sllg_config* cfg) {
    if (!cfg) {
        g_last_error = "null argument";
        return SLLG_ERR_ARG;
    }
    return guard([&] { sllg::run_convergence(cfg->cfg); });
}

sllg_status sllg_run_energy(const sllg_config* cfg) {
    if (!cfg) {
        g_last_error = "null argument";
        return SLLG_ERR_ARG;
    }
    return guard([&] { sllg::run_energy(cfg->cfg); });
}

const char* sllg_last_error(void) { return g_last_error.c_str(); }

}  // extern "C"
