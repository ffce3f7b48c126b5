#pragma once

#include "config.hpp"

namespace sllg {

/// One path of the scheme: per-step trace CSV plus final fields and a run
/// manifest, written under cfg.out.
void run_simulate(const SimulationConfig& cfg);

/// Modulus-deviation error table over cfg.n_list at the configured k rule.
void run_convergence(const SimulationConfig& cfg);

/// Ensemble exchange-energy traces (one CSV per lambda2) plus ensemble-mean
/// magnetization snapshots.
void run_energy(const SimulationConfig& cfg);

}  // namespace sllg
