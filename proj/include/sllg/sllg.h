/* Public C interface of the stochastic LLG simulator.
 *
 * The library runs a theta-linear tangent-plane finite element scheme for
 * the stochastic Landau-Lifshitz-Gilbert equation on the unit square, with
 * Monte Carlo averaging over Brownian paths. All state is behind the opaque
 * config handle; every run writes CSV/VTK artifacts plus a manifest into the
 * configured output directory.
 */

#ifndef SLLG_H
#define SLLG_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SLLG_API __declspec(dllexport)
#else
#define SLLG_API __attribute__((visibility("default")))
#endif

typedef enum sllg_status {
    SLLG_OK = 0,
    SLLG_ERR_ARG = 1,      /* bad pointer, unknown key, unparsable value */
    SLLG_ERR_CONFIG = 2,   /* configuration failed validation */
    SLLG_ERR_SOLVER = 3,   /* linear solver failure during a run */
    SLLG_ERR_IO = 4,       /* output directory / file write failure */
    SLLG_ERR_INTERNAL = 5
} sllg_status;

typedef struct sllg_config sllg_config;

SLLG_API const char* sllg_version(void);

/* Config handles carry flat key/value settings mirroring the JSON config
 * format. Keys: n, steps, k_rule, T, theta, lambda1, lambda2, paths, seed,
 * g, workers, out, snapshot_steps, n_list, lambda2_list, solver_tol,
 * full_scale. List values are comma separated. */
SLLG_API sllg_config* sllg_config_new(void);
SLLG_API void sllg_config_free(sllg_config* cfg);
SLLG_API sllg_status sllg_config_set(sllg_config* cfg, const char* key,
                                     const char* value);
/* Loads a flat JSON object; later sllg_config_set calls override it. */
SLLG_API sllg_status sllg_config_load_file(sllg_config* cfg, const char* path);
SLLG_API sllg_status sllg_config_validate(const sllg_config* cfg);

/* Single-path run: per-step trace CSV, final field VTKs, manifest. */
SLLG_API sllg_status sllg_run_simulate(const sllg_config* cfg);
/* Modulus-deviation error table over the configured n list. */
SLLG_API sllg_status sllg_run_convergence(const sllg_config* cfg);
/* Ensemble energy traces per lambda2 plus mean-field snapshots. */
SLLG_API sllg_status sllg_run_energy(const sllg_config* cfg);

/* Message for the last failure on this thread; empty string if none. */
SLLG_API const char* sllg_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* SLLG_H */
