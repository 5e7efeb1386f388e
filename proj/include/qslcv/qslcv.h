/* qslcv.h — C API of the qslcv shared library.
 *
 * Quantum-speed-limit analysis of a dissipative single-mode Gaussian system:
 * exact non-Markovian amplitude dynamics, Born-Markov closed forms, bound-state
 * spectrum analysis, and QSL reports in the Fisher-Rao and Wigner geometries.
 *
 * Conventions:
 *   - omega_0 = 1 fixes the units: frequencies in omega_0, times in 1/omega_0.
 *   - Every function returns a qslcv_status; results go through out-pointers.
 *   - On failure, qslcv_last_error() returns a thread-local diagnostic.
 *   - Handles are created/destroyed by matching create/destroy calls and are
 *     immutable after creation, so they may be shared across threads.
 */
#ifndef QSLCV_H
#define QSLCV_H

#include <stddef.h>

#if defined(_WIN32)
#define QSLCV_API __declspec(dllexport)
#else
#define QSLCV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qslcv_status {
    QSLCV_OK = 0,
    QSLCV_ERROR_INVALID_ARGUMENT = 1, /* malformed input (bad pointer, bad size) */
    QSLCV_ERROR_DOMAIN = 2,           /* input outside an operation's domain */
    QSLCV_ERROR_NUMERIC = 3,          /* convergence failure or non-finite result */
    QSLCV_ERROR_IO = 4                /* file could not be opened or written */
} qslcv_status;

QSLCV_API const char* qslcv_status_name(qslcv_status status);
QSLCV_API const char* qslcv_version_string(void);

/* Thread-local message describing the most recent failure ("" if none). */
QSLCV_API const char* qslcv_last_error(void);

/* ---- bath parameters ---------------------------------------------------- */

/* Ohmic-family spectral density J(w) = eta w^s omega_c^{1-s} e^{-w/omega_c}.
 * eta >= 0 (0 is the closed-system limit), s > 0, omega_c > 0. */
typedef struct qslcv_params qslcv_params;

QSLCV_API qslcv_status qslcv_params_create(double eta, double s, double omega_c,
                                           qslcv_params** out);
QSLCV_API void qslcv_params_destroy(qslcv_params* params);
QSLCV_API qslcv_status qslcv_params_get(const qslcv_params* params, double* eta, double* s,
                                        double* omega_c, double* omega_0);

QSLCV_API qslcv_status qslcv_spectral_density(const qslcv_params* params, double omega,
                                              double* out);
/* Memory kernel mu(t) = integral of J(w) e^{-iwt}. */
QSLCV_API qslcv_status qslcv_memory_kernel(const qslcv_params* params, double t,
                                           double* out_re, double* out_im);
/* kappa = pi J(omega_0). */
QSLCV_API qslcv_status qslcv_markov_decay_rate(const qslcv_params* params, double* out);
/* Principal-value shift Delta(omega) = P integral J(w)/(omega - w) dw, omega > 0. */
QSLCV_API qslcv_status qslcv_frequency_shift(const qslcv_params* params, double omega,
                                             double* out);

/* ---- amplitude trajectories --------------------------------------------- */

typedef struct qslcv_trajectory qslcv_trajectory;

/* Exact non-Markovian solve of the amplitude integro-differential equation.
 * step > 0 uses a fixed step; step <= 0 selects min(0.01, 0.5/omega_c) with a
 * convergence gate (h vs h/2, refined at most four times). */
QSLCV_API qslcv_status qslcv_solve_exact(const qslcv_params* params, double tau,
                                         double step, qslcv_trajectory** out);

/* Born-Markov closed form on a grid; include_shift = 0 drops Delta(omega_0). */
QSLCV_API qslcv_status qslcv_solve_markov(const qslcv_params* params, double tau,
                                          double step, int include_shift,
                                          qslcv_trajectory** out);

/* Discretized-bath single-excitation evolution (independent cross-check of
 * the exact solver). Keep n_modes >= omega_max*tau/(2*pi) to stay clear of
 * Poincare recurrences; omega_max of about 20*omega_c is adequate. */
QSLCV_API qslcv_status qslcv_solve_discretized_bath(const qslcv_params* params, double tau,
                                                    size_t n_modes, double omega_max,
                                                    double step, qslcv_trajectory** out);

QSLCV_API void qslcv_trajectory_destroy(qslcv_trajectory* traj);
QSLCV_API size_t qslcv_trajectory_size(const qslcv_trajectory* traj);
QSLCV_API double qslcv_trajectory_step(const qslcv_trajectory* traj);

/* Copies trajectory columns into caller arrays of length qslcv_trajectory_size.
 * Any destination may be NULL to skip that column. Omega/gamma entries past
 * the |u| underflow cutoff are NaN. */
QSLCV_API qslcv_status qslcv_trajectory_copy_data(const qslcv_trajectory* traj, double* t,
                                                  double* re_u, double* im_u, double* re_du,
                                                  double* im_du, double* omega,
                                                  double* gamma);

/* Writes the trajectory CSV (t,re_u,im_u,abs_u,re_du,im_du,Omega,gamma at 12
 * significant digits). config_comment, when non-NULL, is echoed as a leading
 * `# ...` line. */
QSLCV_API qslcv_status qslcv_trajectory_write_csv(const qslcv_trajectory* traj,
                                                  const char* path,
                                                  const char* config_comment);

/* ---- bound-state spectrum analysis -------------------------------------- */

typedef struct qslcv_bound_state {
    int exists;  /* 1 iff omega_0 - eta*omega_c*Gamma(s) < 0 */
    double e_b;  /* isolated eigenenergy, < 0 when exists */
    double z;    /* residue in (0,1) when exists */
} qslcv_bound_state;

QSLCV_API qslcv_status qslcv_find_bound_state(const qslcv_params* params,
                                              qslcv_bound_state* out);

/* Numeric threshold coupling eta* at which the bound state appears. */
QSLCV_API qslcv_status qslcv_bound_state_threshold(double s, double omega_c,
                                                   double* eta_star);

/* Long-time amplitude Z e^{-i E_b tau} (+ the band/branch-cut integral when
 * include_branch_cut != 0). printed_weight selects the [2 pi J]^2 band weight
 * as printed; 0 uses the resolvent form [pi J]^2. */
QSLCV_API qslcv_status qslcv_asymptotic_amplitude(const qslcv_params* params,
                                                  const qslcv_bound_state* bound, double tau,
                                                  int include_branch_cut, int printed_weight,
                                                  double* out_re, double* out_im);

/* ---- QSL reports --------------------------------------------------------- */

typedef struct qslcv_qsl_report {
    double tau;
    double ell;     /* path length */
    double l_b;     /* Bures angle */
    double v_bar;   /* time-averaged speed */
    double ratio;   /* tau_QSL / tau */
    double v_bar_w; /* Wigner-space speed */
    double l_w;     /* Wasserstein-2 distance */
    double ratio_w; /* tau^W_QSL / tau */
} qslcv_qsl_report;

/* Report for the coherent initial state alpha, horizon truncated at the grid
 * point nearest tau (tau must land on the grid within step/2). */
QSLCV_API qslcv_status qslcv_qsl_report_at(const qslcv_trajectory* traj, double alpha_re,
                                           double alpha_im, double tau,
                                           qslcv_qsl_report* out);

/* Reports for count horizons on one trajectory (out has count entries). */
QSLCV_API qslcv_status qslcv_qsl_report_series(const qslcv_trajectory* traj, double alpha_re,
                                               double alpha_im, const double* taus,
                                               size_t count, qslcv_qsl_report* out);

/* Fully closed-form Born-Markov report (no grid). */
QSLCV_API qslcv_status qslcv_markov_qsl_report(const qslcv_params* params, double alpha_abs,
                                               double tau, int include_shift,
                                               qslcv_qsl_report* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QSLCV_H */
