/* SPDX-License-Identifier: Apache-2.0 */
/*
 * qcpower C API: thermal-resource analysis of two exactly solvable spin
 * models (unit spectra, GHZ distillation, Pauli-error extraction,
 * percolation, and computational-power phase boundaries).
 *
 * All functions return a qcp_status; on failure qcp_last_error() holds a
 * thread-local message. Handles are opaque and owned by the caller through
 * the matching *_destroy function. Temperatures and energies are in coupling
 * units (k_B = 1).
 */
#ifndef QCPOWER_H
#define QCPOWER_H

#include <stddef.h>
#include <stdint.h>

#if defined(__GNUC__)
#define QCP_API __attribute__((visibility("default")))
#else
#define QCP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qcp_status {
  QCP_OK = 0,
  QCP_ERROR_INVALID_ARGUMENT = 1,
  QCP_ERROR_DOMAIN = 2,
  QCP_ERROR_RUNTIME = 3,
  QCP_ERROR_BUFFER_TOO_SMALL = 4
} qcp_status;

typedef enum qcp_model_kind {
  QCP_MODEL_XXZ = 0,  /* parameter = delta, anisotropy 1 + delta */
  QCP_MODEL_ANISO = 1 /* parameter = d_z, on-site -d_z (S^z)^2   */
} qcp_model_kind;

typedef enum qcp_lattice_kind {
  QCP_LATTICE_HONEYCOMB = 0,
  QCP_LATTICE_SQUARE_OCTAGON = 1,
  QCP_LATTICE_SQUARE = 2
} qcp_lattice_kind;

typedef enum qcp_dim { QCP_DIM_2D = 2, QCP_DIM_3D = 3 } qcp_dim;

typedef enum qcp_verdict {
  QCP_VERDICT_UNUSABLE = -1,
  QCP_VERDICT_NOT_UNIVERSAL = 0,
  QCP_VERDICT_UNIVERSAL = 1
} qcp_verdict;

typedef enum qcp_boundary_status {
  QCP_BOUNDARY_FOUND = 0,
  QCP_BOUNDARY_NONE = 1,      /* not universal even at T = 0 */
  QCP_BOUNDARY_ABOVE_TMAX = 2 /* still universal at the search ceiling */
} qcp_boundary_status;

typedef struct qcp_model qcp_model;
typedef struct qcp_kcurve qcp_kcurve;

QCP_API const char* qcp_version(void);
QCP_API const char* qcp_last_error(void);

/* ---- models and unit spectra ---- */

QCP_API qcp_status qcp_model_create(qcp_model_kind kind, double parameter,
                                    qcp_model** out_model);
QCP_API void qcp_model_destroy(qcp_model* model);

QCP_API qcp_status qcp_deformation_parameter(const qcp_model* model,
                                             double* out_a);
QCP_API qcp_status qcp_analytic_ground_energy(const qcp_model* model,
                                              double* out_e0);

typedef struct qcp_spectrum_summary {
  double e0;
  double e1;
  double gap;
  int ground_degeneracy;
} qcp_spectrum_summary;

QCP_API qcp_status qcp_spectrum(const qcp_model* model,
                                qcp_spectrum_summary* out);

/* |<analytic ground | numeric ground>| and ||(H - E0)|psi_analytic>||. */
QCP_API qcp_status qcp_ground_state_check(const qcp_model* model,
                                          double* out_overlap,
                                          double* out_residual);

typedef struct qcp_kink {
  double location;
  double slope_jump;
} qcp_kink;

/* Scans the numeric ground energy over a strictly increasing grid for slope
 * discontinuities above jump_threshold (pass 0 for the default 0.5). Fails
 * with QCP_ERROR_BUFFER_TOO_SMALL when more kinks are found than capacity;
 * out_count always receives the number found. */
QCP_API qcp_status qcp_detect_transition(qcp_model_kind kind,
                                         const double* grid, size_t n,
                                         double jump_threshold,
                                         qcp_kink* out_kinks, size_t capacity,
                                         size_t* out_count,
                                         int* out_coarse_warning);

/* ---- thermal GHZ distillation and Pauli errors ---- */

#define QCP_PAULI_CLASSES 16

/* Canonical class order: I, Z0, X1, Z0X1, X2, Z0X2, X3, Z0X3, X1X2, Z0X1X2,
 * X2X3, Z0X2X3, X1X3, Z0X1X3, X0, Z0X0. Returns NULL for an invalid index. */
QCP_API const char* qcp_pauli_class_name(int index);

typedef struct qcp_error_report {
  double probs[QCP_PAULI_CLASSES];
  double p_s;          /* distillation success probability */
  double ghz_fidelity; /* <GHZ| rho |GHZ> before twirling */
  double p_z;          /* cluster-qubit phase-error rate */
  double p_l;          /* cluster-qubit loss rate, 1 - p_s^2 */
} qcp_error_report;

QCP_API qcp_status qcp_error_analysis(const qcp_model* model,
                                      double temperature,
                                      qcp_error_report* out);

QCP_API qcp_status qcp_p_delete(double a, double* out);

/* ---- percolation and loss renormalization ---- */

typedef struct qcp_percolation_estimate {
  double p_th;
  double std_error;
  int trials;
  int size;
} qcp_percolation_estimate;

QCP_API qcp_status qcp_spanning_probability(qcp_lattice_kind lattice, int size,
                                            double p, int trials,
                                            uint64_t seed, int workers,
                                            double* out);

QCP_API qcp_status qcp_site_threshold(qcp_lattice_kind lattice, int size,
                                      int trials, uint64_t seed, int n_seeds,
                                      int workers,
                                      qcp_percolation_estimate* out);

/* delta* (= d_z*) and a*^2 from a site-percolation threshold. */
QCP_API qcp_status qcp_zero_t_boundary(double p_th, double* out_parameter,
                                       double* out_a_squared);

QCP_API qcp_status qcp_kcurve_estimate(const double* loss_grid, size_t n,
                                       int size, int trials, uint64_t seed,
                                       double spacing_scale, int workers,
                                       qcp_kcurve** out);
QCP_API qcp_status qcp_kcurve_from_table(const double* p_l, const double* k,
                                         size_t n, qcp_kcurve** out);
QCP_API void qcp_kcurve_destroy(qcp_kcurve* curve);
QCP_API qcp_status qcp_kcurve_size(const qcp_kcurve* curve, size_t* out);
QCP_API qcp_status qcp_kcurve_point(const qcp_kcurve* curve, size_t index,
                                    double* out_p_l, double* out_k,
                                    double* out_std_error);
/* Linear interpolation; QCP_ERROR_DOMAIN outside the usable range. */
QCP_API qcp_status qcp_kcurve_eval(const qcp_kcurve* curve, double p_l,
                                   double* out_k);

/* ---- computational-power phase diagrams ---- */

typedef struct qcp_phase_point {
  double parameter;
  double temperature;
  double p_z; /* NaN when no entangled resource exists */
  double p_l;
  qcp_verdict universal_2d; /* QCP_VERDICT_UNUSABLE without a covering k curve */
  qcp_verdict universal_3d;
  double margin_2d; /* signed distance to threshold; NaN when unusable */
  double margin_3d;
} qcp_phase_point;

/* kcurve may be NULL; the 2D verdict is then QCP_VERDICT_UNUSABLE. */
QCP_API qcp_status qcp_evaluate_point(const qcp_model* model,
                                      double temperature,
                                      const qcp_kcurve* kcurve,
                                      qcp_phase_point* out);

/* Bisection over T in [0, 5]; margin_tol <= 0 selects the default 1e-6. */
QCP_API qcp_status qcp_boundary_temperature(const qcp_model* model,
                                            qcp_dim dim,
                                            const qcp_kcurve* kcurve,
                                            double margin_tol,
                                            double* out_t_star,
                                            qcp_boundary_status* out_status);

/* Evaluates the full grid (param-major: out_points[ip * n_temps + it]) and,
 * when out_boundary_* are non-NULL (length n_params), the boundary
 * temperature per parameter value. */
QCP_API qcp_status qcp_phase_sweep(qcp_model_kind kind, const double* params,
                                   size_t n_params, const double* temps,
                                   size_t n_temps, qcp_dim dim,
                                   const qcp_kcurve* kcurve, int workers,
                                   double margin_tol,
                                   qcp_phase_point* out_points,
                                   double* out_boundary_t,
                                   qcp_boundary_status* out_boundary_status);

/* ---- cluster-error propagation oracle ---- */

/* Verifies the error-propagation table by brute-force protocol simulation.
 * Writes a PASS/FAIL report (NUL-terminated) when buffer is non-NULL;
 * out_len receives the required size including the terminator. Returns
 * QCP_ERROR_BUFFER_TOO_SMALL when capacity is insufficient. */
QCP_API qcp_status qcp_verify_propagation(char* buffer, size_t capacity,
                                          size_t* out_len,
                                          int* out_rules_passed,
                                          int* out_rules_total);

#ifdef __cplusplus
}
#endif

#endif /* QCPOWER_H */
