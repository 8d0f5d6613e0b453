// Copyright 2026 The qrotor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the qrotor library.
 *
 * Objects are opaque handles created by qr_*_create / qr_*_from_json style
 * functions and released with the matching qr_*_free. Every fallible call
 * returns a qr_status; on failure qr_last_error() describes the problem
 * (thread-local, valid until the next failing call on the same thread).
 * Strings returned through `char **out` are owned by the caller and released
 * with qr_string_free.
 *
 * Complex arrays are interleaved (re, im) doubles; `count` arguments give the
 * number of complex entries.
 */
#ifndef QROTOR_QROTOR_H
#define QROTOR_QROTOR_H

#include <stddef.h>
#include <stdint.h>

#if defined(QROTOR_BUILDING_LIBRARY)
#define QROTOR_API __attribute__((visibility("default")))
#else
#define QROTOR_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values match the command-line exit codes. */
typedef enum qr_status {
  QR_OK = 0,
  QR_ERR_INPUT = 2,
  QR_ERR_CONVERGENCE = 3,
  QR_ERR_INTERNAL = 4
} qr_status;

typedef enum qr_format { QR_FORMAT_JSON = 0, QR_FORMAT_CSV = 1 } qr_format;

typedef struct qr_state qr_state;
typedef struct qr_angles qr_angles;
typedef struct qr_matrix qr_matrix;
typedef struct qr_analysis qr_analysis;

typedef struct qr_analyze_options {
  double tol;
  double zero_tol;
  int max_restarts;
  int max_iterations;
  uint64_t seed;
  int reduce_angles;
} qr_analyze_options;

/* Extra numeric field appended to a written record. */
typedef struct qr_field {
  const char *key;
  double value;
} qr_field;

typedef struct qr_ham_params {
  double omega0;
  double omega1;
  double omega2;
  double lambda;
} qr_ham_params;

QROTOR_API const char *qr_version(void);
QROTOR_API const char *qr_last_error(void);
QROTOR_API void qr_string_free(char *s);
QROTOR_API void qr_analyze_options_init(qr_analyze_options *opts);

/* States. `exact` != 0 rejects unnormalized input instead of rescaling. */
QROTOR_API qr_status qr_state_from_json(const char *text, int exact, qr_state **out);
QROTOR_API qr_status qr_state_create(unsigned n, const double *re_im, size_t count,
                                     int exact, qr_state **out);
QROTOR_API qr_status qr_state_basis(unsigned n, uint64_t index, qr_state **out);
QROTOR_API void qr_state_free(qr_state *s);
QROTOR_API unsigned qr_state_qubits(const qr_state *s);
QROTOR_API double qr_state_input_norm(const qr_state *s);
QROTOR_API qr_status qr_state_coeffs(const qr_state *s, double *re_im, size_t count);
/* max_l |a_l - b_l| */
QROTOR_API qr_status qr_state_distance(const qr_state *a, const qr_state *b, double *out);
QROTOR_API qr_status qr_state_write(const qr_state *s, qr_format fmt,
                                    const qr_field *extras, size_t n_extras, char **out);

/* Angle sets: N-1 polar angles theta_1..theta_{N-1}, N azimuthal phi_0..phi_{N-1}.
 * qr_angles_from_json also accepts an analysis report. */
QROTOR_API qr_status qr_angles_from_json(const char *text, qr_angles **out);
QROTOR_API qr_status qr_angles_create(unsigned n, const double *theta, const double *phi,
                                      qr_angles **out);
QROTOR_API void qr_angles_free(qr_angles *a);
QROTOR_API unsigned qr_angles_qubits(const qr_angles *a);
/* 2^(n+1) - 1 */
QROTOR_API size_t qr_angles_count(const qr_angles *a);
QROTOR_API qr_status qr_angles_get(const qr_angles *a, double *theta, double *phi);
QROTOR_API qr_status qr_angles_write(const qr_angles *a, qr_format fmt, char **out);

/* Rotor synthesis and analysis. */
QROTOR_API qr_status qr_synthesize(const qr_angles *a, qr_state **out);
/* max_l |synthesize(a)_l - (R_oracle psi_0)_l| with R_oracle built from dense
 * hermitian eigendecompositions. n <= 10. */
QROTOR_API qr_status qr_synthesize_oracle_deviation(const qr_angles *a, double *out);
/* ||R - R_oracle||_F. n <= 10. */
QROTOR_API qr_status qr_rotor_oracle_deviation(const qr_angles *a, double *out);
QROTOR_API qr_status qr_rotor_matrix(const qr_angles *a, qr_matrix **out);

/* On QR_ERR_CONVERGENCE `*out` still receives the best attempt. */
QROTOR_API qr_status qr_analyze(const qr_state *target, const qr_analyze_options *opts,
                                qr_analysis **out);
QROTOR_API void qr_analysis_free(qr_analysis *r);
QROTOR_API double qr_analysis_residual(const qr_analysis *r);
QROTOR_API int qr_analysis_restarts(const qr_analysis *r);
QROTOR_API int qr_analysis_iterations(const qr_analysis *r);
QROTOR_API int qr_analysis_converged(const qr_analysis *r);
QROTOR_API qr_status qr_analysis_angles(const qr_analysis *r, qr_angles **out);
QROTOR_API qr_status qr_analysis_write(const qr_analysis *r, qr_format fmt, char **out);

/* U with U a = b. n <= 10. */
QROTOR_API qr_status qr_transform(const qr_state *a, const qr_state *b,
                                  const qr_analyze_options *opts, qr_matrix **out);

/* Operators. family: "b", "z", "e", "P", "sigma" (n = 1, index = mu). */
QROTOR_API qr_status qr_operator(const char *family, uint64_t index, unsigned n,
                                 qr_matrix **out);
QROTOR_API void qr_matrix_free(qr_matrix *m);
QROTOR_API unsigned qr_matrix_qubits(const qr_matrix *m);
QROTOR_API const char *qr_matrix_name(const qr_matrix *m);
QROTOR_API qr_status qr_matrix_entries(const qr_matrix *m, double *re_im, size_t count);
/* ||U^dagger U - I||_F */
QROTOR_API qr_status qr_matrix_unitarity_error(const qr_matrix *m, double *out);
/* ||U a - b||_2 */
QROTOR_API qr_status qr_matrix_action_error(const qr_matrix *u, const qr_state *a,
                                            const qr_state *b, double *out);
QROTOR_API qr_status qr_matrix_write(const qr_matrix *m, qr_format fmt,
                                     const qr_field *extras, size_t n_extras, char **out);

/* Walsh spectrum of the coefficients in a state file (not renormalized) and
 * the singularity flag of sum_l c_l b(l). rel_tol <= 0 selects the default. */
QROTOR_API qr_status qr_walsh_spectrum(const char *state_json, double rel_tol,
                                       qr_format fmt, int *singular, char **out);

/* Coupled two-qubit Hamiltonian. */
QROTOR_API qr_status qr_ham_params_from_json(const char *text, qr_ham_params *out);
/* Labeling (++, mixed+, mixed-, --). */
QROTOR_API qr_status qr_ham_energies(const qr_ham_params *p, double energies[4]);
/* Full report including eigenstate angles; QR_ERR_CONVERGENCE if any
 * eigenstate failed to parametrize (the report is still produced). */
QROTOR_API qr_status qr_ham_report(const qr_ham_params *p, const qr_analyze_options *opts,
                                   qr_format fmt, char **out);

#ifdef __cplusplus
}
#endif

#endif /* QROTOR_QROTOR_H */
