// Copyright 2026 The opdist Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * C interface to the opdist library.
 *
 * Objects are opaque handles created by opdist_*_create-style functions and
 * released with the matching *_free function. Every fallible call returns an
 * opdist_status; on failure a thread-local message is available from
 * opdist_last_error() until the next call on the same thread.
 *
 * Complex matrices cross the boundary as row-major arrays of interleaved
 * (re, im) doubles, i.e. 2*d*d values for a d x d matrix.
 */
#ifndef OPDIST_OPDIST_H
#define OPDIST_OPDIST_H

#include <stddef.h>
#include <stdint.h>

#if defined(OPDIST_BUILDING_LIBRARY)
#define OPDIST_API __attribute__((visibility("default")))
#else
#define OPDIST_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum opdist_status {
    OPDIST_OK = 0,
    OPDIST_E_SHAPE = 1,
    OPDIST_E_DOMAIN = 2,
    OPDIST_E_CONVERGENCE = 3,
    OPDIST_E_NOT_HERMITIAN = 4,
    OPDIST_E_BAD_TRACE = 5,
    OPDIST_E_NOT_PSD = 6,
    OPDIST_E_UNSUPPORTED_DIMENSION = 7,
    OPDIST_E_INVALID_ARGUMENT = 8,
    OPDIST_E_INTERNAL = 9
} opdist_status;

typedef struct opdist_state opdist_state;
typedef struct opdist_mub opdist_mub;
typedef struct opdist_ordering opdist_ordering;

OPDIST_API const char *opdist_version(void);
OPDIST_API const char *opdist_rng_algorithm(void);
OPDIST_API const char *opdist_status_string(opdist_status status);
OPDIST_API const char *opdist_last_error(void);
OPDIST_API uint64_t opdist_split_seed(uint64_t seed, uint64_t index);

/* ---- states -------------------------------------------------------------- */

/* Validates Hermiticity, unit trace and positivity within tol. */
OPDIST_API opdist_status opdist_state_from_matrix(size_t dim,
                                                  const double *re_im,
                                                  double tol,
                                                  opdist_state **out);
/* Decodes Gell-Mann coordinates (d*d-1 values) and validates the result. */
OPDIST_API opdist_status opdist_state_from_bloch(size_t dim,
                                                 const double *coords,
                                                 double tol,
                                                 opdist_state **out);
/* |psi><psi| for a nonzero vector of dim (re, im) pairs. */
OPDIST_API opdist_status opdist_state_from_vector(size_t dim,
                                                  const double *re_im,
                                                  opdist_state **out);
OPDIST_API opdist_status opdist_state_maximally_mixed(size_t dim,
                                                      opdist_state **out);
OPDIST_API opdist_status opdist_state_random_pure(size_t dim, uint64_t seed,
                                                  opdist_state **out);
OPDIST_API opdist_status opdist_state_random_mixed(size_t dim, uint64_t seed,
                                                   opdist_state **out);
OPDIST_API void opdist_state_free(opdist_state *state);

OPDIST_API size_t opdist_state_dim(const opdist_state *state);
/* Writes 2*d*d doubles; len is the capacity of re_im. */
OPDIST_API opdist_status opdist_state_matrix(const opdist_state *state,
                                             double *re_im, size_t len);
/* Writes d*d-1 Gell-Mann coordinates. */
OPDIST_API opdist_status opdist_state_bloch(const opdist_state *state,
                                            double *coords, size_t len);
OPDIST_API opdist_status opdist_state_purity(const opdist_state *state,
                                             double *out);

/* ---- complementary measurement sets --------------------------------------- */

typedef struct opdist_mub_report {
    size_t dim;
    size_t num_bases;
    double tol;
    double intra_basis;
    double overlap;
    double bloch_orthogonality;
    double subspace_projector;
    double subspace_orthogonality;
    double identity_resolution;
    int pass;
} opdist_mub_report;

/* Prime dim only; OPDIST_E_UNSUPPORTED_DIMENSION otherwise. */
OPDIST_API opdist_status opdist_mub_standard(size_t dim, opdist_mub **out);
/*
 * Builds a set from num_bases * dim projectors, each 2*dim*dim doubles,
 * basis-major. Every basis must be orthonormal and complete; labels may be
 * NULL. Cross-basis conditions are left to opdist_mub_verify.
 */
OPDIST_API opdist_status opdist_mub_from_projectors(size_t dim,
                                                    size_t num_bases,
                                                    const double *re_im,
                                                    const char *const *labels,
                                                    opdist_mub **out);
OPDIST_API opdist_status opdist_mub_rotate(const opdist_mub *mub,
                                           const double *unitary_re_im,
                                           opdist_mub **out);
OPDIST_API opdist_status opdist_mub_rotate_haar(const opdist_mub *mub,
                                                uint64_t seed,
                                                opdist_mub **out);
OPDIST_API void opdist_mub_free(opdist_mub *mub);

OPDIST_API size_t opdist_mub_dim(const opdist_mub *mub);
OPDIST_API size_t opdist_mub_num_bases(const opdist_mub *mub);
/* NULL when basis is out of range. Valid until the handle is freed. */
OPDIST_API const char *opdist_mub_label(const opdist_mub *mub, size_t basis);
OPDIST_API opdist_status opdist_mub_projector(const opdist_mub *mub,
                                              size_t basis, size_t outcome,
                                              double *re_im, size_t len);
OPDIST_API opdist_status opdist_mub_verify(const opdist_mub *mub, double tol,
                                           opdist_mub_report *out);

/* ---- distances ------------------------------------------------------------ */

typedef struct opdist_distance_summary {
    double total;
    double hs_distance_sq;
    double deviation;
} opdist_distance_summary;

/* Writes dim outcome probabilities of basis `basis`. */
OPDIST_API opdist_status opdist_born_probabilities(const opdist_state *rho,
                                                   const opdist_mub *mub,
                                                   size_t basis, double *out,
                                                   size_t len);
/* per_basis may be NULL; otherwise receives num_bases single distances. */
OPDIST_API opdist_status opdist_total_distance(const opdist_state *rho1,
                                               const opdist_state *rho2,
                                               const opdist_mub *mub,
                                               double *per_basis, size_t len,
                                               opdist_distance_summary *out);
OPDIST_API opdist_status opdist_hs_distance_sq(const opdist_state *rho1,
                                               const opdist_state *rho2,
                                               double *out);
OPDIST_API opdist_status opdist_information_content(const opdist_state *rho,
                                                    double normalization,
                                                    double *out);
OPDIST_API opdist_status opdist_fidelity(const opdist_state *rho1,
                                         const opdist_state *rho2,
                                         double *out);
OPDIST_API opdist_status opdist_fidelity_pure(const opdist_state *sigma,
                                              const opdist_state *rho,
                                              double *out);
OPDIST_API opdist_status opdist_purity_fidelity_relation(
    const opdist_state *sigma, const opdist_state *rho, double *lhs,
    double *rhs);

typedef struct opdist_ordering_violation {
    size_t i;
    size_t j;
    double fidelity_i;
    double fidelity_j;
    double distance_i;
    double distance_j;
} opdist_ordering_violation;

OPDIST_API opdist_status opdist_ordering_check(const opdist_state *sigma,
                                               const opdist_state *const *tests,
                                               size_t num_tests,
                                               const opdist_mub *mub,
                                               opdist_ordering **out);
OPDIST_API void opdist_ordering_free(opdist_ordering *report);
OPDIST_API size_t opdist_ordering_num_violations(const opdist_ordering *report);
OPDIST_API opdist_status opdist_ordering_violation_at(
    const opdist_ordering *report, size_t k, opdist_ordering_violation *out);
/* Fidelity and distance of test state k to the reference. */
OPDIST_API opdist_status opdist_ordering_values(const opdist_ordering *report,
                                                size_t k, double *fidelity,
                                                double *distance);

/* ---- finite-shot simulation ---------------------------------------------- */

typedef enum opdist_estimator {
    OPDIST_ESTIMATOR_PLUG_IN = 0,
    OPDIST_ESTIMATOR_BIAS_CORRECTED = 1
} opdist_estimator;

OPDIST_API opdist_status opdist_haar_unitary(size_t dim, uint64_t seed,
                                             double *re_im, size_t len);
/* Writes dim outcome counts. */
OPDIST_API opdist_status opdist_simulate_shots(const opdist_state *rho,
                                               const opdist_mub *mub,
                                               size_t basis, uint64_t shots,
                                               uint64_t seed, uint64_t *counts,
                                               size_t len);
OPDIST_API opdist_status opdist_estimate_total_distance(
    const opdist_state *rho1, const opdist_state *rho2, const opdist_mub *mub,
    uint64_t shots_per_basis, uint64_t seed, opdist_estimator estimator,
    double *estimate, double *exact);

typedef struct opdist_tomography_report {
    uint64_t shots_per_setting;
    uint64_t total_shots_per_system;
    /* [setting][system][outcome]; settings: horizontal, diagonal-45,
       right-circular. */
    double frequencies[3][2][2];
    /* [system][x, y, z] */
    double stokes[2][3];
    /* [system][2x2 interleaved re/im] */
    double reconstructed[2][8];
    int projected[2];
    double estimated_distance;
    double reconstructed_distance;
    double exact_distance;
} opdist_tomography_report;

OPDIST_API const char *opdist_tomography_setting_name(size_t setting);
OPDIST_API opdist_status opdist_tomography(const opdist_state *rho1,
                                           const opdist_state *rho2,
                                           uint64_t shots, uint64_t seed,
                                           opdist_tomography_report *out);

OPDIST_API opdist_status opdist_log_log_slope(const double *x, const double *y,
                                              size_t n, double *out);

#ifdef __cplusplus
}
#endif

#endif /* OPDIST_OPDIST_H */
