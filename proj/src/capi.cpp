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

#include "opdist/opdist.h"

#include <algorithm>
#include <exception>
#include <new>
#include <string>
#include <utility>

#include "opdist/bloch.hpp"
#include "opdist/error.hpp"
#include "opdist/linalg.hpp"
#include "opdist/metric.hpp"
#include "opdist/mub.hpp"
#include "opdist/sampler.hpp"

struct opdist_state {
    opdist::DensityOperator value;
};

struct opdist_mub {
    opdist::MubSet value;
};

struct opdist_ordering {
    opdist::OrderingReport value;
};

namespace {

thread_local std::string g_last_error;

opdist_status to_status(opdist::ErrorCode code) {
    using opdist::ErrorCode;
    switch (code) {
    case ErrorCode::Shape:
        return OPDIST_E_SHAPE;
    case ErrorCode::Domain:
        return OPDIST_E_DOMAIN;
    case ErrorCode::Convergence:
        return OPDIST_E_CONVERGENCE;
    case ErrorCode::NotHermitian:
        return OPDIST_E_NOT_HERMITIAN;
    case ErrorCode::BadTrace:
        return OPDIST_E_BAD_TRACE;
    case ErrorCode::NotPsd:
        return OPDIST_E_NOT_PSD;
    case ErrorCode::UnsupportedDimension:
        return OPDIST_E_UNSUPPORTED_DIMENSION;
    }
    return OPDIST_E_INTERNAL;
}

opdist_status set_error(opdist_status status, std::string message) {
    g_last_error = std::move(message);
    return status;
}

/// Runs `body`, translating exceptions into status codes.
template <class F> opdist_status guarded(F &&body) {
    g_last_error.clear();
    try {
        body();
        return OPDIST_OK;
    } catch (const opdist::Error &e) {
        return set_error(to_status(e.code()), e.what());
    } catch (const std::bad_alloc &) {
        return set_error(OPDIST_E_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return set_error(OPDIST_E_INTERNAL, e.what());
    } catch (...) {
        return set_error(OPDIST_E_INTERNAL, "unknown exception");
    }
}


#define OPDIST_REQUIRE_ARG(cond, msg)                                          \
    do {                                                                       \
        if (!(cond)) {                                                         \
            return set_error(OPDIST_E_INVALID_ARGUMENT, msg);                  \
        }                                                                      \
    } while (0)

opdist::ComplexMatrix read_matrix(std::size_t dim, const double *re_im) {
    std::vector<opdist::Complex> entries(dim * dim);
    for (std::size_t k = 0; k < entries.size(); ++k) {
        entries[k] = {re_im[2 * k], re_im[2 * k + 1]};
    }
    return {dim, dim, std::move(entries)};
}

void write_matrix(const opdist::ComplexMatrix &m, double *re_im) {
    const auto data = m.data();
    for (std::size_t k = 0; k < data.size(); ++k) {
        re_im[2 * k] = data[k].real();
        re_im[2 * k + 1] = data[k].imag();
    }
}

opdist_state *wrap(opdist::DensityOperator rho) {
    return new opdist_state{std::move(rho)};
}

} // namespace

extern "C" {

const char *opdist_version(void) { return OPDIST_VERSION_STRING; }

const char *opdist_rng_algorithm(void) { return opdist::kRngAlgorithm; }

const char *opdist_status_string(opdist_status status) {
    switch (status) {
    case OPDIST_OK:
        return "ok";
    case OPDIST_E_SHAPE:
        return "shape error";
    case OPDIST_E_DOMAIN:
        return "domain error";
    case OPDIST_E_CONVERGENCE:
        return "convergence error";
    case OPDIST_E_NOT_HERMITIAN:
        return "not Hermitian";
    case OPDIST_E_BAD_TRACE:
        return "trace is not one";
    case OPDIST_E_NOT_PSD:
        return "not positive semidefinite";
    case OPDIST_E_UNSUPPORTED_DIMENSION:
        return "unsupported dimension";
    case OPDIST_E_INVALID_ARGUMENT:
        return "invalid argument";
    case OPDIST_E_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

const char *opdist_last_error(void) { return g_last_error.c_str(); }

uint64_t opdist_split_seed(uint64_t seed, uint64_t index) {
    return opdist::split_seed({seed}, index).value;
}

/* states */

opdist_status opdist_state_from_matrix(size_t dim, const double *re_im,
                                       double tol, opdist_state **out) {
    OPDIST_REQUIRE_ARG(re_im && out, "null pointer argument");
    OPDIST_REQUIRE_ARG(dim > 0, "dimension must be positive");
    return guarded([&] {
        *out = wrap(opdist::validate_state(read_matrix(dim, re_im), tol));
    });
}

opdist_status opdist_state_from_bloch(size_t dim, const double *coords,
                                      double tol, opdist_state **out) {
    OPDIST_REQUIRE_ARG(coords && out, "null pointer argument");
    return guarded([&] {
        const auto basis = opdist::OperatorBasis::gell_mann(dim);
        opdist::BlochVector v{
            dim, std::vector<double>(coords, coords + basis.size())};
        *out = wrap(opdist::validate_state(opdist::decode(v, basis), tol));
    });
}

opdist_status opdist_state_from_vector(size_t dim, const double *re_im,
                                       opdist_state **out) {
    OPDIST_REQUIRE_ARG(re_im && out, "null pointer argument");
    return guarded([&] {
        std::vector<opdist::Complex> psi(dim);
        for (std::size_t k = 0; k < dim; ++k) {
            psi[k] = {re_im[2 * k], re_im[2 * k + 1]};
        }
        *out = wrap(opdist::DensityOperator::pure(psi));
    });
}

opdist_status opdist_state_maximally_mixed(size_t dim, opdist_state **out) {
    OPDIST_REQUIRE_ARG(out, "null pointer argument");
    return guarded(
        [&] { *out = wrap(opdist::DensityOperator::maximally_mixed(dim)); });
}

opdist_status opdist_state_random_pure(size_t dim, uint64_t seed,
                                       opdist_state **out) {
    OPDIST_REQUIRE_ARG(out, "null pointer argument");
    return guarded([&] { *out = wrap(opdist::random_pure(dim, {seed})); });
}

opdist_status opdist_state_random_mixed(size_t dim, uint64_t seed,
                                        opdist_state **out) {
    OPDIST_REQUIRE_ARG(out, "null pointer argument");
    return guarded([&] { *out = wrap(opdist::random_mixed(dim, {seed})); });
}

void opdist_state_free(opdist_state *state) { delete state; }

size_t opdist_state_dim(const opdist_state *state) {
    return state ? state->value.dim() : 0;
}

opdist_status opdist_state_matrix(const opdist_state *state, double *re_im,
                                  size_t len) {
    OPDIST_REQUIRE_ARG(state && re_im, "null pointer argument");
    const std::size_t d = state->value.dim();
    OPDIST_REQUIRE_ARG(len >= 2 * d * d, "output buffer too small");
    write_matrix(state->value.matrix(), re_im);
    return OPDIST_OK;
}

opdist_status opdist_state_bloch(const opdist_state *state, double *coords,
                                 size_t len) {
    OPDIST_REQUIRE_ARG(state && coords, "null pointer argument");
    const std::size_t d = state->value.dim();
    OPDIST_REQUIRE_ARG(d >= 2 && len >= d * d - 1, "output buffer too small");
    return guarded([&] {
        const auto v = opdist::encode(state->value,
                                      opdist::OperatorBasis::gell_mann(d));
        std::copy(v.coords.begin(), v.coords.end(), coords);
    });
}

opdist_status opdist_state_purity(const opdist_state *state, double *out) {
    OPDIST_REQUIRE_ARG(state && out, "null pointer argument");
    *out = opdist::purity(state->value);
    return OPDIST_OK;
}

/* complementary measurement sets */

opdist_status opdist_mub_standard(size_t dim, opdist_mub **out) {
    OPDIST_REQUIRE_ARG(out, "null pointer argument");
    return guarded([&] { *out = new opdist_mub{opdist::standard_mub(dim)}; });
}

opdist_status opdist_mub_from_projectors(size_t dim, size_t num_bases,
                                         const double *re_im,
                                         const char *const *labels,
                                         opdist_mub **out) {
    OPDIST_REQUIRE_ARG(re_im && out, "null pointer argument");
    OPDIST_REQUIRE_ARG(dim >= 2 && num_bases >= 1,
                       "need dim >= 2 and at least one basis");
    return guarded([&] {
        std::vector<opdist::MeasurementBasis> bases;
        const std::size_t stride = 2 * dim * dim;
        for (std::size_t a = 0; a < num_bases; ++a) {
            std::vector<opdist::ComplexMatrix> ps;
            for (std::size_t i = 0; i < dim; ++i) {
                ps.push_back(
                    read_matrix(dim, re_im + (a * dim + i) * stride));
            }
            std::string label = labels && labels[a]
                                    ? std::string(labels[a])
                                    : "basis-" + std::to_string(a);
            bases.emplace_back(std::move(label), std::move(ps));
        }
        *out = new opdist_mub{opdist::MubSet(std::move(bases))};
    });
}

opdist_status opdist_mub_rotate(const opdist_mub *mub,
                                const double *unitary_re_im, opdist_mub **out) {
    OPDIST_REQUIRE_ARG(mub && unitary_re_im && out, "null pointer argument");
    return guarded([&] {
        const auto u = read_matrix(mub->value.dim(), unitary_re_im);
        *out = new opdist_mub{opdist::rotate_mub(mub->value, u)};
    });
}

opdist_status opdist_mub_rotate_haar(const opdist_mub *mub, uint64_t seed,
                                     opdist_mub **out) {
    OPDIST_REQUIRE_ARG(mub && out, "null pointer argument");
    return guarded([&] {
        const auto u = opdist::haar_unitary(mub->value.dim(), {seed});
        *out = new opdist_mub{opdist::rotate_mub(mub->value, u)};
    });
}

void opdist_mub_free(opdist_mub *mub) { delete mub; }

size_t opdist_mub_dim(const opdist_mub *mub) {
    return mub ? mub->value.dim() : 0;
}

size_t opdist_mub_num_bases(const opdist_mub *mub) {
    return mub ? mub->value.size() : 0;
}

const char *opdist_mub_label(const opdist_mub *mub, size_t basis) {
    if (!mub || basis >= mub->value.size()) {
        return nullptr;
    }
    return mub->value[basis].label().c_str();
}

opdist_status opdist_mub_projector(const opdist_mub *mub, size_t basis,
                                   size_t outcome, double *re_im, size_t len) {
    OPDIST_REQUIRE_ARG(mub && re_im, "null pointer argument");
    const std::size_t d = mub->value.dim();
    OPDIST_REQUIRE_ARG(basis < mub->value.size() && outcome < d,
                       "basis or outcome index out of range");
    OPDIST_REQUIRE_ARG(len >= 2 * d * d, "output buffer too small");
    write_matrix(mub->value[basis][outcome], re_im);
    return OPDIST_OK;
}

opdist_status opdist_mub_verify(const opdist_mub *mub, double tol,
                                opdist_mub_report *out) {
    OPDIST_REQUIRE_ARG(mub && out, "null pointer argument");
    OPDIST_REQUIRE_ARG(tol > 0.0, "tolerance must be positive");
    return guarded([&] {
        const auto r = opdist::verify_mub(mub->value, tol);
        *out = opdist_mub_report{r.dim,
                                 r.num_bases,
                                 r.tol,
                                 r.intra_basis,
                                 r.overlap,
                                 r.bloch_orthogonality,
                                 r.subspace_projector,
                                 r.subspace_orthogonality,
                                 r.identity_resolution,
                                 r.pass ? 1 : 0};
    });
}

/* distances */

opdist_status opdist_born_probabilities(const opdist_state *rho,
                                        const opdist_mub *mub, size_t basis,
                                        double *out, size_t len) {
    OPDIST_REQUIRE_ARG(rho && mub && out, "null pointer argument");
    OPDIST_REQUIRE_ARG(basis < mub->value.size(), "basis index out of range");
    OPDIST_REQUIRE_ARG(len >= mub->value.dim(), "output buffer too small");
    return guarded([&] {
        const auto p = opdist::born_probabilities(rho->value, mub->value[basis]);
        std::copy(p.probs().begin(), p.probs().end(), out);
    });
}

opdist_status opdist_total_distance(const opdist_state *rho1,
                                    const opdist_state *rho2,
                                    const opdist_mub *mub, double *per_basis,
                                    size_t len, opdist_distance_summary *out) {
    OPDIST_REQUIRE_ARG(rho1 && rho2 && mub && out, "null pointer argument");
    OPDIST_REQUIRE_ARG(!per_basis || len >= mub->value.size(),
                       "per-basis buffer too small");
    return guarded([&] {
        const auto r = opdist::total_distance(rho1->value, rho2->value,
                                              mub->value);
        if (per_basis) {
            for (std::size_t a = 0; a < r.per_basis.size(); ++a) {
                per_basis[a] = r.per_basis[a].distance;
            }
        }
        *out = {r.total, r.hs_distance_sq, r.deviation};
    });
}

opdist_status opdist_hs_distance_sq(const opdist_state *rho1,
                                    const opdist_state *rho2, double *out) {
    OPDIST_REQUIRE_ARG(rho1 && rho2 && out, "null pointer argument");
    return guarded(
        [&] { *out = opdist::hs_distance_sq(rho1->value, rho2->value); });
}

opdist_status opdist_information_content(const opdist_state *rho,
                                         double normalization, double *out) {
    OPDIST_REQUIRE_ARG(rho && out, "null pointer argument");
    return guarded([&] {
        *out = opdist::information_content(rho->value, normalization);
    });
}

opdist_status opdist_fidelity(const opdist_state *rho1,
                              const opdist_state *rho2, double *out) {
    OPDIST_REQUIRE_ARG(rho1 && rho2 && out, "null pointer argument");
    return guarded([&] { *out = opdist::fidelity(rho1->value, rho2->value); });
}

opdist_status opdist_fidelity_pure(const opdist_state *sigma,
                                   const opdist_state *rho, double *out) {
    OPDIST_REQUIRE_ARG(sigma && rho && out, "null pointer argument");
    return guarded(
        [&] { *out = opdist::fidelity_pure(sigma->value, rho->value); });
}

opdist_status opdist_purity_fidelity_relation(const opdist_state *sigma,
                                              const opdist_state *rho,
                                              double *lhs, double *rhs) {
    OPDIST_REQUIRE_ARG(sigma && rho && lhs && rhs, "null pointer argument");
    return guarded([&] {
        const auto r = opdist::purity_fidelity_relation(sigma->value, rho->value);
        *lhs = r.lhs;
        *rhs = r.rhs;
    });
}

opdist_status opdist_ordering_check(const opdist_state *sigma,
                                    const opdist_state *const *tests,
                                    size_t num_tests, const opdist_mub *mub,
                                    opdist_ordering **out) {
    OPDIST_REQUIRE_ARG(sigma && mub && out && (tests || num_tests == 0),
                       "null pointer argument");
    for (size_t k = 0; k < num_tests; ++k) {
        OPDIST_REQUIRE_ARG(tests[k], "null test state");
    }
    return guarded([&] {
        std::vector<opdist::DensityOperator> states;
        states.reserve(num_tests);
        for (size_t k = 0; k < num_tests; ++k) {
            states.push_back(tests[k]->value);
        }
        *out = new opdist_ordering{
            opdist::ordering_check(sigma->value, states, mub->value)};
    });
}

void opdist_ordering_free(opdist_ordering *report) { delete report; }

size_t opdist_ordering_num_violations(const opdist_ordering *report) {
    return report ? report->value.violations.size() : 0;
}

opdist_status opdist_ordering_violation_at(const opdist_ordering *report,
                                           size_t k,
                                           opdist_ordering_violation *out) {
    OPDIST_REQUIRE_ARG(report && out, "null pointer argument");
    OPDIST_REQUIRE_ARG(k < report->value.violations.size(),
                       "violation index out of range");
    const auto &v = report->value.violations[k];
    *out = {v.i, v.j, v.fidelity_i, v.fidelity_j, v.distance_i, v.distance_j};
    return OPDIST_OK;
}

opdist_status opdist_ordering_values(const opdist_ordering *report, size_t k,
                                     double *fidelity, double *distance) {
    OPDIST_REQUIRE_ARG(report && fidelity && distance, "null pointer argument");
    OPDIST_REQUIRE_ARG(k < report->value.fidelities.size(),
                       "test index out of range");
    *fidelity = report->value.fidelities[k];
    *distance = report->value.distances[k];
    return OPDIST_OK;
}

/* finite-shot simulation */

opdist_status opdist_haar_unitary(size_t dim, uint64_t seed, double *re_im,
                                  size_t len) {
    OPDIST_REQUIRE_ARG(re_im, "null pointer argument");
    OPDIST_REQUIRE_ARG(len >= 2 * dim * dim, "output buffer too small");
    return guarded(
        [&] { write_matrix(opdist::haar_unitary(dim, {seed}), re_im); });
}

opdist_status opdist_simulate_shots(const opdist_state *rho,
                                    const opdist_mub *mub, size_t basis,
                                    uint64_t shots, uint64_t seed,
                                    uint64_t *counts, size_t len) {
    OPDIST_REQUIRE_ARG(rho && mub && counts, "null pointer argument");
    OPDIST_REQUIRE_ARG(basis < mub->value.size(), "basis index out of range");
    OPDIST_REQUIRE_ARG(len >= mub->value.dim(), "output buffer too small");
    return guarded([&] {
        const auto rec =
            opdist::simulate_shots(rho->value, mub->value[basis], shots, {seed});
        std::copy(rec.counts.begin(), rec.counts.end(), counts);
    });
}

opdist_status opdist_estimate_total_distance(
    const opdist_state *rho1, const opdist_state *rho2, const opdist_mub *mub,
    uint64_t shots_per_basis, uint64_t seed, opdist_estimator estimator,
    double *estimate, double *exact) {
    OPDIST_REQUIRE_ARG(rho1 && rho2 && mub && estimate && exact,
                       "null pointer argument");
    OPDIST_REQUIRE_ARG(shots_per_basis >= 1, "shot count must be positive");
    OPDIST_REQUIRE_ARG(estimator == OPDIST_ESTIMATOR_PLUG_IN ||
                           estimator == OPDIST_ESTIMATOR_BIAS_CORRECTED,
                       "unknown estimator");
    return guarded([&] {
        const auto r = opdist::estimate_total_distance(
            rho1->value, rho2->value, mub->value, shots_per_basis, {seed},
            estimator == OPDIST_ESTIMATOR_BIAS_CORRECTED
                ? opdist::Estimator::BiasCorrected
                : opdist::Estimator::PlugIn);
        *estimate = r.estimate;
        *exact = r.exact;
    });
}

const char *opdist_tomography_setting_name(size_t setting) {
    static const char *const kNames[] = {"horizontal", "diagonal-45",
                                         "right-circular"};
    return setting < 3 ? kNames[setting] : nullptr;
}

opdist_status opdist_tomography(const opdist_state *rho1,
                                const opdist_state *rho2, uint64_t shots,
                                uint64_t seed, opdist_tomography_report *out) {
    OPDIST_REQUIRE_ARG(rho1 && rho2 && out, "null pointer argument");
    OPDIST_REQUIRE_ARG(shots >= 1, "shot count must be positive");
    return guarded([&] {
        const auto r =
            opdist::tomography_scenario(rho1->value, rho2->value, shots, {seed});
        opdist_tomography_report c{};
        c.shots_per_setting = r.shots_per_setting;
        c.total_shots_per_system = r.total_shots_per_system;
        for (std::size_t s = 0; s < 3; ++s) {
            for (std::size_t sys = 0; sys < 2; ++sys) {
                c.frequencies[s][sys][0] = r.settings[s].frequencies[sys][0];
                c.frequencies[s][sys][1] = r.settings[s].frequencies[sys][1];
            }
        }
        for (std::size_t sys = 0; sys < 2; ++sys) {
            std::copy(r.stokes[sys].coords.begin(), r.stokes[sys].coords.end(),
                      c.stokes[sys]);
            write_matrix(r.reconstructed[sys], c.reconstructed[sys]);
            c.projected[sys] = r.projected[sys] ? 1 : 0;
        }
        c.estimated_distance = r.estimated_distance;
        c.reconstructed_distance = r.reconstructed_distance;
        c.exact_distance = r.exact_distance;
        *out = c;
    });
}

opdist_status opdist_log_log_slope(const double *x, const double *y, size_t n,
                                   double *out) {
    OPDIST_REQUIRE_ARG(x && y && out, "null pointer argument");
    return guarded([&] {
        *out = opdist::log_log_slope({x, n}, {y, n});
    });
}

} // extern "C"
