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

#include "opdist/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "opdist/error.hpp"

namespace opdist {

namespace {

void require_same_dim(const DensityOperator &a, const DensityOperator &b,
                      const char *op) {
    if (a.dim() != b.dim()) {
        fail(ErrorCode::Shape, std::string(op) + ": state dimensions differ (" +
                                   std::to_string(a.dim()) + " vs " +
                                   std::to_string(b.dim()) + ")");
    }
}

int sign_with_dead_zone(double x) {
    if (x > kOrderingDeadZone) {
        return 1;
    }
    if (x < -kOrderingDeadZone) {
        return -1;
    }
    return 0;
}

} // namespace

ProbabilityVector::ProbabilityVector(std::vector<double> probs)
    : probs_(std::move(probs)) {
    if (probs_.empty()) {
        fail(ErrorCode::Shape, "ProbabilityVector: empty");
    }
    double sum = 0.0;
    for (auto &p : probs_) {
        if (!(p >= -1e-12)) {
            fail(ErrorCode::Domain, "ProbabilityVector: negative entry " +
                                        std::to_string(p));
        }
        p = std::max(p, 0.0);
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        fail(ErrorCode::Domain,
             "ProbabilityVector: entries sum to " + std::to_string(sum));
    }
}

ProbabilityVector born_probabilities(const DensityOperator &rho,
                                     const MeasurementBasis &basis) {
    if (rho.dim() != basis.dim()) {
        fail(ErrorCode::Shape, "born_probabilities: state dimension " +
                                   std::to_string(rho.dim()) +
                                   " does not match basis dimension " +
                                   std::to_string(basis.dim()));
    }
    std::vector<double> p(basis.dim());
    for (std::size_t i = 0; i < basis.dim(); ++i) {
        p[i] = hs_inner(basis[i], rho.matrix()).real();
    }
    return ProbabilityVector(std::move(p));
}

double single_distance(const ProbabilityVector &p1,
                       const ProbabilityVector &p2) {
    if (p1.dim() != p2.dim()) {
        fail(ErrorCode::Shape, "single_distance: lengths differ");
    }
    double s = 0.0;
    for (std::size_t i = 0; i < p1.dim(); ++i) {
        const double diff = p1[i] - p2[i];
        s += diff * diff;
    }
    return s;
}

DistanceReport total_distance(const DensityOperator &rho1,
                              const DensityOperator &rho2, const MubSet &m) {
    require_same_dim(rho1, rho2, "total_distance");
    if (m.dim() != rho1.dim()) {
        fail(ErrorCode::Shape,
             "total_distance: measurement set dimension differs from states");
    }
    DistanceReport r;
    r.per_basis.reserve(m.size());
    for (const auto &basis : m.bases()) {
        const double dist = single_distance(born_probabilities(rho1, basis),
                                            born_probabilities(rho2, basis));
        r.per_basis.push_back({basis.label(), dist});
        r.total += dist;
    }
    r.hs_distance_sq = hs_distance_sq(rho1, rho2);
    r.deviation = std::abs(r.total - r.hs_distance_sq);
    return r;
}

double hs_distance_sq(const DensityOperator &rho1,
                      const DensityOperator &rho2) {
    require_same_dim(rho1, rho2, "hs_distance_sq");
    return hs_norm_sq(rho1.matrix() - rho2.matrix());
}

double information_content(const DensityOperator &rho, double n) {
    if (!(n > 0.0)) {
        fail(ErrorCode::Domain,
             "information_content: normalization must be positive");
    }
    return n * hs_distance_sq(rho, DensityOperator::maximally_mixed(rho.dim()));
}

double fidelity(const DensityOperator &rho1, const DensityOperator &rho2) {
    require_same_dim(rho1, rho2, "fidelity");
    const ComplexMatrix root = psd_sqrt(rho1.matrix());
    ComplexMatrix inner = root * rho2.matrix() * root;
    inner = 0.5 * (inner + inner.adjoint());
    const EigenDecomposition eig = eigh(inner);

    // Eigenvalues at round-off level would otherwise contribute sqrt(eps)
    // each to the trace.
    const double top = std::max(std::abs(eig.values.front()),
                                std::abs(eig.values.back()));
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() *
                         static_cast<double>(rho1.dim()) * top;
    double tr = 0.0;
    for (double w : eig.values) {
        if (w > floor) {
            tr += std::sqrt(w);
        }
    }
    return std::clamp(tr * tr, 0.0, 1.0);
}

double fidelity_pure(const DensityOperator &sigma, const DensityOperator &rho) {
    require_same_dim(sigma, rho, "fidelity_pure");
    const double p = purity(sigma);
    if (std::abs(p - 1.0) > kPureTol) {
        fail(ErrorCode::Domain, "fidelity_pure: reference is not pure (purity " +
                                    std::to_string(p) + ")");
    }
    return hs_inner(sigma.matrix(), rho.matrix()).real();
}

PurityFidelityRelation purity_fidelity_relation(const DensityOperator &sigma,
                                                const DensityOperator &rho) {
    const double f = fidelity_pure(sigma, rho);
    return {hs_distance_sq(sigma, rho), purity(sigma) + purity(rho) - 2.0 * f};
}

OrderingReport ordering_check(const DensityOperator &sigma,
                              const std::vector<DensityOperator> &tests,
                              const MubSet &m) {
    OrderingReport r;
    r.fidelities.reserve(tests.size());
    r.distances.reserve(tests.size());
    for (const auto &rho : tests) {
        r.fidelities.push_back(fidelity_pure(sigma, rho));
        r.distances.push_back(total_distance(sigma, rho, m).total);
    }
    for (std::size_t i = 0; i < tests.size(); ++i) {
        for (std::size_t j = i + 1; j < tests.size(); ++j) {
            const int f_sign =
                sign_with_dead_zone(r.fidelities[i] - r.fidelities[j]);
            const int d_sign =
                sign_with_dead_zone(r.distances[j] - r.distances[i]);
            if (f_sign != 0 && d_sign != 0 && f_sign != d_sign) {
                r.violations.push_back({i, j, r.fidelities[i], r.fidelities[j],
                                        r.distances[i], r.distances[j]});
            }
        }
    }
    return r;
}

} // namespace opdist
