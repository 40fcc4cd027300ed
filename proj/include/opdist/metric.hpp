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

/**
 * @file
 * Distances and closeness measures between density operators.
 *
 * The operational distance of two states is the sum, over a complete set of
 * complementary measurements, of the squared Euclidean distance between their
 * outcome-probability vectors. It coincides with the squared Hilbert-Schmidt
 * distance, which total_distance reports alongside for comparison.
 */
#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "opdist/bloch.hpp"
#include "opdist/mub.hpp"

namespace opdist {

/// Outcome distribution of one measurement.
class ProbabilityVector {
  public:
    /// Entries >= -1e-12 are clamped to 0; the sum must be 1 within 1e-9.
    /// Violations raise Error(Domain).
    explicit ProbabilityVector(std::vector<double> probs);

    [[nodiscard]] std::size_t dim() const noexcept { return probs_.size(); }
    [[nodiscard]] const std::vector<double> &probs() const noexcept {
        return probs_;
    }
    double operator[](std::size_t i) const { return probs_[i]; }

  private:
    std::vector<double> probs_;
};

ProbabilityVector born_probabilities(const DensityOperator &rho,
                                     const MeasurementBasis &basis);

/// |p1 - p2|^2.
double single_distance(const ProbabilityVector &p1, const ProbabilityVector &p2);

struct BasisDistance {
    std::string label;
    double distance = 0.0;
};

struct DistanceReport {
    std::vector<BasisDistance> per_basis;
    double total = 0.0;
    double hs_distance_sq = 0.0;
    /// |total - hs_distance_sq|; reported, never enforced.
    double deviation = 0.0;
};

DistanceReport total_distance(const DensityOperator &rho1,
                              const DensityOperator &rho2, const MubSet &m);

/// ||rho1 - rho2||^2 in the Hilbert-Schmidt norm.
double hs_distance_sq(const DensityOperator &rho1, const DensityOperator &rho2);

/// n ||rho - 1/d||^2; Error(Domain) unless n > 0.
double information_content(const DensityOperator &rho, double n = 1.0);

/// (Tr sqrt(sqrt(rho1) rho2 sqrt(rho1)))^2, clamped to [0, 1].
double fidelity(const DensityOperator &rho1, const DensityOperator &rho2);

/// Tolerance on 1 - purity(sigma) for a reference to count as pure.
inline constexpr double kPureTol = 1e-9;

/// Tr(sigma rho) for a pure reference sigma; Error(Domain) if sigma is mixed.
double fidelity_pure(const DensityOperator &sigma, const DensityOperator &rho);

struct PurityFidelityRelation {
    /// ||sigma - rho||^2
    double lhs = 0.0;
    /// P(sigma) + P(rho) - 2 Tr(sigma rho)
    double rhs = 0.0;
};

PurityFidelityRelation purity_fidelity_relation(const DensityOperator &sigma,
                                                const DensityOperator &rho);

/// Differences inside this band count as ties in ordering comparisons.
inline constexpr double kOrderingDeadZone = 1e-9;

struct OrderingViolation {
    std::size_t i = 0;
    std::size_t j = 0;
    double fidelity_i = 0.0;
    double fidelity_j = 0.0;
    double distance_i = 0.0;
    double distance_j = 0.0;
};

struct OrderingReport {
    /// Per test state: F_sigma(rho_k) (trace form) and D_total(sigma, rho_k).
    std::vector<double> fidelities;
    std::vector<double> distances;
    std::vector<OrderingViolation> violations;

    [[nodiscard]] bool equivalent() const noexcept { return violations.empty(); }
};

/**
 * Checks whether fidelity to the pure reference `sigma` and operational
 * distance from it order `tests` oppositely. A pair (i, j) is a violation
 * when both differences exceed the dead zone and
 * sign(F_i - F_j) != sign(D_j - D_i).
 */
OrderingReport ordering_check(const DensityOperator &sigma,
                              const std::vector<DensityOperator> &tests,
                              const MubSet &m);

} // namespace opdist
