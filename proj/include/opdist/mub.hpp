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
 * Complete sets of mutually complementary (mutually unbiased) measurements.
 *
 * For an odd prime d the set is the computational basis plus the d bases
 *
 *     |phi^a_j> = d^{-1/2} sum_{k=1}^{d} exp[(2 pi i / d)(a k^2 + j k)] |k>,
 *
 * a, j = 1..d. The quadratic-phase family degenerates at d = 2, where the
 * eigenbases of sigma_z, sigma_x and sigma_y are used instead.
 */
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "opdist/bloch.hpp"
#include "opdist/linalg.hpp"

namespace opdist {

/// d orthonormal rank-1 projectors forming one nondegenerate measurement.
class MeasurementBasis {
  public:
    /// Throws Error(Shape) on inconsistent sizes and Error(Domain) when the
    /// projectors are not orthonormal and complete within `tol`.
    MeasurementBasis(std::string label, std::vector<ComplexMatrix> projectors,
                     double tol = 1e-10);

    /// Projectors |v_j><v_j| built from the columns of a unitary.
    static MeasurementBasis from_columns(std::string label,
                                         const ComplexMatrix &unitary,
                                         double tol = 1e-10);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] const std::string &label() const noexcept { return label_; }
    [[nodiscard]] const std::vector<ComplexMatrix> &projectors() const noexcept {
        return projectors_;
    }
    [[nodiscard]] const ComplexMatrix &operator[](std::size_t i) const {
        return projectors_[i];
    }

  private:
    std::size_t dim_;
    std::string label_;
    std::vector<ComplexMatrix> projectors_;
};

/**
 * An ordered list of measurement bases sharing a dimension. Complementarity
 * and completeness are not enforced on construction; verify_mub reports them.
 */
class MubSet {
  public:
    explicit MubSet(std::vector<MeasurementBasis> bases);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] std::size_t size() const noexcept { return bases_.size(); }
    [[nodiscard]] const std::vector<MeasurementBasis> &bases() const noexcept {
        return bases_;
    }
    [[nodiscard]] const MeasurementBasis &operator[](std::size_t a) const {
        return bases_[a];
    }

  private:
    std::size_t dim_;
    std::vector<MeasurementBasis> bases_;
};

/// Deterministic trial division.
bool is_prime(std::size_t n) noexcept;

/// Complete set of d+1 bases for prime d; Error(UnsupportedDimension)
/// otherwise.
MubSet standard_mub(std::size_t d);

/// Conjugates every projector by `u`; Error(Domain) unless u is unitary
/// within 1e-9.
MubSet rotate_mub(const MubSet &m, const ComplexMatrix &u);

/// Maximum deviations of each complementarity/completeness condition.
struct MubReport {
    std::size_t dim = 0;
    std::size_t num_bases = 0;
    double tol = 0.0;
    /// |a_i . a_j - (d delta_ij - 1)| and |sum_i a_i| within each basis.
    double intra_basis = 0.0;
    /// |Tr(B_j A_i) - 1/d| across distinct bases.
    double overlap = 0.0;
    /// |a_i . b_j| across distinct bases.
    double bloch_orthogonality = 0.0;
    /// Each (1/d) sum_i a_i a_i^T must be a rank-(d-1) projector:
    /// max of |P^2 - P| and |Tr P - (d-1)|.
    double subspace_projector = 0.0;
    /// |P_a P_b| for distinct bases.
    double subspace_orthogonality = 0.0;
    /// |sum_a P_a - 1| on the (d^2-1)-dimensional Bloch space.
    double identity_resolution = 0.0;
    bool pass = false;

    [[nodiscard]] double max_deviation() const noexcept;
};

inline constexpr double kMubTol = 1e-9;

MubReport verify_mub(const MubSet &m, double tol = kMubTol);

/// Bloch vectors of the projectors of one basis, in the Gell-Mann basis.
std::vector<BlochVector> bloch_vectors(const MeasurementBasis &basis,
                                       const OperatorBasis &lambdas);

} // namespace opdist
