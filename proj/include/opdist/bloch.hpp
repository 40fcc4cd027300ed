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
 * Generalized Bloch representation of qudit operators.
 *
 * Operators are expanded in a fixed traceless Hermitian basis
 * {lambda_1, ..., lambda_{d^2-1}} normalized to Tr(lambda_a lambda_b) = d
 * delta_ab, so that
 *
 *     rho = (1 + sum_a r_a lambda_a) / d,    r_a = Tr(lambda_a rho).
 *
 * Basis ordering (fixed, so coordinates are reproducible):
 *   1. symmetric   E_jk + E_kj        for j < k in lexicographic order,
 *   2. antisymmetric -i E_jk + i E_kj for j < k in lexicographic order,
 *   3. diagonal    diag(1, .., 1, -l, 0, ..) for l = 1 .. d-1,
 * each rescaled to squared Hilbert-Schmidt norm d. For d = 2 this yields
 * (sigma_x, sigma_y, sigma_z).
 */
#pragma once

#include <cstddef>
#include <vector>

#include "opdist/linalg.hpp"

namespace opdist {

class OperatorBasis {
  public:
    /// Generalized Gell-Mann basis; Error(Domain) for d < 2.
    static OperatorBasis gell_mann(std::size_t d);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    /// d^2 - 1.
    [[nodiscard]] std::size_t size() const noexcept { return lambdas_.size(); }
    /// 0-based: element k is lambda_{k+1}.
    [[nodiscard]] const ComplexMatrix &operator[](std::size_t k) const {
        return lambdas_[k];
    }
    [[nodiscard]] const std::vector<ComplexMatrix> &elements() const noexcept {
        return lambdas_;
    }

  private:
    OperatorBasis(std::size_t d, std::vector<ComplexMatrix> lambdas)
        : dim_(d), lambdas_(std::move(lambdas)) {}

    std::size_t dim_;
    std::vector<ComplexMatrix> lambdas_;
};

inline OperatorBasis gell_mann_basis(std::size_t d) {
    return OperatorBasis::gell_mann(d);
}

struct BlochVector {
    std::size_t dim = 0;
    std::vector<double> coords;

    [[nodiscard]] double norm_sq() const noexcept;
};

double dot(const BlochVector &a, const BlochVector &b);

/// A d x d Hermitian, unit-trace, positive-semidefinite matrix. Only
/// obtainable through validate_state, so holding one means the checks passed.
class DensityOperator {
  public:
    [[nodiscard]] std::size_t dim() const noexcept { return matrix_.rows(); }
    [[nodiscard]] const ComplexMatrix &matrix() const noexcept {
        return matrix_;
    }

    /// 1/d times the identity.
    static DensityOperator maximally_mixed(std::size_t d);
    /// |psi><psi| for a normalized (or normalizable) vector.
    static DensityOperator pure(std::span<const Complex> psi);

  private:
    explicit DensityOperator(ComplexMatrix m) : matrix_(std::move(m)) {}
    friend DensityOperator validate_state(const ComplexMatrix &, double);

    ComplexMatrix matrix_;
};

/**
 * Checks Hermiticity, unit trace and min eigenvalue >= -tol, in that order.
 * Failures raise Error with NotHermitian, BadTrace or NotPsd respectively.
 * The stored matrix is the Hermitian part of `m`.
 */
DensityOperator validate_state(const ComplexMatrix &m, double tol = kDefaultTol);

/// Coordinates Tr(lambda_a h) of any Hermitian h. Imaginary residues up to
/// 1e-12 (relative to the operator scale) are discarded; larger ones raise
/// Error(Domain).
BlochVector encode(const ComplexMatrix &h, const OperatorBasis &basis);
BlochVector encode(const DensityOperator &rho, const OperatorBasis &basis);

/// (1 + sum_a v_a lambda_a) / d. Hermitian with unit trace, not necessarily
/// positive.
ComplexMatrix decode(const BlochVector &v, const OperatorBasis &basis);

/// Tr(rho^2).
double purity(const DensityOperator &rho);

} // namespace opdist
