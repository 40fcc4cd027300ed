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

#include "opdist/bloch.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "opdist/error.hpp"

namespace opdist {

OperatorBasis OperatorBasis::gell_mann(std::size_t d) {
    if (d < 2) {
        fail(ErrorCode::Domain, "gell_mann_basis: dimension must be >= 2, got " +
                                    std::to_string(d));
    }
    const Complex i{0.0, 1.0};
    std::vector<ComplexMatrix> lambdas;
    lambdas.reserve(d * d - 1);

    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = j + 1; k < d; ++k) {
            ComplexMatrix m(d, d);
            m(j, k) = 1.0;
            m(k, j) = 1.0;
            lambdas.push_back(std::move(m));
        }
    }
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = j + 1; k < d; ++k) {
            ComplexMatrix m(d, d);
            m(j, k) = -i;
            m(k, j) = i;
            lambdas.push_back(std::move(m));
        }
    }
    for (std::size_t l = 1; l < d; ++l) {
        ComplexMatrix m(d, d);
        for (std::size_t j = 0; j < l; ++j) {
            m(j, j) = 1.0;
        }
        m(l, l) = -static_cast<double>(l);
        lambdas.push_back(std::move(m));
    }

    for (auto &m : lambdas) {
        m *= std::sqrt(static_cast<double>(d) / hs_norm_sq(m));
    }
    return OperatorBasis(d, std::move(lambdas));
}

double BlochVector::norm_sq() const noexcept {
    double s = 0.0;
    for (double x : coords) {
        s += x * x;
    }
    return s;
}

double dot(const BlochVector &a, const BlochVector &b) {
    if (a.coords.size() != b.coords.size()) {
        fail(ErrorCode::Shape, "dot: Bloch vector lengths differ");
    }
    double s = 0.0;
    for (std::size_t k = 0; k < a.coords.size(); ++k) {
        s += a.coords[k] * b.coords[k];
    }
    return s;
}

DensityOperator DensityOperator::maximally_mixed(std::size_t d) {
    if (d < 1) {
        fail(ErrorCode::Domain, "maximally_mixed: dimension must be positive");
    }
    return DensityOperator(ComplexMatrix::identity(d) *
                           Complex(1.0 / static_cast<double>(d)));
}

DensityOperator DensityOperator::pure(std::span<const Complex> psi) {
    double n = 0.0;
    for (const auto &z : psi) {
        n += std::norm(z);
    }
    if (psi.empty() || !(n > 0.0)) {
        fail(ErrorCode::Domain, "DensityOperator::pure: zero vector");
    }
    return DensityOperator(ComplexMatrix::outer(psi) * Complex(1.0 / n));
}

DensityOperator validate_state(const ComplexMatrix &m, double tol) {
    if (!m.is_square() || m.empty()) {
        fail(ErrorCode::Shape, "validate_state: matrix is not square");
    }
    const double defect = m.hermiticity_defect();
    if (defect > tol) {
        fail(ErrorCode::NotHermitian,
             "validate_state: Hermiticity check failed (defect " +
                 std::to_string(defect) + ")");
    }
    const Complex tr = m.trace();
    if (std::abs(tr - 1.0) > tol) {
        fail(ErrorCode::BadTrace, "validate_state: trace check failed (Tr = " +
                                      std::to_string(tr.real()) + ")");
    }
    ComplexMatrix h = 0.5 * (m + m.adjoint());
    const EigenDecomposition eig = eigh(h, tol);
    if (eig.values.front() < -tol) {
        fail(ErrorCode::NotPsd,
             "validate_state: positivity check failed (min eigenvalue " +
                 std::to_string(eig.values.front()) + ")");
    }
    return DensityOperator(std::move(h));
}

BlochVector encode(const ComplexMatrix &h, const OperatorBasis &basis) {
    if (h.rows() != basis.dim() || h.cols() != basis.dim()) {
        fail(ErrorCode::Shape, "encode: operator dimension " +
                                   std::to_string(h.rows()) +
                                   " does not match basis dimension " +
                                   std::to_string(basis.dim()));
    }
    const double residue_tol = 1e-12 * std::max(1.0, h.max_abs());
    BlochVector v{basis.dim(), std::vector<double>(basis.size())};
    for (std::size_t a = 0; a < basis.size(); ++a) {
        // lambda_a is Hermitian, so Tr(lambda_a h) = (lambda_a | h).
        const Complex c = hs_inner(basis[a], h);
        if (std::abs(c.imag()) > residue_tol) {
            fail(ErrorCode::Domain,
                 "encode: operator is not Hermitian (imaginary coordinate " +
                     std::to_string(c.imag()) + ")");
        }
        v.coords[a] = c.real();
    }
    return v;
}

BlochVector encode(const DensityOperator &rho, const OperatorBasis &basis) {
    return encode(rho.matrix(), basis);
}

ComplexMatrix decode(const BlochVector &v, const OperatorBasis &basis) {
    if (v.dim != basis.dim() || v.coords.size() != basis.size()) {
        fail(ErrorCode::Shape, "decode: Bloch vector does not match basis");
    }
    const std::size_t d = basis.dim();
    ComplexMatrix m = ComplexMatrix::identity(d);
    for (std::size_t a = 0; a < basis.size(); ++a) {
        if (v.coords[a] != 0.0) {
            m += basis[a] * Complex(v.coords[a]);
        }
    }
    m *= 1.0 / static_cast<double>(d);
    return m;
}

double purity(const DensityOperator &rho) { return hs_norm_sq(rho.matrix()); }

} // namespace opdist
