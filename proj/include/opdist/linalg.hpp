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
 * Dense complex matrices and the Hermitian kernels every other module is
 * built on: Hilbert-Schmidt inner product, Jacobi eigensolver and the
 * positive-semidefinite square root.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace opdist {

using Complex = std::complex<double>;

/// Default tolerance for Hermiticity and positivity checks.
inline constexpr double kDefaultTol = 1e-9;

/// Row-major dense complex matrix with value semantics.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols,
                  std::vector<Complex> entries);
    /// Square matrix from nested rows, e.g. {{0, 1}, {1, 0}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zeros(std::size_t n) { return {n, n}; }
    static ComplexMatrix diagonal(std::span<const double> values);
    /// |v><v| for a column vector v.
    static ComplexMatrix outer(std::span<const Complex> v);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }
    [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }

    Complex &operator()(std::size_t r, std::size_t c) {
        return entries_[r * cols_ + c];
    }
    const Complex &operator()(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }

    [[nodiscard]] std::span<const Complex> data() const noexcept {
        return entries_;
    }
    [[nodiscard]] std::span<Complex> data() noexcept { return entries_; }

    [[nodiscard]] ComplexMatrix adjoint() const;
    [[nodiscard]] Complex trace() const;
    /// Largest |entry|; the norm used by every tolerance in the library.
    [[nodiscard]] double max_abs() const noexcept;
    /// max |A - A^dagger|.
    [[nodiscard]] double hermiticity_defect() const;
    /// Column c as a vector.
    [[nodiscard]] std::vector<Complex> column(std::size_t c) const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scalar);

    friend bool operator==(const ComplexMatrix &,
                           const ComplexMatrix &) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(ComplexMatrix a, Complex scalar);
ComplexMatrix operator*(Complex scalar, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
/// Matrix-vector product.
std::vector<Complex> operator*(const ComplexMatrix &a,
                               std::span<const Complex> v);

/// max |a - b| over entries; shapes must agree.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// Hilbert-Schmidt inner product Tr(a^dagger b).
Complex hs_inner(const ComplexMatrix &a, const ComplexMatrix &b);

/// Squared Hilbert-Schmidt norm Tr(a^dagger a).
double hs_norm_sq(const ComplexMatrix &a);

/// Eigenpairs of a Hermitian matrix. Eigenvalues ascend and column k of
/// `vectors` belongs to `values[k]`.
struct EigenDecomposition {
    std::vector<double> values;
    ComplexMatrix vectors;

    /// V diag(w) V^dagger.
    [[nodiscard]] ComplexMatrix reconstruct() const;
};

/// Maximum number of cyclic Jacobi sweeps before giving up.
inline constexpr int kJacobiMaxSweeps = 100;

/**
 * Cyclic complex Jacobi eigensolver for Hermitian matrices.
 *
 * Throws Error(Domain) when the input is not Hermitian within `tol` and
 * Error(Convergence) when the off-diagonal mass has not vanished after
 * kJacobiMaxSweeps sweeps.
 */
EigenDecomposition eigh(const ComplexMatrix &a, double tol = kDefaultTol);

/**
 * Principal square root of a positive-semidefinite Hermitian matrix.
 *
 * Eigenvalues in [-tol, 0) are clamped to zero; anything more negative raises
 * Error(NotPsd).
 */
ComplexMatrix psd_sqrt(const ComplexMatrix &a, double tol = kDefaultTol);

/// max |U^dagger U - 1|.
double unitarity_defect(const ComplexMatrix &u);

} // namespace opdist
