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

#include "opdist/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "opdist/error.hpp"

namespace opdist {

namespace {

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b,
                        const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        fail(ErrorCode::Shape,
             std::string(op) + ": shape mismatch (" + std::to_string(a.rows()) +
                 "x" + std::to_string(a.cols()) + " vs " +
                 std::to_string(b.rows()) + "x" + std::to_string(b.cols()) +
                 ")");
    }
}

void require_square(const ComplexMatrix &a, const char *op) {
    if (!a.is_square() || a.empty()) {
        fail(ErrorCode::Shape, std::string(op) + ": matrix is not square");
    }
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        fail(ErrorCode::Shape, "ComplexMatrix: entry count does not match " +
                                   std::to_string(rows_) + "x" +
                                   std::to_string(cols_));
    }
    for (const auto &z : entries_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            fail(ErrorCode::Domain, "ComplexMatrix: non-finite entry");
        }
    }
}

ComplexMatrix::ComplexMatrix(
    std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    entries_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            fail(ErrorCode::Shape, "ComplexMatrix: ragged initializer");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        m(i, i) = values[i];
    }
    return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> v) {
    const std::size_t n = v.size();
    ComplexMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            m(r, c) = v[r] * std::conj(v[c]);
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

Complex ComplexMatrix::trace() const {
    require_square(*this, "trace");
    Complex t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double ComplexMatrix::max_abs() const noexcept {
    double m = 0.0;
    for (const auto &z : entries_) {
        m = std::max(m, std::abs(z));
    }
    return m;
}

double ComplexMatrix::hermiticity_defect() const {
    require_square(*this, "hermiticity_defect");
    double m = 0.0;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = r; c < cols_; ++c) {
            m = std::max(m, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        }
    }
    return m;
}

std::vector<Complex> ComplexMatrix::column(std::size_t c) const {
    std::vector<Complex> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        v[r] = (*this)(r, c);
    }
    return v;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "operator+");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] += other.entries_[i];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "operator-");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] -= other.entries_[i];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scalar) {
    for (auto &z : entries_) {
        z *= scalar;
    }
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
    a += b;
    return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
    a -= b;
    return a;
}

ComplexMatrix operator*(ComplexMatrix a, Complex scalar) {
    a *= scalar;
    return a;
}

ComplexMatrix operator*(Complex scalar, ComplexMatrix a) {
    a *= scalar;
    return a;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        fail(ErrorCode::Shape, "operator*: inner dimensions differ");
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex ark = a(r, k);
            if (ark == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < b.cols(); ++c) {
                out(r, c) += ark * b(k, c);
            }
        }
    }
    return out;
}

std::vector<Complex> operator*(const ComplexMatrix &a,
                               std::span<const Complex> v) {
    if (a.cols() != v.size()) {
        fail(ErrorCode::Shape, "operator*: vector length differs");
    }
    std::vector<Complex> out(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            out[r] += a(r, c) * v[c];
        }
    }
    return out;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
    }
    return m;
}

Complex hs_inner(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_square(a, "hs_inner");
    require_same_shape(a, b, "hs_inner");
    // Tr(a^dagger b) = sum_{rc} conj(a_rc) b_rc
    Complex s = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        s += std::conj(a.data()[i]) * b.data()[i];
    }
    return s;
}

double hs_norm_sq(const ComplexMatrix &a) {
    require_square(a, "hs_norm_sq");
    double s = 0.0;
    for (const auto &z : a.data()) {
        s += std::norm(z);
    }
    return s;
}

ComplexMatrix EigenDecomposition::reconstruct() const {
    const std::size_t n = values.size();
    ComplexMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            Complex s = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                s += vectors(r, k) * values[k] * std::conj(vectors(c, k));
            }
            out(r, c) = s;
        }
    }
    return out;
}

EigenDecomposition eigh(const ComplexMatrix &input, double tol) {
    require_square(input, "eigh");
    const double defect = input.hermiticity_defect();
    if (defect > tol) {
        fail(ErrorCode::Domain, "eigh: matrix is not Hermitian (defect " +
                                    std::to_string(defect) + ")");
    }
    const std::size_t n = input.rows();

    // Work on the exactly Hermitian part.
    ComplexMatrix a = input;
    for (std::size_t r = 0; r < n; ++r) {
        a(r, r) = a(r, r).real();
        for (std::size_t c = r + 1; c < n; ++c) {
            const Complex h = 0.5 * (a(r, c) + std::conj(a(c, r)));
            a(r, c) = h;
            a(c, r) = std::conj(h);
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double scale = std::max(std::sqrt(hs_norm_sq(a)),
                                  std::numeric_limits<double>::min());
    const double eps = std::numeric_limits<double>::epsilon();

    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = r + 1; c < n; ++c) {
                s += std::norm(a(r, c));
            }
        }
        return std::sqrt(2.0 * s);
    };

    bool converged = n < 2;
    for (int sweep = 0; sweep < kJacobiMaxSweeps && !converged; ++sweep) {
        if (off_norm() <= eps * scale) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double r = std::abs(a(p, q));
                if (r <= std::numeric_limits<double>::min()) {
                    continue;
                }
                // The phase of a_pq is removed by diag(1, e^{-i phi}); the
                // remaining real 2x2 block is annihilated by a Givens rotation.
                const Complex phase = a(p, q) / r;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * r);
                const double t =
                    (theta >= 0 ? 1.0 : -1.0) /
                    (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double cs = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * cs;

                const Complex upp = cs;
                const Complex upq = sn;
                const Complex uqp = -sn * std::conj(phase);
                const Complex uqq = cs * std::conj(phase);

                // a <- a U (columns p, q)
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = akp * upp + akq * uqp;
                    a(k, q) = akp * upq + akq * uqq;
                }
                // a <- U^dagger a (rows p, q)
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
                    a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = app - t * r;
                a(q, q) = aqq + t * r;

                for (std::size_t k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = vkp * upp + vkq * uqp;
                    v(k, q) = vkp * upq + vkq * uqq;
                }
            }
        }
    }
    if (!converged && off_norm() > eps * scale) {
        fail(ErrorCode::Convergence,
             "eigh: Jacobi iteration did not converge in " +
                 std::to_string(kJacobiMaxSweeps) + " sweeps");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) {
                         return a(i, i).real() < a(j, j).real();
                     });

    EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) {
            out.vectors(r, k) = v(r, order[k]);
        }
    }
    return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix &a, double tol) {
    EigenDecomposition eig = eigh(a, tol);
    if (!eig.values.empty() && eig.values.front() < -tol) {
        fail(ErrorCode::NotPsd, "psd_sqrt: eigenvalue " +
                                    std::to_string(eig.values.front()) +
                                    " below -tol");
    }
    for (auto &w : eig.values) {
        w = std::sqrt(std::max(w, 0.0));
    }
    return eig.reconstruct();
}

double unitarity_defect(const ComplexMatrix &u) {
    require_square(u, "unitarity_defect");
    return max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(u.rows()));
}

} // namespace opdist
