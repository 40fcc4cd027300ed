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

#include "opdist/mub.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "opdist/error.hpp"

namespace opdist {

namespace {

/// Real dense matrix used for the Bloch-space projector checks.
struct RealMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> v;

    RealMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), v(r * c) {}
    double &operator()(std::size_t r, std::size_t c) { return v[r * cols + c]; }
    double operator()(std::size_t r, std::size_t c) const {
        return v[r * cols + c];
    }
};

RealMatrix multiply(const RealMatrix &a, const RealMatrix &b) {
    RealMatrix out(a.rows, b.cols);
    for (std::size_t r = 0; r < a.rows; ++r) {
        for (std::size_t k = 0; k < a.cols; ++k) {
            const double ark = a(r, k);
            if (ark == 0.0) {
                continue;
            }
            for (std::size_t c = 0; c < b.cols; ++c) {
                out(r, c) += ark * b(k, c);
            }
        }
    }
    return out;
}

RealMatrix transpose(const RealMatrix &a) {
    RealMatrix out(a.cols, a.rows);
    for (std::size_t r = 0; r < a.rows; ++r) {
        for (std::size_t c = 0; c < a.cols; ++c) {
            out(c, r) = a(r, c);
        }
    }
    return out;
}

/// Columns are the Bloch vectors of one basis (D x d, D = d^2 - 1).
RealMatrix bloch_columns(const std::vector<BlochVector> &vs) {
    RealMatrix a(vs.front().coords.size(), vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t r = 0; r < a.rows; ++r) {
            a(r, i) = vs[i].coords[r];
        }
    }
    return a;
}

/// (1/d^2) A (A^T B) B^T, i.e. the product of the two subspace projectors
/// P_A P_B with P_X = (1/d) X X^T.
RealMatrix projector_product(const RealMatrix &a, const RealMatrix &b,
                             double d) {
    const RealMatrix at = transpose(a);
    const RealMatrix gram = multiply(at, b);
    RealMatrix out = multiply(multiply(a, gram), transpose(b));
    for (auto &x : out.v) {
        x /= d * d;
    }
    return out;
}

RealMatrix subspace_projector(const RealMatrix &a, double d) {
    RealMatrix out = multiply(a, transpose(a));
    for (auto &x : out.v) {
        x /= d;
    }
    return out;
}

double max_abs(const RealMatrix &a) {
    double m = 0.0;
    for (double x : a.v) {
        m = std::max(m, std::abs(x));
    }
    return m;
}

} // namespace

MeasurementBasis::MeasurementBasis(std::string label,
                                   std::vector<ComplexMatrix> projectors,
                                   double tol)
    : dim_(projectors.size()), label_(std::move(label)),
      projectors_(std::move(projectors)) {
    if (dim_ < 2) {
        fail(ErrorCode::Shape, "MeasurementBasis: need at least 2 projectors");
    }
    ComplexMatrix sum(dim_, dim_);
    for (const auto &p : projectors_) {
        if (p.rows() != dim_ || p.cols() != dim_) {
            fail(ErrorCode::Shape, "MeasurementBasis '" + label_ +
                                       "': projector count must equal the "
                                       "matrix dimension");
        }
        if (p.hermiticity_defect() > tol) {
            fail(ErrorCode::Domain,
                 "MeasurementBasis '" + label_ + "': projector not Hermitian");
        }
        sum += p;
    }
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = i; j < dim_; ++j) {
            const double want = i == j ? 1.0 : 0.0;
            if (std::abs(hs_inner(projectors_[i], projectors_[j]) - want) >
                tol) {
                fail(ErrorCode::Domain, "MeasurementBasis '" + label_ +
                                            "': projectors not orthonormal");
            }
        }
    }
    if (max_abs_diff(sum, ComplexMatrix::identity(dim_)) > tol) {
        fail(ErrorCode::Domain,
             "MeasurementBasis '" + label_ + "': projectors do not sum to 1");
    }
}

MeasurementBasis MeasurementBasis::from_columns(std::string label,
                                                const ComplexMatrix &unitary,
                                                double tol) {
    std::vector<ComplexMatrix> ps;
    ps.reserve(unitary.cols());
    for (std::size_t c = 0; c < unitary.cols(); ++c) {
        ps.push_back(ComplexMatrix::outer(unitary.column(c)));
    }
    return MeasurementBasis(std::move(label), std::move(ps), tol);
}

MubSet::MubSet(std::vector<MeasurementBasis> bases)
    : dim_(bases.empty() ? 0 : bases.front().dim()), bases_(std::move(bases)) {
    if (bases_.empty()) {
        fail(ErrorCode::Shape, "MubSet: no bases");
    }
    for (const auto &b : bases_) {
        if (b.dim() != dim_) {
            fail(ErrorCode::Shape, "MubSet: bases have different dimensions");
        }
    }
}

bool is_prime(std::size_t n) noexcept {
    if (n < 2) {
        return false;
    }
    for (std::size_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            return false;
        }
    }
    return true;
}

MubSet standard_mub(std::size_t d) {
    if (!is_prime(d)) {
        fail(ErrorCode::UnsupportedDimension,
             "standard_mub: d = " + std::to_string(d) +
                 " is not prime; complete sets are only constructed for prime "
                 "dimensions (prime-power constructions are not supported)");
    }
    const Complex i{0.0, 1.0};
    std::vector<MeasurementBasis> bases;

    if (d == 2) {
        const double s = std::numbers::sqrt2 / 2.0;
        bases.push_back(MeasurementBasis::from_columns(
            "sigma_z", ComplexMatrix{{1.0, 0.0}, {0.0, 1.0}}));
        bases.push_back(MeasurementBasis::from_columns(
            "sigma_x", ComplexMatrix{{s, s}, {s, -s}}));
        bases.push_back(MeasurementBasis::from_columns(
            "sigma_y", ComplexMatrix{{s, s}, {i * s, -i * s}}));
        return MubSet(std::move(bases));
    }

    bases.push_back(
        MeasurementBasis::from_columns("computational",
                                       ComplexMatrix::identity(d)));
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t a = 1; a <= d; ++a) {
        ComplexMatrix u(d, d);
        for (std::size_t j = 1; j <= d; ++j) {
            for (std::size_t k = 1; k <= d; ++k) {
                // Reduce the exponent mod d in integers before taking the phase.
                const std::size_t m = (a * k * k + j * k) % d;
                const double angle = 2.0 * std::numbers::pi *
                                     static_cast<double>(m) /
                                     static_cast<double>(d);
                u(k - 1, j - 1) = norm * std::polar(1.0, angle);
            }
        }
        bases.push_back(
            MeasurementBasis::from_columns("quadratic-" + std::to_string(a), u));
    }
    return MubSet(std::move(bases));
}

MubSet rotate_mub(const MubSet &m, const ComplexMatrix &u) {
    if (!u.is_square() || u.rows() != m.dim()) {
        fail(ErrorCode::Shape, "rotate_mub: unitary dimension mismatch");
    }
    const double defect = unitarity_defect(u);
    if (defect > 1e-9) {
        fail(ErrorCode::Domain, "rotate_mub: matrix is not unitary (defect " +
                                    std::to_string(defect) + ")");
    }
    const ComplexMatrix ud = u.adjoint();
    std::vector<MeasurementBasis> bases;
    bases.reserve(m.size());
    for (const auto &b : m.bases()) {
        std::vector<ComplexMatrix> ps;
        ps.reserve(b.dim());
        for (const auto &p : b.projectors()) {
            ps.push_back(u * p * ud);
        }
        bases.emplace_back(b.label(), std::move(ps), 1e-9);
    }
    return MubSet(std::move(bases));
}

std::vector<BlochVector> bloch_vectors(const MeasurementBasis &basis,
                                       const OperatorBasis &lambdas) {
    std::vector<BlochVector> out;
    out.reserve(basis.dim());
    for (const auto &p : basis.projectors()) {
        out.push_back(encode(p, lambdas));
    }
    return out;
}

double MubReport::max_deviation() const noexcept {
    return std::max({intra_basis, overlap, bloch_orthogonality,
                     subspace_projector, subspace_orthogonality,
                     identity_resolution});
}

MubReport verify_mub(const MubSet &m, double tol) {
    const std::size_t d = m.dim();
    const double dd = static_cast<double>(d);
    const OperatorBasis lambdas = OperatorBasis::gell_mann(d);
    const std::size_t bloch_dim = lambdas.size();

    MubReport r;
    r.dim = d;
    r.num_bases = m.size();
    r.tol = tol;

    std::vector<std::vector<BlochVector>> vecs;
    std::vector<RealMatrix> cols;
    for (const auto &b : m.bases()) {
        vecs.push_back(bloch_vectors(b, lambdas));
        cols.push_back(bloch_columns(vecs.back()));
    }

    for (const auto &vs : vecs) {
        std::vector<double> sum(bloch_dim, 0.0);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                const double want = (i == j ? dd : 0.0) - 1.0;
                r.intra_basis =
                    std::max(r.intra_basis, std::abs(dot(vs[i], vs[j]) - want));
            }
            for (std::size_t k = 0; k < bloch_dim; ++k) {
                sum[k] += vs[i].coords[k];
            }
        }
        for (double s : sum) {
            r.intra_basis = std::max(r.intra_basis, std::abs(s));
        }
    }

    RealMatrix resolution(bloch_dim, bloch_dim);
    for (std::size_t a = 0; a < m.size(); ++a) {
        RealMatrix p = subspace_projector(cols[a], dd);
        RealMatrix p2 = multiply(p, p);
        double trace = 0.0;
        for (std::size_t k = 0; k < bloch_dim; ++k) {
            trace += p(k, k);
        }
        for (std::size_t k = 0; k < p.v.size(); ++k) {
            r.subspace_projector =
                std::max(r.subspace_projector, std::abs(p2.v[k] - p.v[k]));
            resolution.v[k] += p.v[k];
        }
        r.subspace_projector =
            std::max(r.subspace_projector, std::abs(trace - (dd - 1.0)));

        for (std::size_t b = a + 1; b < m.size(); ++b) {
            for (std::size_t i = 0; i < d; ++i) {
                for (std::size_t j = 0; j < d; ++j) {
                    const double p_ij = hs_inner(m[b][j], m[a][i]).real();
                    r.overlap = std::max(r.overlap, std::abs(p_ij - 1.0 / dd));
                    r.bloch_orthogonality =
                        std::max(r.bloch_orthogonality,
                                 std::abs(dot(vecs[a][i], vecs[b][j])));
                }
            }
            r.subspace_orthogonality =
                std::max(r.subspace_orthogonality,
                         max_abs(projector_product(cols[a], cols[b], dd)));
        }
    }
    for (std::size_t k = 0; k < bloch_dim; ++k) {
        resolution(k, k) -= 1.0;
    }
    r.identity_resolution = max_abs(resolution);

    r.pass = r.max_deviation() <= tol;
    return r;
}

} // namespace opdist
