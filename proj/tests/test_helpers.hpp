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

// Shared fixtures for the unit and acceptance suites. The `oracle` namespace
// holds closed-form or brute-force evaluations that never call into the
// library routines they are used to check.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "opdist/linalg.hpp"

namespace opdist::testing {

inline const Complex kI{0.0, 1.0};

inline ComplexMatrix pauli_x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
inline ComplexMatrix pauli_y() { return {{0.0, -kI}, {kI, 0.0}}; }
inline ComplexMatrix pauli_z() { return {{1.0, 0.0}, {0.0, -1.0}}; }

/// (1 + x sx + y sy + z sz) / 2
inline ComplexMatrix qubit(double x, double y, double z) {
    return {{0.5 * (1.0 + z), 0.5 * Complex(x, -y)},
            {0.5 * Complex(x, y), 0.5 * (1.0 - z)}};
}

inline ComplexMatrix random_matrix(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    ComplexMatrix m(n, n);
    for (auto &z : m.data()) {
        const double re = g(rng);
        const double im = g(rng);
        z = {re, im};
    }
    return m;
}

inline ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64 &rng) {
    const ComplexMatrix g = random_matrix(n, rng);
    return 0.5 * (g + g.adjoint());
}

/// G^dagger G.
inline ComplexMatrix random_psd(std::size_t n, std::mt19937_64 &rng) {
    const ComplexMatrix g = random_matrix(n, rng);
    return g.adjoint() * g;
}

namespace oracle {

/// Eigenvalues of a 2x2 Hermitian matrix from the characteristic polynomial.
inline std::vector<double> eigenvalues_2x2(const ComplexMatrix &m) {
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const double h = 0.5 * (a - d);
    const double r = std::sqrt(h * h + std::norm(m(0, 1)));
    return {0.5 * (a + d) - r, 0.5 * (a + d) + r};
}

/// Eigenvalues of a 3x3 Hermitian matrix via the trigonometric solution of
/// the characteristic cubic, ascending.
inline std::vector<double> eigenvalues_3x3(const ComplexMatrix &m) {
    const double a = m(0, 0).real();
    const double b = m(1, 1).real();
    const double c = m(2, 2).real();
    const Complex d = m(0, 1);
    const Complex e = m(1, 2);
    const Complex f = m(0, 2);
    const double p1 = std::norm(d) + std::norm(e) + std::norm(f);
    const double q = (a + b + c) / 3.0;
    const double p2 = (a - q) * (a - q) + (b - q) * (b - q) +
                      (c - q) * (c - q) + 2.0 * p1;
    const double p = std::sqrt(p2 / 6.0);
    if (p == 0.0) {
        return {a, b, c};
    }
    // det((M - qI)/p)
    const double aa = (a - q) / p;
    const double bb = (b - q) / p;
    const double cc = (c - q) / p;
    const Complex dd = d / p;
    const Complex ee = e / p;
    const Complex ff = f / p;
    const double det = aa * bb * cc + 2.0 * (dd * ee * std::conj(ff)).real() -
                       aa * std::norm(ee) - bb * std::norm(ff) -
                       cc * std::norm(dd);
    const double r = std::clamp(det / 2.0, -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    const double e1 = q + 2.0 * p * std::cos(phi);
    const double e3 = q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
    const double e2 = 3.0 * q - e1 - e3;
    std::vector<double> out{e1, e2, e3};
    std::sort(out.begin(), out.end());
    return out;
}

/// Qubit fidelity closed form: Tr(rs) + 2 sqrt(det r det s).
inline double qubit_fidelity(const ComplexMatrix &r, const ComplexMatrix &s) {
    Complex tr = 0.0;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t k = 0; k < 2; ++k) {
            tr += r(i, k) * s(k, i);
        }
    }
    const double det_r = (r(0, 0) * r(1, 1) - r(0, 1) * r(1, 0)).real();
    const double det_s = (s(0, 0) * s(1, 1) - s(0, 1) * s(1, 0)).real();
    return tr.real() + 2.0 * std::sqrt(std::max(0.0, det_r * det_s));
}

/// Vector j (0-based) of quadratic-phase basis a, straight from the sum
/// formula with the exponent evaluated in floating point.
inline std::vector<Complex> quadratic_phase_vector(std::size_t d, std::size_t a,
                                                   std::size_t j) {
    std::vector<Complex> v(d);
    const double dd = static_cast<double>(d);
    for (std::size_t k = 1; k <= d; ++k) {
        const double kk = static_cast<double>(k);
        const double expo = static_cast<double>(a) * kk * kk +
                            static_cast<double>(j + 1) * kk;
        v[k - 1] = std::exp(Complex(0.0, 2.0 * std::numbers::pi * expo / dd)) /
                   std::sqrt(dd);
    }
    return v;
}

/// <v| rho |v> by explicit summation.
inline double expectation(const ComplexMatrix &rho,
                          const std::vector<Complex> &v) {
    Complex s = 0.0;
    for (std::size_t r = 0; r < v.size(); ++r) {
        for (std::size_t c = 0; c < v.size(); ++c) {
            s += std::conj(v[r]) * rho(r, c) * v[c];
        }
    }
    return s.real();
}

/// Sum of squared entry magnitudes of (a - b), computed entrywise.
inline double frobenius_sq_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    double s = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            s += std::norm(a(r, c) - b(r, c));
        }
    }
    return s;
}

} // namespace oracle
} // namespace opdist::testing
