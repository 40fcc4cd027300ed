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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "opdist/error.hpp"
#include "opdist/linalg.hpp"
#include "test_helpers.hpp"

using namespace opdist;
using namespace opdist::testing;
using Catch::Approx;

TEST_CASE("hs_inner", "[linalg]") {
    SECTION("identity with itself is the dimension") {
        const auto id = ComplexMatrix::identity(2);
        CHECK(hs_inner(id, id) == Complex(2.0, 0.0));
    }
    SECTION("distinct Pauli operators are orthogonal") {
        CHECK(std::abs(hs_inner(pauli_z(), pauli_x())) == 0.0);
        CHECK(std::abs(hs_inner(pauli_x(), pauli_y())) == 0.0);
    }
    SECTION("Pauli normalization is d") {
        CHECK(hs_inner(pauli_z(), pauli_z()) == Complex(2.0, 0.0));
        CHECK(hs_inner(pauli_y(), pauli_y()) == Complex(2.0, 0.0));
    }
    SECTION("shape mismatch") {
        CHECK_THROWS_AS(hs_inner(ComplexMatrix::identity(2),
                                 ComplexMatrix::identity(3)),
                        Error);
        try {
            hs_inner(ComplexMatrix::identity(2), ComplexMatrix::identity(3));
        } catch (const Error &e) {
            CHECK(e.code() == ErrorCode::Shape);
        }
    }
    SECTION("conjugate symmetry and sesquilinearity on random inputs") {
        std::mt19937_64 rng(11);
        for (int t = 0; t < 50; ++t) {
            const std::size_t n = 2 + t % 6;
            const auto a = random_matrix(n, rng);
            const auto b = random_matrix(n, rng);
            const auto c = random_matrix(n, rng);
            const Complex alpha(0.3 * t - 2.0, 1.0 - 0.1 * t);
            CHECK(std::abs(hs_inner(a, b) - std::conj(hs_inner(b, a))) <= 1e-12);
            const Complex lhs = hs_inner(a, alpha * b + c);
            const Complex rhs = alpha * hs_inner(a, b) + hs_inner(a, c);
            CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
        }
    }
}

TEST_CASE("hs_norm_sq", "[linalg]") {
    CHECK(hs_norm_sq(ComplexMatrix::zeros(3)) == 0.0);
    CHECK(hs_norm_sq(ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}}) == 1.0);
    CHECK(hs_norm_sq(pauli_x()) == 2.0);
    CHECK_THROWS_AS(hs_norm_sq(ComplexMatrix(2, 3)), Error);
}

TEST_CASE("ComplexMatrix construction", "[linalg]") {
    CHECK_THROWS_AS(ComplexMatrix(2, 2, std::vector<Complex>(3)), Error);
    CHECK_THROWS_AS(
        ComplexMatrix(1, 1, std::vector<Complex>{Complex(NAN, 0.0)}), Error);
    CHECK_THROWS_AS((ComplexMatrix{{1.0, 0.0}, {1.0}}), Error);
    const auto m = ComplexMatrix{{1.0, 2.0}, {3.0, 4.0}};
    CHECK(m.trace() == Complex(5.0, 0.0));
    CHECK(m.adjoint()(0, 1) == Complex(3.0, 0.0));
}

TEST_CASE("eigh on fixed inputs", "[linalg]") {
    SECTION("diagonal input") {
        const std::vector<double> w{0.7, 0.3};
        const auto eig = eigh(ComplexMatrix::diagonal(w));
        REQUIRE(eig.values.size() == 2);
        CHECK(eig.values[0] == Approx(0.3).margin(1e-15));
        CHECK(eig.values[1] == Approx(0.7).margin(1e-15));
        // Standard basis vectors, up to phase.
        CHECK(std::abs(eig.vectors(1, 0)) == Approx(1.0).margin(1e-15));
        CHECK(std::abs(eig.vectors(0, 1)) == Approx(1.0).margin(1e-15));
    }
    SECTION("Pauli spectrum") {
        for (const auto &p : {pauli_x(), pauli_y(), pauli_z()}) {
            const auto eig = eigh(p);
            CHECK(eig.values[0] == Approx(-1.0).margin(1e-14));
            CHECK(eig.values[1] == Approx(1.0).margin(1e-14));
        }
    }
    SECTION("(sx + sz)/sqrt2 has lambda^2 = 1") {
        const auto h = (pauli_x() + pauli_z()) * Complex(1.0 / std::sqrt(2.0));
        const auto oracle_values = oracle::eigenvalues_2x2(h);
        CHECK(oracle_values[0] == Approx(-1.0).margin(1e-15));
        const auto eig = eigh(h);
        CHECK(eig.values[0] == Approx(-1.0).margin(1e-14));
        CHECK(eig.values[1] == Approx(1.0).margin(1e-14));
    }
    SECTION("non-Hermitian input is a domain error") {
        const ComplexMatrix m{{0.0, 1.0}, {0.0, 0.0}};
        try {
            eigh(m);
            FAIL("expected an exception");
        } catch (const Error &e) {
            CHECK(e.code() == ErrorCode::Domain);
        }
    }
    SECTION("1x1 and zero matrices") {
        CHECK(eigh(ComplexMatrix{{Complex(2.5)}}).values[0] == 2.5);
        const auto eig = eigh(ComplexMatrix::zeros(3));
        CHECK(eig.values == std::vector<double>{0.0, 0.0, 0.0});
    }
}

TEST_CASE("eigh agrees with characteristic-polynomial oracles", "[linalg]") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
        const auto h2 = random_hermitian(2, rng);
        const auto w2 = oracle::eigenvalues_2x2(h2);
        const auto e2 = eigh(h2);
        CHECK(e2.values[0] == Approx(w2[0]).margin(1e-12));
        CHECK(e2.values[1] == Approx(w2[1]).margin(1e-12));

        const auto h3 = random_hermitian(3, rng);
        const auto w3 = oracle::eigenvalues_3x3(h3);
        const auto e3 = eigh(h3);
        for (std::size_t k = 0; k < 3; ++k) {
            CHECK(e3.values[k] == Approx(w3[k]).margin(1e-10));
        }
    }
}

TEST_CASE("eigh reconstruction and orthonormality for d <= 11",
          "[linalg][property]") {
    std::mt19937_64 rng(2024);
    for (std::size_t n = 1; n <= 11; ++n) {
        for (int t = 0; t < 10; ++t) {
            const auto h = random_hermitian(n, rng);
            const auto eig = eigh(h);
            CHECK(std::is_sorted(eig.values.begin(), eig.values.end()));
            CHECK(max_abs_diff(eig.reconstruct(), h) <= 1e-10);
            const auto gram = eig.vectors.adjoint() * eig.vectors;
            CHECK(max_abs_diff(gram, ComplexMatrix::identity(n)) <= 1e-10);
        }
    }
}

TEST_CASE("eigh handles degenerate spectra", "[linalg]") {
    std::mt19937_64 rng(77);
    // U diag(1, 1, 1, -2, -2) U^dagger with U from the eigenvectors of a
    // random Hermitian matrix.
    const auto u = eigh(random_hermitian(5, rng)).vectors;
    const std::vector<double> w{1.0, 1.0, 1.0, -2.0, -2.0};
    const auto h = u * ComplexMatrix::diagonal(w) * u.adjoint();
    const auto eig = eigh(h);
    CHECK(eig.values[0] == Approx(-2.0).margin(1e-12));
    CHECK(eig.values[1] == Approx(-2.0).margin(1e-12));
    CHECK(eig.values[4] == Approx(1.0).margin(1e-12));
    CHECK(max_abs_diff(eig.reconstruct(), h) <= 1e-10);
}

TEST_CASE("psd_sqrt", "[linalg]") {
    SECTION("identity") {
        CHECK(max_abs_diff(psd_sqrt(ComplexMatrix::identity(3)),
                           ComplexMatrix::identity(3)) <= 1e-15);
    }
    SECTION("diag(4, 9)") {
        const std::vector<double> in{4.0, 9.0};
        const std::vector<double> out{2.0, 3.0};
        CHECK(max_abs_diff(psd_sqrt(ComplexMatrix::diagonal(in)),
                           ComplexMatrix::diagonal(out)) <= 1e-14);
    }
    SECTION("projector is its own root") {
        const auto plus = qubit(1.0, 0.0, 0.0);
        CHECK(max_abs_diff(psd_sqrt(plus), plus) <= 1e-8);
        const auto s = psd_sqrt(plus);
        CHECK(max_abs_diff(s * s, plus) <= 1e-12);
    }
    SECTION("clamps small negative eigenvalues") {
        const std::vector<double> in{-1e-11, 0.25};
        const auto s = psd_sqrt(ComplexMatrix::diagonal(in));
        CHECK(s(0, 0) == Complex(0.0));
        CHECK(s(1, 1).real() == Approx(0.5));
    }
    SECTION("rejects genuinely negative spectra") {
        const std::vector<double> in{-1e-3, 1.0};
        try {
            psd_sqrt(ComplexMatrix::diagonal(in));
            FAIL("expected an exception");
        } catch (const Error &e) {
            CHECK(e.code() == ErrorCode::NotPsd);
        }
    }
    SECTION("squares back for random G^dagger G") {
        std::mt19937_64 rng(99);
        for (std::size_t n = 2; n <= 9; ++n) {
            const auto a = random_psd(n, rng);
            const auto s = psd_sqrt(a);
            CHECK(s.hermiticity_defect() <= 1e-12);
            CHECK(max_abs_diff(s * s, a) <= 1e-9);
            CHECK(eigh(s).values.front() >= -1e-12);
        }
    }
}

TEST_CASE("unitarity_defect", "[linalg]") {
    CHECK(unitarity_defect(pauli_y()) <= 1e-15);
    CHECK(unitarity_defect(ComplexMatrix{{1.0, 1.0}, {0.0, 1.0}}) > 0.5);
}
