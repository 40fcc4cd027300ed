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

#include "opdist/error.hpp"
#include "opdist/metric.hpp"
#include "opdist/sampler.hpp"
#include "test_helpers.hpp"

using namespace opdist;
using namespace opdist::testing;
using Catch::Approx;

namespace {

DensityOperator state(const ComplexMatrix &m) { return validate_state(m); }

DensityOperator diag_state(double a, double b) {
    const std::vector<double> w{a, b};
    return validate_state(ComplexMatrix::diagonal(w));
}

/// Operational distance evaluated from basis vectors without projectors:
/// sum over the computational and quadratic-phase bases of
/// sum_j (<v|r1|v> - <v|r2|v>)^2. Odd prime d only.
double oracle_total_distance(const ComplexMatrix &r1, const ComplexMatrix &r2) {
    const std::size_t d = r1.rows();
    double total = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
        const double diff = (r1(j, j) - r2(j, j)).real();
        total += diff * diff;
    }
    for (std::size_t a = 1; a <= d; ++a) {
        for (std::size_t j = 0; j < d; ++j) {
            const auto v = oracle::quadratic_phase_vector(d, a, j);
            const double diff =
                oracle::expectation(r1, v) - oracle::expectation(r2, v);
            total += diff * diff;
        }
    }
    return total;
}

} // namespace

TEST_CASE("ProbabilityVector invariants", "[metric]") {
    CHECK(ProbabilityVector({-1e-13, 1.0})[0] == 0.0);
    CHECK_THROWS_AS(ProbabilityVector({-1e-3, 1.001}), Error);
    CHECK_THROWS_AS(ProbabilityVector({0.5, 0.6}), Error);
    CHECK_THROWS_AS(ProbabilityVector({}), Error);
}

TEST_CASE("born_probabilities", "[metric]") {
    const auto pauli = standard_mub(2);
    const auto zero = state(qubit(0, 0, 1));
    CHECK(born_probabilities(zero, pauli[0]).probs() ==
          std::vector<double>{1.0, 0.0});

    SECTION("eigenstates of one basis are uniform in every other") {
        for (std::size_t d : {2u, 3u, 5u}) {
            const auto m = standard_mub(d);
            for (std::size_t a = 0; a < m.size(); ++a) {
                for (std::size_t i = 0; i < d; ++i) {
                    const auto rho = state(m[a][i]);
                    for (std::size_t b = 0; b < m.size(); ++b) {
                        if (b == a) {
                            continue;
                        }
                        const auto probs = born_probabilities(rho, m[b]);
                        for (double p : probs.probs()) {
                            CHECK(p == Approx(1.0 / static_cast<double>(d))
                                           .margin(1e-12));
                        }
                    }
                }
            }
        }
    }
    SECTION("maximally mixed state is uniform") {
        const auto m = standard_mub(5);
        for (const auto &b : m.bases()) {
            const auto probs =
                born_probabilities(DensityOperator::maximally_mixed(5), b);
            for (double p : probs.probs()) {
                CHECK(p == Approx(0.2).margin(1e-14));
            }
        }
    }
    SECTION("dimension mismatch") {
        CHECK_THROWS_AS(born_probabilities(zero, standard_mub(3)[0]), Error);
    }
}

TEST_CASE("single_distance", "[metric]") {
    const ProbabilityVector p({0.3, 0.7});
    CHECK(single_distance(p, p) == 0.0);
    CHECK(single_distance(ProbabilityVector({1, 0}), ProbabilityVector({0, 1})) ==
          2.0);
    CHECK(single_distance(ProbabilityVector({1, 0}),
                          ProbabilityVector({0.5, 0.5})) == 0.5);
    CHECK_THROWS_AS(single_distance(p, ProbabilityVector({1, 0, 0})), Error);
}

TEST_CASE("total_distance on fixed qubit pairs", "[metric]") {
    const auto pauli = standard_mub(2);
    const auto zero = state(qubit(0, 0, 1));
    const auto one = state(qubit(0, 0, -1));

    const auto same = total_distance(zero, zero, pauli);
    CHECK(same.total == 0.0);

    const auto r = total_distance(zero, one, pauli);
    REQUIRE(r.per_basis.size() == 3);
    CHECK(r.per_basis[0].label == "sigma_z");
    CHECK(r.per_basis[0].distance == Approx(2.0).margin(1e-12));
    CHECK(r.per_basis[1].distance == Approx(0.0).margin(1e-12));
    CHECK(r.per_basis[2].distance == Approx(0.0).margin(1e-12));
    CHECK(r.total == Approx(2.0).margin(1e-12));
    CHECK(r.hs_distance_sq == Approx(2.0).margin(1e-12));

    const auto half = total_distance(zero, DensityOperator::maximally_mixed(2),
                                     pauli);
    CHECK(half.total == Approx(0.5).margin(1e-12));

    CHECK_THROWS_AS(total_distance(zero, zero, standard_mub(3)), Error);
}

TEST_CASE("hs_distance_sq", "[metric]") {
    const auto zero = state(qubit(0, 0, 1));
    CHECK(hs_distance_sq(zero, zero) == 0.0);
    CHECK(hs_distance_sq(zero, state(qubit(0, 0, -1))) ==
          Approx(2.0).margin(1e-15));
    CHECK(hs_distance_sq(diag_state(0.7, 0.3),
                         DensityOperator::maximally_mixed(2)) ==
          Approx(0.08).margin(1e-15));
    CHECK_THROWS_AS(hs_distance_sq(zero, DensityOperator::maximally_mixed(3)),
                    Error);
}

TEST_CASE("equivalence with the Hilbert-Schmidt distance", "[metric][property]") {
    SECTION("against the vector-formula oracle") {
        for (std::size_t d : {3u, 5u}) {
            const auto m = standard_mub(d);
            for (std::uint64_t s = 0; s < 40; ++s) {
                const auto r1 = random_mixed(d, {s});
                const auto r2 = random_pure(d, {s + 100});
                const double want =
                    oracle_total_distance(r1.matrix(), r2.matrix());
                const auto rep = total_distance(r1, r2, m);
                CHECK(rep.total == Approx(want).margin(1e-12));
                CHECK(oracle::frobenius_sq_diff(r1.matrix(), r2.matrix()) ==
                      Approx(want).margin(1e-12));
            }
        }
    }
    SECTION("invariant under rotation of the measurement set") {
        for (std::size_t d : {2u, 3u, 5u, 7u}) {
            const auto base = standard_mub(d);
            for (std::uint64_t u = 0; u < 3; ++u) {
                const auto m = rotate_mub(base, haar_unitary(d, {u + 50}));
                for (std::uint64_t s = 0; s < 30; ++s) {
                    const auto r1 = random_mixed(d, {2 * s});
                    const auto r2 = random_mixed(d, {2 * s + 1});
                    const auto rep = total_distance(r1, r2, m);
                    CHECK(rep.deviation <= 1e-9);
                    double sum = 0.0;
                    for (const auto &b : rep.per_basis) {
                        sum += b.distance;
                    }
                    CHECK(std::abs(sum - rep.total) <= 1e-12);
                }
            }
        }
    }
    SECTION("an incomplete set undercounts") {
        auto bases = standard_mub(3).bases();
        bases.pop_back();
        const MubSet partial(bases);
        const auto r1 = random_pure(3, {1});
        const auto r2 = random_pure(3, {2});
        const auto rep = total_distance(r1, r2, partial);
        CHECK(rep.total < rep.hs_distance_sq);
    }
}

TEST_CASE("bounds and metric axioms", "[metric][property]") {
    for (std::size_t d : {2u, 3u, 5u}) {
        const auto m = standard_mub(d);
        for (std::uint64_t s = 0; s < 50; ++s) {
            const auto a = random_mixed(d, {3 * s});
            const auto b = random_pure(d, {3 * s + 1});
            const auto c = random_mixed(d, {3 * s + 2});
            const double ab = total_distance(a, b, m).total;
            const double ba = total_distance(b, a, m).total;
            const double bc = total_distance(b, c, m).total;
            const double ac = total_distance(a, c, m).total;
            CHECK(ab >= 0.0);
            CHECK(ab <= 2.0 + 1e-9);
            CHECK(std::abs(ab - ba) <= 1e-12);
            CHECK(std::sqrt(ac) <= std::sqrt(ab) + std::sqrt(bc) + 1e-9);
            // Only orthogonal pure pairs reach 2.
            CHECK(ab < 2.0 - 1e-6);
        }
        // Orthogonal pure pair: two projectors from the same basis.
        const auto p = state(m[1][0]);
        const auto q = state(m[1][d - 1]);
        CHECK(total_distance(p, q, m).total == Approx(2.0).margin(1e-12));
    }
}

TEST_CASE("information_content", "[metric]") {
    const auto pauli = standard_mub(2);
    CHECK(information_content(DensityOperator::maximally_mixed(4)) ==
          Approx(0.0).margin(1e-15));
    CHECK(information_content(state(qubit(0.6, 0.0, 0.8))) ==
          Approx(0.5).margin(1e-12));
    CHECK(information_content(random_pure(3, {9})) ==
          Approx(2.0 / 3.0).margin(1e-12));
    CHECK(information_content(random_pure(3, {9}), 3.0) ==
          Approx(2.0).margin(1e-12));
    CHECK_THROWS_AS(information_content(random_pure(2, {1}), 0.0), Error);
    CHECK_THROWS_AS(information_content(random_pure(2, {1}), -1.0), Error);

    for (std::size_t d : {2u, 3u, 5u}) {
        const auto m = standard_mub(d);
        for (std::uint64_t s = 0; s < 20; ++s) {
            const auto rho = random_mixed(d, {s});
            CHECK(information_content(rho, 1.0) ==
                  Approx(total_distance(rho,
                                        DensityOperator::maximally_mixed(d), m)
                             .total)
                      .margin(1e-9));
        }
    }
}

TEST_CASE("fidelity", "[metric]") {
    const auto zero = state(qubit(0, 0, 1));
    const auto one = state(qubit(0, 0, -1));
    const auto mixed = DensityOperator::maximally_mixed(2);

    CHECK(fidelity(zero, zero) == Approx(1.0).margin(1e-9));
    CHECK(fidelity(zero, one) == Approx(0.0).margin(1e-9));
    CHECK(fidelity(mixed, zero) == Approx(0.5).margin(1e-9));
    CHECK(fidelity(mixed, random_pure(2, {4})) == Approx(0.5).margin(1e-9));

    SECTION("agrees with the closed-form qubit oracle") {
        for (std::uint64_t s = 0; s < 100; ++s) {
            const auto a = random_mixed(2, {s});
            const auto b = s % 3 ? random_mixed(2, {s + 500})
                                 : random_pure(2, {s + 500});
            const double want = oracle::qubit_fidelity(a.matrix(), b.matrix());
            CHECK(fidelity(a, b) == Approx(want).margin(1e-9));
        }
    }
    SECTION("range, symmetry, self-fidelity") {
        for (std::size_t d : {2u, 3u, 4u}) {
            for (std::uint64_t s = 0; s < 50; ++s) {
                const auto a = random_mixed(d, {s});
                const auto b = random_mixed(d, {s + 77});
                const double fab = fidelity(a, b);
                CHECK(fab >= 0.0);
                CHECK(fab <= 1.0);
                CHECK(std::abs(fab - fidelity(b, a)) <= 1e-8);
                CHECK(fidelity(a, a) == Approx(1.0).margin(1e-9));
            }
        }
    }
    SECTION("pure pairs reduce to the transition probability") {
        for (std::size_t d : {2u, 3u, 5u}) {
            for (std::uint64_t s = 0; s < 30; ++s) {
                const auto a = random_pure(d, {s});
                const auto b = random_pure(d, {s + 1000});
                CHECK(fidelity(a, b) ==
                      Approx(fidelity_pure(a, b)).margin(1e-9));
            }
        }
    }
}

TEST_CASE("fidelity_pure", "[metric]") {
    const auto zero = state(qubit(0, 0, 1));
    const auto psi = random_pure(3, {12});
    CHECK(fidelity_pure(psi, psi) == Approx(1.0).margin(1e-12));
    CHECK(fidelity_pure(zero, diag_state(0.7, 0.3)) == Approx(0.7).margin(1e-15));
    CHECK(fidelity_pure(zero, state(qubit(1, 0, 0))) ==
          Approx(0.5).margin(1e-15));
    try {
        fidelity_pure(diag_state(0.7, 0.3), zero);
        FAIL("expected an exception");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::Domain);
    }
}

TEST_CASE("purity_fidelity_relation", "[metric]") {
    const auto zero = state(qubit(0, 0, 1));
    const auto psi = random_pure(4, {3});

    auto r = purity_fidelity_relation(psi, psi);
    CHECK(r.lhs == Approx(0.0).margin(1e-12));
    CHECK(r.rhs == Approx(0.0).margin(1e-12));

    r = purity_fidelity_relation(zero, diag_state(0.7, 0.3));
    CHECK(r.lhs == Approx(0.18).margin(1e-12));
    CHECK(r.rhs == Approx(0.18).margin(1e-12));

    r = purity_fidelity_relation(zero, state(qubit(0, 0, -1)));
    CHECK(r.lhs == Approx(2.0).margin(1e-12));
    CHECK(r.rhs == Approx(2.0).margin(1e-12));

    for (std::size_t d : {2u, 3u, 5u}) {
        for (std::uint64_t s = 0; s < 50; ++s) {
            const auto sigma = random_pure(d, {s});
            const auto rho = s % 2 ? random_pure(d, {s + 9})
                                   : random_mixed(d, {s + 9});
            r = purity_fidelity_relation(sigma, rho);
            CHECK(std::abs(r.lhs - r.rhs) <= 1e-10);
        }
    }
    CHECK_THROWS_AS(purity_fidelity_relation(diag_state(0.7, 0.3), zero), Error);
}

TEST_CASE("ordering_check", "[metric]") {
    const auto pauli = standard_mub(2);
    const auto sigma = state(qubit(0, 0, 1));

    SECTION("fixed mixed-state counterexample") {
        const auto rho1 = diag_state(0.7, 0.3);
        const auto rho2 = state(qubit(0.8, 0.0, 0.5));
        // Oracle, by hand: rho2 = [[0.75, 0.4], [0.4, 0.25]].
        //   F(rho1) = <0|rho1|0> = 0.7, F(rho2) = 0.75
        //   P(rho1) = 0.49 + 0.09 = 0.58, P(rho2) = (1 + 0.64 + 0.25)/2 = 0.945
        //   D = 1 + P - 2F: D(rho1) = 0.18, D(rho2) = 0.445
        const double f1 = rho1.matrix()(0, 0).real();
        const double f2 = rho2.matrix()(0, 0).real();
        const double p1 = oracle::frobenius_sq_diff(rho1.matrix(),
                                                    ComplexMatrix::zeros(2));
        const double p2 = oracle::frobenius_sq_diff(rho2.matrix(),
                                                    ComplexMatrix::zeros(2));
        CHECK(f1 == Approx(0.7).margin(1e-15));
        CHECK(f2 == Approx(0.75).margin(1e-15));
        CHECK(1.0 + p1 - 2.0 * f1 == Approx(0.18).margin(1e-12));
        CHECK(1.0 + p2 - 2.0 * f2 == Approx(0.445).margin(1e-12));

        const auto r = ordering_check(sigma, {rho1, rho2}, pauli);
        CHECK(r.fidelities[0] == Approx(0.7).margin(1e-9));
        CHECK(r.fidelities[1] == Approx(0.75).margin(1e-9));
        CHECK(r.distances[0] == Approx(0.18).margin(1e-9));
        CHECK(r.distances[1] == Approx(0.445).margin(1e-9));
        REQUIRE(r.violations.size() == 1);
        CHECK(r.violations[0].i == 0);
        CHECK(r.violations[0].j == 1);
        CHECK_FALSE(r.equivalent());
    }
    SECTION("pure test sets never violate") {
        for (std::size_t d : {2u, 3u}) {
            const auto m = standard_mub(d);
            const auto ref = random_pure(d, {1});
            std::vector<DensityOperator> tests;
            for (std::uint64_t s = 0; s < 25; ++s) {
                tests.push_back(random_pure(d, {s + 10}));
            }
            CHECK(ordering_check(ref, tests, m).equivalent());
        }
    }
    SECTION("degenerate test sets") {
        CHECK(ordering_check(sigma, {diag_state(0.7, 0.3)}, pauli)
                  .violations.empty());
        CHECK(ordering_check(sigma, {}, pauli).violations.empty());
        // Ties fall in the dead zone.
        CHECK(ordering_check(sigma, {diag_state(0.7, 0.3), diag_state(0.7, 0.3)},
                             pauli)
                  .violations.empty());
    }
    SECTION("mixed reference is rejected") {
        CHECK_THROWS_AS(
            ordering_check(diag_state(0.5, 0.5), {sigma, sigma}, pauli), Error);
    }
}
