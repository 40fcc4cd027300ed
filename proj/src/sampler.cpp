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

#include "opdist/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "opdist/error.hpp"

namespace opdist {

namespace {

void require_qudit(std::size_t d, const char *op) {
    if (d < 2) {
        fail(ErrorCode::Domain,
             std::string(op) + ": dimension must be >= 2, got " +
                 std::to_string(d));
    }
}

std::vector<Complex> gaussian_vector(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<Complex> v(n);
    for (auto &z : v) {
        const double re = normal(rng);
        const double im = normal(rng);
        z = {re, im};
    }
    return v;
}

ComplexMatrix ginibre(std::size_t d, std::mt19937_64 &rng) {
    return ComplexMatrix(d, d, gaussian_vector(d * d, rng));
}

} // namespace

RngSeed split_seed(RngSeed seed, std::uint64_t index) noexcept {
    std::uint64_t z = seed.value + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return {z ^ (z >> 31)};
}

DensityOperator random_pure(std::size_t d, RngSeed seed) {
    require_qudit(d, "random_pure");
    std::mt19937_64 rng(seed.value);
    const std::vector<Complex> psi = gaussian_vector(d, rng);
    return DensityOperator::pure(psi);
}

DensityOperator random_mixed(std::size_t d, RngSeed seed) {
    require_qudit(d, "random_mixed");
    std::mt19937_64 rng(seed.value);
    const ComplexMatrix g = ginibre(d, rng);
    ComplexMatrix w = g * g.adjoint();
    w *= 1.0 / w.trace().real();
    return validate_state(w, 1e-10);
}

ComplexMatrix haar_unitary(std::size_t d, RngSeed seed) {
    require_qudit(d, "haar_unitary");
    std::mt19937_64 rng(seed.value);
    ComplexMatrix q = ginibre(d, rng);
    // Modified Gram-Schmidt, two passes. The implied R has a positive
    // diagonal, which makes Q Haar distributed.
    for (std::size_t c = 0; c < d; ++c) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < c; ++k) {
                Complex proj = 0.0;
                for (std::size_t r = 0; r < d; ++r) {
                    proj += std::conj(q(r, k)) * q(r, c);
                }
                for (std::size_t r = 0; r < d; ++r) {
                    q(r, c) -= proj * q(r, k);
                }
            }
        }
        double n = 0.0;
        for (std::size_t r = 0; r < d; ++r) {
            n += std::norm(q(r, c));
        }
        n = std::sqrt(n);
        for (std::size_t r = 0; r < d; ++r) {
            q(r, c) /= n;
        }
    }
    return q;
}

std::vector<double> ShotRecord::frequencies() const {
    std::vector<double> f(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
        f[i] = static_cast<double>(counts[i]) / static_cast<double>(shots);
    }
    return f;
}

ShotRecord simulate_shots(const DensityOperator &rho,
                          const MeasurementBasis &basis, std::uint64_t n,
                          RngSeed seed) {
    if (n == 0) {
        fail(ErrorCode::Domain, "simulate_shots: shot count must be positive");
    }
    const ProbabilityVector p = born_probabilities(rho, basis);
    std::mt19937_64 rng(seed.value);

    ShotRecord rec{basis.label(), std::vector<std::uint64_t>(p.dim(), 0), n};
    std::uint64_t remaining = n;
    double mass = 1.0;
    for (std::size_t i = 0; i + 1 < p.dim() && remaining > 0; ++i) {
        double q = mass > 0.0 ? p[i] / mass : 1.0;
        q = std::clamp(q, 0.0, 1.0);
        std::binomial_distribution<std::uint64_t> binom(remaining, q);
        const std::uint64_t c = binom(rng);
        rec.counts[i] = c;
        remaining -= c;
        mass -= p[i];
    }
    rec.counts.back() += remaining;
    return rec;
}

ShotEstimate estimate_total_distance(const DensityOperator &rho1,
                                     const DensityOperator &rho2,
                                     const MubSet &m, std::uint64_t n_per_basis,
                                     RngSeed seed, Estimator estimator) {
    if (rho1.dim() != rho2.dim() || m.dim() != rho1.dim()) {
        fail(ErrorCode::Shape, "estimate_total_distance: dimensions differ");
    }
    ShotEstimate out;
    out.per_basis.reserve(m.size());
    const double n = static_cast<double>(n_per_basis);
    for (std::size_t a = 0; a < m.size(); ++a) {
        const auto f1 =
            simulate_shots(rho1, m[a], n_per_basis, split_seed(seed, 2 * a))
                .frequencies();
        const auto f2 =
            simulate_shots(rho2, m[a], n_per_basis, split_seed(seed, 2 * a + 1))
                .frequencies();
        double dist = 0.0;
        for (std::size_t i = 0; i < f1.size(); ++i) {
            const double diff = f1[i] - f2[i];
            dist += diff * diff;
            if (estimator == Estimator::BiasCorrected && n_per_basis > 1) {
                dist -= (f1[i] * (1.0 - f1[i]) + f2[i] * (1.0 - f2[i])) /
                        (n - 1.0);
            }
        }
        out.per_basis.push_back(dist);
        out.estimate += dist;
    }
    out.exact = hs_distance_sq(rho1, rho2);
    return out;
}

BlochVector project_to_bloch_ball(const BlochVector &stokes) {
    const double norm = std::sqrt(stokes.norm_sq());
    if (norm <= 1.0) {
        return stokes;
    }
    BlochVector out = stokes;
    for (auto &x : out.coords) {
        x /= norm;
    }
    return out;
}

TomographyReport tomography_scenario(const DensityOperator &rho1,
                                     const DensityOperator &rho2,
                                     std::uint64_t n, RngSeed seed) {
    if (rho1.dim() != 2 || rho2.dim() != 2) {
        fail(ErrorCode::Domain,
             "tomography_scenario: polarization tomography needs qubit states");
    }
    const MubSet pauli = standard_mub(2);
    const OperatorBasis lambdas = OperatorBasis::gell_mann(2);

    // Polarizer -> complementary basis, and the Bloch coordinate it fixes
    // (coordinates are ordered x, y, z).
    struct Setting {
        const char *polarizer;
        std::size_t basis;
        std::size_t coord;
    };
    constexpr std::array<Setting, 3> kSettings{{
        {"horizontal", 0, 2},
        {"diagonal-45", 1, 0},
        {"right-circular", 2, 1},
    }};

    TomographyReport r;
    r.shots_per_setting = n;
    r.total_shots_per_system = 3 * n;
    for (auto &s : r.stokes) {
        s = BlochVector{2, std::vector<double>(3, 0.0)};
    }

    const std::array<const DensityOperator *, 2> states{&rho1, &rho2};
    for (std::size_t k = 0; k < kSettings.size(); ++k) {
        const Setting &s = kSettings[k];
        const MeasurementBasis &basis = pauli[s.basis];
        TomographySetting &out = r.settings[k];
        out.polarizer = s.polarizer;
        out.basis_label = basis.label();
        double dist = 0.0;
        for (std::size_t sys = 0; sys < 2; ++sys) {
            const auto f = simulate_shots(*states[sys], basis, n,
                                          split_seed(seed, 2 * s.basis + sys))
                               .frequencies();
            out.frequencies[sys] = {f[0], f[1]};
            r.stokes[sys].coords[s.coord] = f[0] - f[1];
        }
        for (std::size_t i = 0; i < 2; ++i) {
            const double diff = out.frequencies[0][i] - out.frequencies[1][i];
            dist += diff * diff;
        }
        r.estimated_distance += dist;
    }

    for (std::size_t sys = 0; sys < 2; ++sys) {
        const BlochVector v = project_to_bloch_ball(r.stokes[sys]);
        r.projected[sys] = v.coords != r.stokes[sys].coords;
        r.reconstructed[sys] = decode(v, lambdas);
    }
    r.reconstructed_distance =
        hs_norm_sq(r.reconstructed[0] - r.reconstructed[1]);
    r.exact_distance = hs_distance_sq(rho1, rho2);
    return r;
}

double log_log_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) {
        fail(ErrorCode::Shape, "log_log_slope: need two or more paired points");
    }
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0)) {
            fail(ErrorCode::Domain, "log_log_slope: values must be positive");
        }
        mx += std::log(x[i]);
        my += std::log(y[i]);
    }
    mx /= static_cast<double>(x.size());
    my /= static_cast<double>(x.size());
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = std::log(x[i]) - mx;
        sxy += dx * (std::log(y[i]) - my);
        sxx += dx * dx;
    }
    if (sxx == 0.0) {
        fail(ErrorCode::Domain, "log_log_slope: x values are all equal");
    }
    return sxy / sxx;
}

} // namespace opdist
