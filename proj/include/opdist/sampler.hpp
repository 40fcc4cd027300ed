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
 * Random states and finite-shot simulation of complementary measurements.
 *
 * Randomness: every sampler owns a std::mt19937_64 seeded with the raw 64-bit
 * seed. Gaussians come from std::normal_distribution<double>, outcome counts
 * from sequential conditional std::binomial_distribution draws. Sub-tasks
 * derive their seeds with split_seed, so results are a pure function of
 * (inputs, seed) on a given build.
 */
#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "opdist/bloch.hpp"
#include "opdist/linalg.hpp"
#include "opdist/metric.hpp"
#include "opdist/mub.hpp"

namespace opdist {

/// Identifier embedded in output metadata.
inline constexpr const char *kRngAlgorithm =
    "mt19937_64(seed); normal=std::normal_distribution; "
    "multinomial=sequential std::binomial_distribution; "
    "split=splitmix64(seed + 0x9e3779b97f4a7c15*(index+1))";

struct RngSeed {
    std::uint64_t value = 0;
};

/// Seed for sub-task `index` of a run seeded with `seed`.
RngSeed split_seed(RngSeed seed, std::uint64_t index) noexcept;

/// Haar-random pure state from a normalized complex Gaussian vector.
DensityOperator random_pure(std::size_t d, RngSeed seed);

/// G G^dagger / Tr(G G^dagger) for a complex Ginibre matrix G.
DensityOperator random_mixed(std::size_t d, RngSeed seed);

/// Haar unitary: Gram-Schmidt on the columns of a Ginibre matrix.
ComplexMatrix haar_unitary(std::size_t d, RngSeed seed);

struct ShotRecord {
    std::string label;
    std::vector<std::uint64_t> counts;
    std::uint64_t shots = 0;

    [[nodiscard]] std::vector<double> frequencies() const;
};

/// Multinomial outcome counts of `n` independent measurements of `basis`.
ShotRecord simulate_shots(const DensityOperator &rho,
                          const MeasurementBasis &basis, std::uint64_t n,
                          RngSeed seed);

enum class Estimator {
    /// |f1 - f2|^2 on raw frequencies; biased upward by O(1/n).
    PlugIn,
    /// Subtracts f(1-f)/(n-1) per outcome and system, which makes each
    /// squared-frequency term unbiased.
    BiasCorrected,
};

struct ShotEstimate {
    double estimate = 0.0;
    double exact = 0.0;
    std::vector<double> per_basis;
};

/**
 * Estimates the total operational distance from `n_per_basis` shots of each
 * basis on each state. Basis a of system s (0 or 1) uses
 * split_seed(seed, 2a + s). `exact` is the Hilbert-Schmidt value.
 */
ShotEstimate estimate_total_distance(const DensityOperator &rho1,
                                     const DensityOperator &rho2,
                                     const MubSet &m, std::uint64_t n_per_basis,
                                     RngSeed seed,
                                     Estimator estimator = Estimator::PlugIn);

/// One polarizer setting of the qubit tomography experiment.
struct TomographySetting {
    std::string polarizer;
    std::string basis_label;
    /// Frequencies of the transmitted / orthogonal outcome per system.
    std::array<std::array<double, 2>, 2> frequencies{};
};

struct TomographyReport {
    std::uint64_t shots_per_setting = 0;
    /// The 50% filter setting only fixes intensity normalization; it is
    /// represented by the number of photons sent per system.
    std::uint64_t total_shots_per_system = 0;
    std::array<TomographySetting, 3> settings;
    /// Stokes parameters (x, y, z) per system.
    std::array<BlochVector, 2> stokes;
    std::array<ComplexMatrix, 2> reconstructed;
    std::array<bool, 2> projected{};
    /// Plug-in operational distance from the frequencies.
    double estimated_distance = 0.0;
    /// Hilbert-Schmidt distance of the two reconstructed states.
    double reconstructed_distance = 0.0;
    double exact_distance = 0.0;
};

/// Stokes vector rescaled onto the unit ball if it lies outside.
BlochVector project_to_bloch_ball(const BlochVector &stokes);

/// Simulates horizontal, 45-degree and right-circular polarizers on two
/// qubit ensembles. Error(Domain) unless both states are qubits.
TomographyReport tomography_scenario(const DensityOperator &rho1,
                                     const DensityOperator &rho2,
                                     std::uint64_t n, RngSeed seed);

/// Least-squares slope of log(y) against log(x).
double log_log_slope(std::span<const double> x, std::span<const double> y);

} // namespace opdist
