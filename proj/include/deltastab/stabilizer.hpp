// Copyright 2026 The deltastab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Stabilizer subalgebras of states inside u(1) + su(2)^n, computed as the
// nullspace of the linear map e -> e|psi>, and the chord-connectivity
// criterion that predicts when only the diagonal su(2) survives.

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "deltastab/chordkit.hpp"
#include "deltastab/collectiveops.hpp"
#include "deltastab/deltaspace.hpp"
#include "deltastab/statevec.hpp"

namespace deltastab {

inline constexpr int kDefaultStabilizerCap = 10;
inline constexpr double kDefaultNullspaceTol = 1e-9;
inline constexpr double kDefaultInvarianceTol = 1e-10;

struct StabilizerReport {
    /// Real dimension of the stabilizer subalgebra.
    int dimension = 0;
    /// Orthonormal basis of the subalgebra in (t, x_1, y_1, z_1, ...) coordinates.
    std::vector<LocalAlgebraElement> basis;
    /// Singular values of the action map, descending.
    std::vector<double> singular_values;
    /// Components of the chord-union graph; set only for chord-basis input.
    std::optional<std::vector<std::vector<Label>>> blocks;
    /// Connectivity verdict; set only for chord-basis input.
    std::optional<bool> exactly_delta;
};

/// Nullspace of e -> apply_element(e, s) over the 1 + 3n real coordinates,
/// thresholded at tol * (largest singular value). Throws std::invalid_argument
/// for the zero state and ResourceLimitError for n > cap.
StabilizerReport stabilizer_algebra(const StateVector &s, double tol = kDefaultNullspaceTol,
                                    int cap = kDefaultStabilizerCap);

/// Every proper nonempty subset of labels is split by some chord of some
/// diagram with nonzero coefficient, i.e. the chord-union graph of the
/// support is connected. Coefficients of modulus <= 1e-12 count as absent.
/// Throws std::invalid_argument for an all-zero map.
bool satisfies_star(const CoefficientMap &c);

/// Stabilizer of reconstruct(c) with blocks and exactly_delta filled in.
/// Does not compare the two verdicts.
StabilizerReport analyze_expansion(const CoefficientMap &c, double tol = kDefaultNullspaceTol,
                                   int cap = kDefaultStabilizerCap);

/// Throws ConsistencyViolation unless exactly_delta == (dimension == 3).
/// Reports without an exactly_delta verdict pass unchanged.
void check_consistency(const StabilizerReport &report);

/// analyze_expansion followed by check_consistency.
StabilizerReport classify(const CoefficientMap &c, double tol = kDefaultNullspaceTol,
                          int cap = kDefaultStabilizerCap);

using Su2Matrix = std::array<std::array<std::complex<double>, 2>, 2>;

/// Haar-random SU(2) element from a normalized Gaussian quaternion.
Su2Matrix random_su2(std::mt19937_64 &rng);

/// (g, g, ..., g) applied to every qubit of s.
StateVector apply_diagonal_rotation(const Su2Matrix &g, const StateVector &s);

/// Runs `trials` Haar-random diagonal rotations and checks
/// ||g psi - psi|| <= tol ||psi|| for each. Trial k draws from its own
/// generator seeded by (seed, k). Throws PreconditionViolation unless s
/// decomposes in the chord basis.
bool check_delta_invariance(const StateVector &s, int trials, double tol = kDefaultInvarianceTol,
                            std::uint64_t seed = 0);

}  // namespace deltastab
