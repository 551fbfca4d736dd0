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

// Sparse n-qubit state vectors keyed by multi-index, with the singlet
// product construction used as the chord basis.

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "deltastab/chordkit.hpp"

namespace deltastab {

using Amplitude = std::complex<double>;

/// Absolute threshold under which amplitudes produced by inexact arithmetic
/// are dropped.
inline constexpr double kDefaultZeroTol = 1e-12;

/// Immutable sparse state. Keys are multi-index values (qubit 1 is the most
/// significant bit); zero amplitudes are never stored. Not normalized
/// unless explicitly passed through normalized().
class StateVector {
   public:
    using AmplitudeMap = std::map<std::uint64_t, Amplitude>;

    /// The zero vector on n qubits.
    explicit StateVector(int n);
    StateVector(int n, AmplitudeMap amplitudes);

    static StateVector basis_state(const MultiIndex &ix);

    /// Convenience constructor from bitstring keys, e.g. {{"01", 1}, {"10", -1}}.
    static StateVector from_bitstrings(std::span<const std::pair<std::string, Amplitude>> terms);

    int num_qubits() const noexcept { return n_; }
    const AmplitudeMap &amplitudes() const noexcept { return amplitudes_; }
    std::size_t support_size() const noexcept { return amplitudes_.size(); }
    bool is_zero() const noexcept { return amplitudes_.empty(); }

    /// Stored amplitude or exact zero. Throws std::invalid_argument on a
    /// length mismatch.
    Amplitude coefficient(const MultiIndex &ix) const;

    double squared_norm() const noexcept;
    double norm() const noexcept;

    friend bool operator==(const StateVector &, const StateVector &) = default;

   private:
    int n_;
    AmplitudeMap amplitudes_;
};

/// Tensor product over chords {a<b} of (|0>_a|1>_b - |1>_a|0>_b). The
/// amplitude of I is (-1)^(number of chords whose smaller label has bit 1).
StateVector singlet_product(const PairPartition &p);

using WeightedState = std::pair<Amplitude, StateVector>;

/// Sum of weight * state; all states must share n. Entries with modulus
/// at or below zero_tol are dropped.
StateVector linear_combination(std::span<const WeightedState> terms, double zero_tol = kDefaultZeroTol);

StateVector scaled(const StateVector &s, Amplitude factor);
StateVector normalized(const StateVector &s);

/// sum conj(a_I) b_I.
Amplitude inner_product(const StateVector &a, const StateVector &b);

/// Euclidean distance ||a - b||.
double distance(const StateVector &a, const StateVector &b);

/// |<a|b>| >= (1 - tol) ||a|| ||b||. Throws std::invalid_argument on a zero
/// vector or size mismatch.
bool equal_up_to_phase(const StateVector &a, const StateVector &b, double tol);

/// The normalized 4-qubit state
/// (|0011> + |1100> + w(|1010> + |0101>) + w^2(|1001> + |0110>)) / sqrt(6),
/// w = exp(2 pi i / 3).
StateVector m4_state();

/// JSON document {"n": N, "amplitudes": {"<bits>": [re, im], ...}}.
std::string serialize_state(const StateVector &s);
/// Throws ParseError on malformed input.
StateVector deserialize_state(std::string_view text);

}  // namespace deltastab
