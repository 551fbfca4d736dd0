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

// Expansion of zero-angular-momentum states in the non-crossing singlet
// product basis.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "deltastab/chordkit.hpp"
#include "deltastab/statevec.hpp"

namespace deltastab {

inline constexpr double kDefaultMembershipTol = 1e-9;
inline constexpr double kDefaultResidualTol = 1e-10;
inline constexpr double kDefaultRankTol = 1e-9;
inline constexpr int kDefaultBasisCap = 7;

/// Coefficients c_P of an expansion sum_P c_P |s_P> over non-crossing P.
class CoefficientMap {
   public:
    using Entries = std::map<PairPartition, Amplitude>;

    explicit CoefficientMap(int m);
    /// Throws std::invalid_argument if a key has the wrong size or crosses.
    /// Exact zeros are dropped.
    CoefficientMap(int m, Entries entries);

    int num_pairs() const noexcept { return m_; }
    int num_qubits() const noexcept { return 2 * m_; }
    const Entries &entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }

    /// Amplitude for p, or zero.
    Amplitude at(const PairPartition &p) const;

    /// Keys whose coefficient modulus exceeds zero_tol.
    std::vector<PairPartition> support(double zero_tol = kDefaultZeroTol) const;

   private:
    int m_;
    Entries entries_;
};

/// ||J^2 s|| <= tol ||s|| n (n + 2). Throws std::invalid_argument on zero s.
bool is_in_v_delta(const StateVector &s, double tol = kDefaultMembershipTol);

/// Triangular elimination in the chord basis: the smallest significant
/// index of the residual must be the minimal index of exactly one
/// non-crossing diagram, whose coefficient it then is. Throws NotInVDelta
/// with the offending index as witness when that fails, or when a residual
/// above tol ||s|| survives.
CoefficientMap decompose(const StateVector &s, double tol = kDefaultResidualTol);

/// sum_P c_P singlet_product(P). The empty map gives the zero state.
StateVector reconstruct(const CoefficientMap &c);

struct BasisCheck {
    int rank;
    bool independent;
};

/// Numerical rank of the amplitude matrix whose columns are the
/// non-crossing singlet products on 2m qubits.
BasisCheck verify_basis(int m, double tol = kDefaultRankTol, int cap = kDefaultBasisCap);

/// JSON document {"m": M, "terms": [{"pairs": "a-b ...", "coeff": [re, im]}, ...]}.
std::string serialize_coefficients(const CoefficientMap &c);
/// Throws ParseError on malformed input or crossing keys.
CoefficientMap deserialize_coefficients(std::string_view text);

}  // namespace deltastab
