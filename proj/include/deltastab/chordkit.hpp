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

// Pair partitions of {1,...,2m} drawn as chord diagrams, their minimal
// multi-indices, and the Dyck-word bijection for the non-crossing ones.
//
// Labels are 1-based throughout. Qubit 1 is the most significant bit of a
// multi-index.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace deltastab {

using Label = int;

/// Largest qubit count a MultiIndex can hold.
inline constexpr int kMaxQubits = 62;

inline constexpr int kDefaultNoncrossingCap = 8;
inline constexpr int kDefaultAllMatchingsCap = 6;

struct Chord {
    Label a;
    Label b;

    auto operator<=>(const Chord &) const = default;
};

/// True iff chords {a,b} and {c,d} intersect when the labels sit on a circle
/// in increasing order.
bool chords_cross(Chord x, Chord y) noexcept;

/// A perfect matching of {1,...,2m}. Stored canonically: each chord has
/// a < b and chords are sorted by a.
class PairPartition {
   public:
    /// Throws std::invalid_argument unless the chords cover {1,...,2m}
    /// exactly once.
    explicit PairPartition(std::vector<Chord> chords);
    PairPartition(std::initializer_list<Chord> chords) : PairPartition(std::vector<Chord>(chords)) {}

    int num_pairs() const noexcept { return static_cast<int>(chords_.size()); }
    int num_labels() const noexcept { return 2 * num_pairs(); }
    std::span<const Chord> chords() const noexcept { return chords_; }
    Label partner(Label k) const;

    auto operator<=>(const PairPartition &) const = default;

   private:
    std::vector<Chord> chords_;
};

/// A computational basis label on n qubits.
class MultiIndex {
   public:
    MultiIndex(int length, std::uint64_t value);

    /// Parses a string of '0'/'1'; throws std::invalid_argument otherwise.
    static MultiIndex from_string(std::string_view bits);

    int length() const noexcept { return length_; }
    std::uint64_t value() const noexcept { return value_; }

    /// Bit of qubit k (1-based).
    int bit(Label k) const;
    std::string to_string() const;

    // Ordering is by length first, then as an unsigned binary number.
    auto operator<=>(const MultiIndex &) const = default;

   private:
    int length_;
    std::uint64_t value_;
};

/// Bit mask selecting qubit k (1-based) in an n-qubit index.
constexpr std::uint64_t qubit_mask(int n, Label k) noexcept { return std::uint64_t{1} << (n - k); }

/// A permutation (k_1, ..., k_n) of the qubit labels.
class QubitOrdering {
   public:
    explicit QubitOrdering(std::vector<Label> order);
    static QubitOrdering identity(int n);

    int size() const noexcept { return static_cast<int>(order_.size()); }
    std::span<const Label> order() const noexcept { return order_; }
    /// 0-based position of label k within the ordering.
    int position(Label k) const;

   private:
    std::vector<Label> order_;
    std::vector<int> position_;
};

std::uint64_t catalan(int m);
std::uint64_t double_factorial_odd(int m);  // (2m-1)!!

bool is_noncrossing(const PairPartition &p) noexcept;

/// All non-crossing matchings of {1,...,2m}, ascending by minimal_index.
/// Throws ResourceLimitError when m > cap and std::invalid_argument when m < 1.
std::vector<PairPartition> enumerate_noncrossing(int m, int cap = kDefaultNoncrossingCap);

/// Every perfect matching of {1,...,2m}, crossing or not.
std::vector<PairPartition> enumerate_all(int m, int cap = kDefaultAllMatchingsCap);

/// The smallest multi-index in the support of the singlet product over p,
/// with "smallest" read along ordering o. The member of each chord that
/// comes first in o carries bit 0. The result is indexed by qubit label.
MultiIndex minimal_index(const PairPartition &p);
MultiIndex minimal_index(const PairPartition &p, const QubitOrdering &o);

/// Bits of ix listed in the order o, i.e. i_{k_1} i_{k_2} ... i_{k_n}.
MultiIndex read_in_order(const MultiIndex &ix, const QubitOrdering &o);

bool is_dyck_word(const MultiIndex &ix) noexcept;

/// Inverse of minimal_index on non-crossing matchings: every 1 closes the
/// most recent open 0. Throws NotDyckWord.
PairPartition dyck_to_partition(const MultiIndex &ix);

/// Connected components of the graph on {1,...,num_labels} whose edges are
/// all chords of all diagrams. Components are sorted, as is each member list.
std::vector<std::vector<Label>> chord_union_components(std::span<const PairPartition> diagrams,
                                                       int num_labels);

/// Connectivity of the chord-union graph. Empty input is disconnected.
bool chord_union_connected(std::span<const PairPartition> diagrams);

/// Parses whitespace-separated "a-b" tokens. Throws ParseError.
PairPartition parse_diagram(std::string_view text);
std::string format_diagram(const PairPartition &p);

}  // namespace deltastab
