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

#include "deltastab/chordkit.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "deltastab/errors.hpp"

namespace deltastab {

namespace {

class UnionFind {
   public:
    explicit UnionFind(int size) : parent_(size), rank_(size, 0) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        int root = x;
        while (parent_[root] != root) {
            root = parent_[root];
        }
        while (parent_[x] != root) {
            int next = parent_[x];
            parent_[x] = root;
            x = next;
        }
        return root;
    }

    void unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y) {
            return;
        }
        if (rank_[x] < rank_[y]) {
            std::swap(x, y);
        }
        parent_[y] = x;
        if (rank_[x] == rank_[y]) {
            ++rank_[x];
        }
    }

   private:
    std::vector<int> parent_;
    std::vector<int> rank_;
};

void check_pair_count(int m, int cap) {
    if (m < 1) {
        throw std::invalid_argument("number of pairs must be at least 1, got " + std::to_string(m));
    }
    if (m > cap) {
        throw ResourceLimitError("number of pairs " + std::to_string(m) + " exceeds cap " +
                                 std::to_string(cap));
    }
}

// Non-crossing matchings of the consecutive labels [lo, hi]; hi - lo + 1 is even.
std::vector<std::vector<Chord>> noncrossing_on(Label lo, Label hi) {
    if (lo > hi) {
        return {{}};
    }
    std::vector<std::vector<Chord>> out;
    for (Label partner = lo + 1; partner <= hi; partner += 2) {
        auto inside = noncrossing_on(lo + 1, partner - 1);
        auto outside = noncrossing_on(partner + 1, hi);
        for (const auto &in : inside) {
            for (const auto &rest : outside) {
                std::vector<Chord> chords;
                chords.reserve(1 + in.size() + rest.size());
                chords.push_back({lo, partner});
                chords.insert(chords.end(), in.begin(), in.end());
                chords.insert(chords.end(), rest.begin(), rest.end());
                out.push_back(std::move(chords));
            }
        }
    }
    return out;
}

void all_matchings(std::vector<Label> &free, std::vector<Chord> &current,
                   std::vector<PairPartition> &out) {
    if (free.empty()) {
        out.emplace_back(current);
        return;
    }
    Label first = free.front();
    for (std::size_t j = 1; j < free.size(); ++j) {
        Label second = free[j];
        std::vector<Label> rest;
        rest.reserve(free.size() - 2);
        for (std::size_t k = 1; k < free.size(); ++k) {
            if (k != j) {
                rest.push_back(free[k]);
            }
        }
        current.push_back({first, second});
        all_matchings(rest, current, out);
        current.pop_back();
    }
}

}  // namespace

bool chords_cross(Chord x, Chord y) noexcept {
    if (x.a > x.b) std::swap(x.a, x.b);
    if (y.a > y.b) std::swap(y.a, y.b);
    return (x.a < y.a && y.a < x.b && x.b < y.b) || (y.a < x.a && x.a < y.b && y.b < x.b);
}

PairPartition::PairPartition(std::vector<Chord> chords) : chords_(std::move(chords)) {
    if (chords_.empty()) {
        throw std::invalid_argument("pair partition needs at least one chord");
    }
    const int n = 2 * static_cast<int>(chords_.size());
    std::vector<bool> seen(n + 1, false);
    for (auto &c : chords_) {
        if (c.a > c.b) {
            std::swap(c.a, c.b);
        }
        for (Label k : {c.a, c.b}) {
            if (k < 1 || k > n) {
                throw std::invalid_argument("label " + std::to_string(k) + " outside 1.." +
                                            std::to_string(n));
            }
            if (seen[k]) {
                throw std::invalid_argument("duplicate label " + std::to_string(k));
            }
            seen[k] = true;
        }
    }
    std::sort(chords_.begin(), chords_.end());
}

Label PairPartition::partner(Label k) const {
    for (const auto &c : chords_) {
        if (c.a == k) return c.b;
        if (c.b == k) return c.a;
    }
    throw std::out_of_range("label " + std::to_string(k) + " not in partition");
}

MultiIndex::MultiIndex(int length, std::uint64_t value) : length_(length), value_(value) {
    if (length < 1 || length > kMaxQubits) {
        throw std::invalid_argument("multi-index length must be in 1.." + std::to_string(kMaxQubits));
    }
    if ((value >> length) != 0) {
        throw std::invalid_argument("multi-index value has bits beyond its length");
    }
}

MultiIndex MultiIndex::from_string(std::string_view bits) {
    if (bits.empty() || bits.size() > static_cast<std::size_t>(kMaxQubits)) {
        throw std::invalid_argument("bitstring length out of range");
    }
    std::uint64_t value = 0;
    for (char ch : bits) {
        if (ch != '0' && ch != '1') {
            throw std::invalid_argument("bitstring contains '" + std::string(1, ch) + "'");
        }
        value = (value << 1) | static_cast<std::uint64_t>(ch - '0');
    }
    return {static_cast<int>(bits.size()), value};
}

int MultiIndex::bit(Label k) const {
    if (k < 1 || k > length_) {
        throw std::out_of_range("qubit label " + std::to_string(k) + " out of range");
    }
    return static_cast<int>((value_ >> (length_ - k)) & 1U);
}

std::string MultiIndex::to_string() const {
    std::string s(length_, '0');
    for (int k = 1; k <= length_; ++k) {
        if ((value_ >> (length_ - k)) & 1U) {
            s[k - 1] = '1';
        }
    }
    return s;
}

QubitOrdering::QubitOrdering(std::vector<Label> order) : order_(std::move(order)), position_(order_.size() + 1, -1) {
    const int n = static_cast<int>(order_.size());
    if (n < 1) {
        throw std::invalid_argument("ordering must be non-empty");
    }
    for (int i = 0; i < n; ++i) {
        Label k = order_[i];
        if (k < 1 || k > n || position_[k] != -1) {
            throw std::invalid_argument("ordering is not a permutation of 1.." + std::to_string(n));
        }
        position_[k] = i;
    }
}

QubitOrdering QubitOrdering::identity(int n) {
    std::vector<Label> order(n);
    std::iota(order.begin(), order.end(), 1);
    return QubitOrdering(std::move(order));
}

int QubitOrdering::position(Label k) const {
    if (k < 1 || k > size()) {
        throw std::out_of_range("label " + std::to_string(k) + " not in ordering");
    }
    return position_[k];
}

std::uint64_t catalan(int m) {
    // C(m+1) = C(m) * 2(2m+1) / (m+2); exact in 64 bits far past any cap here.
    std::uint64_t c = 1;
    for (int k = 0; k < m; ++k) {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    return c;
}

std::uint64_t double_factorial_odd(int m) {
    std::uint64_t r = 1;
    for (int k = 1; k < 2 * m; k += 2) {
        r *= static_cast<std::uint64_t>(k);
    }
    return r;
}

bool is_noncrossing(const PairPartition &p) noexcept {
    auto chords = p.chords();
    for (std::size_t i = 0; i < chords.size(); ++i) {
        for (std::size_t j = i + 1; j < chords.size(); ++j) {
            if (chords_cross(chords[i], chords[j])) {
                return false;
            }
        }
    }
    return true;
}

std::vector<PairPartition> enumerate_noncrossing(int m, int cap) {
    check_pair_count(m, cap);
    std::vector<PairPartition> out;
    for (auto &chords : noncrossing_on(1, 2 * m)) {
        out.emplace_back(std::move(chords));
    }
    std::sort(out.begin(), out.end(), [](const PairPartition &x, const PairPartition &y) {
        return minimal_index(x) < minimal_index(y);
    });
    return out;
}

std::vector<PairPartition> enumerate_all(int m, int cap) {
    check_pair_count(m, cap);
    std::vector<Label> free(2 * m);
    std::iota(free.begin(), free.end(), 1);
    std::vector<Chord> current;
    std::vector<PairPartition> out;
    out.reserve(double_factorial_odd(m));
    all_matchings(free, current, out);
    return out;
}

MultiIndex minimal_index(const PairPartition &p) {
    const int n = p.num_labels();
    std::uint64_t value = 0;
    for (const auto &c : p.chords()) {
        value |= qubit_mask(n, c.b);
    }
    return {n, value};
}

MultiIndex minimal_index(const PairPartition &p, const QubitOrdering &o) {
    const int n = p.num_labels();
    if (o.size() != n) {
        throw std::invalid_argument("ordering size does not match partition");
    }
    std::uint64_t value = 0;
    for (const auto &c : p.chords()) {
        Label later = o.position(c.a) < o.position(c.b) ? c.b : c.a;
        value |= qubit_mask(n, later);
    }
    return {n, value};
}

MultiIndex read_in_order(const MultiIndex &ix, const QubitOrdering &o) {
    const int n = ix.length();
    if (o.size() != n) {
        throw std::invalid_argument("ordering size does not match multi-index");
    }
    std::uint64_t value = 0;
    for (Label k : o.order()) {
        value = (value << 1) | static_cast<std::uint64_t>(ix.bit(k));
    }
    return {n, value};
}

bool is_dyck_word(const MultiIndex &ix) noexcept {
    int depth = 0;
    for (int k = 1; k <= ix.length(); ++k) {
        depth += ((ix.value() >> (ix.length() - k)) & 1U) ? -1 : 1;
        if (depth < 0) {
            return false;
        }
    }
    return depth == 0;
}

PairPartition dyck_to_partition(const MultiIndex &ix) {
    std::vector<Label> open;
    std::vector<Chord> chords;
    for (Label k = 1; k <= ix.length(); ++k) {
        if (ix.bit(k) == 0) {
            open.push_back(k);
            continue;
        }
        if (open.empty()) {
            throw NotDyckWord(ix.to_string() + ": prefix ending at " + std::to_string(k) +
                              " has more 1s than 0s");
        }
        chords.push_back({open.back(), k});
        open.pop_back();
    }
    if (!open.empty()) {
        throw NotDyckWord(ix.to_string() + ": unequal numbers of 0s and 1s");
    }
    return PairPartition(std::move(chords));
}

std::vector<std::vector<Label>> chord_union_components(std::span<const PairPartition> diagrams,
                                                       int num_labels) {
    UnionFind uf(num_labels + 1);
    for (const auto &p : diagrams) {
        if (p.num_labels() != num_labels) {
            throw std::invalid_argument("diagrams disagree on the number of labels");
        }
        for (const auto &c : p.chords()) {
            uf.unite(c.a, c.b);
        }
    }
    std::vector<std::vector<Label>> components;
    std::vector<int> slot(num_labels + 1, -1);
    for (Label k = 1; k <= num_labels; ++k) {
        int root = uf.find(k);
        if (slot[root] < 0) {
            slot[root] = static_cast<int>(components.size());
            components.emplace_back();
        }
        components[slot[root]].push_back(k);
    }
    return components;
}

bool chord_union_connected(std::span<const PairPartition> diagrams) {
    if (diagrams.empty()) {
        return false;
    }
    return chord_union_components(diagrams, diagrams.front().num_labels()).size() == 1;
}

PairPartition parse_diagram(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<Chord> chords;
    std::string token;
    while (in >> token) {
        auto dash = token.find('-');
        if (dash == std::string::npos || dash == 0 || dash + 1 == token.size()) {
            throw ParseError("malformed chord token '" + token + "'");
        }
        auto read_label = [&](std::string_view digits) {
            if (digits.empty() || digits.size() > 6 ||
                !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
                throw ParseError("malformed chord token '" + token + "'");
            }
            return std::stoi(std::string(digits));
        };
        std::string_view tv(token);
        chords.push_back({read_label(tv.substr(0, dash)), read_label(tv.substr(dash + 1))});
    }
    if (chords.empty()) {
        throw ParseError("empty diagram");
    }
    const int n = 2 * static_cast<int>(chords.size());
    std::vector<bool> seen(n + 1, false);
    for (const auto &c : chords) {
        for (Label k : {c.a, c.b}) {
            if (k >= 1 && k <= n && seen[k]) {
                throw ParseError("duplicate label " + std::to_string(k));
            }
            if (k >= 1 && k <= n) {
                seen[k] = true;
            }
        }
    }
    for (const auto &c : chords) {
        for (Label k : {c.a, c.b}) {
            if (k < 1 || k > n) {
                throw ParseError("incomplete cover: label " + std::to_string(k) + " outside 1.." +
                                 std::to_string(n));
            }
        }
    }
    return PairPartition(std::move(chords));
}

std::string format_diagram(const PairPartition &p) {
    std::string out;
    for (const auto &c : p.chords()) {
        if (!out.empty()) {
            out += ' ';
        }
        out += std::to_string(c.a) + '-' + std::to_string(c.b);
    }
    return out;
}

}  // namespace deltastab
