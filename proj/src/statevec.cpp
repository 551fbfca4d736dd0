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

#include "deltastab/statevec.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "deltastab/errors.hpp"
#include "json.hpp"

namespace deltastab {

namespace {

void check_qubit_count(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("qubit count must be in 1.." + std::to_string(kMaxQubits) + ", got " +
                                    std::to_string(n));
    }
}

void check_same_size(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("state vectors have different qubit counts (" +
                                    std::to_string(a.num_qubits()) + " vs " + std::to_string(b.num_qubits()) + ")");
    }
}

}  // namespace

StateVector::StateVector(int n) : n_(n) { check_qubit_count(n); }

StateVector::StateVector(int n, AmplitudeMap amplitudes) : n_(n), amplitudes_(std::move(amplitudes)) {
    check_qubit_count(n);
    std::erase_if(amplitudes_, [](const auto &kv) { return kv.second == Amplitude{}; });
    if (!amplitudes_.empty() && (amplitudes_.rbegin()->first >> n) != 0) {
        throw std::invalid_argument("amplitude key exceeds " + std::to_string(n) + " qubits");
    }
}

StateVector StateVector::basis_state(const MultiIndex &ix) {
    return StateVector(ix.length(), {{ix.value(), Amplitude{1.0}}});
}

StateVector StateVector::from_bitstrings(std::span<const std::pair<std::string, Amplitude>> terms) {
    if (terms.empty()) {
        throw std::invalid_argument("from_bitstrings needs at least one term to fix n");
    }
    const int n = static_cast<int>(terms.front().first.size());
    AmplitudeMap amps;
    for (const auto &[bits, amp] : terms) {
        auto ix = MultiIndex::from_string(bits);
        if (ix.length() != n) {
            throw std::invalid_argument("bitstring '" + bits + "' has the wrong length");
        }
        amps[ix.value()] += amp;
    }
    return StateVector(n, std::move(amps));
}

Amplitude StateVector::coefficient(const MultiIndex &ix) const {
    if (ix.length() != n_) {
        throw std::invalid_argument("multi-index length " + std::to_string(ix.length()) +
                                    " does not match state on " + std::to_string(n_) + " qubits");
    }
    auto it = amplitudes_.find(ix.value());
    return it == amplitudes_.end() ? Amplitude{} : it->second;
}

double StateVector::squared_norm() const noexcept {
    double total = 0.0;
    for (const auto &[key, amp] : amplitudes_) {
        total += std::norm(amp);
    }
    return total;
}

double StateVector::norm() const noexcept { return std::sqrt(squared_norm()); }

StateVector singlet_product(const PairPartition &p) {
    const int n = p.num_labels();
    const int m = p.num_pairs();
    auto chords = p.chords();
    StateVector::AmplitudeMap amps;
    // Subset bit j set: chord j is in its |1>_a|0>_b branch and contributes -1.
    for (std::uint64_t branch = 0; branch < (std::uint64_t{1} << m); ++branch) {
        std::uint64_t key = 0;
        int flips = 0;
        for (int j = 0; j < m; ++j) {
            const auto &c = chords[j];
            if ((branch >> j) & 1U) {
                key |= qubit_mask(n, c.a);
                ++flips;
            } else {
                key |= qubit_mask(n, c.b);
            }
        }
        amps.emplace(key, (flips % 2 == 0) ? Amplitude{1.0} : Amplitude{-1.0});
    }
    return StateVector(n, std::move(amps));
}

StateVector linear_combination(std::span<const WeightedState> terms, double zero_tol) {
    if (terms.empty()) {
        throw std::invalid_argument("linear_combination needs at least one term");
    }
    const int n = terms.front().second.num_qubits();
    StateVector::AmplitudeMap amps;
    for (const auto &[weight, state] : terms) {
        if (state.num_qubits() != n) {
            throw std::invalid_argument("linear_combination terms have mixed qubit counts");
        }
        for (const auto &[key, amp] : state.amplitudes()) {
            amps[key] += weight * amp;
        }
    }
    std::erase_if(amps, [zero_tol](const auto &kv) { return std::abs(kv.second) <= zero_tol; });
    return StateVector(n, std::move(amps));
}

StateVector scaled(const StateVector &s, Amplitude factor) {
    StateVector::AmplitudeMap amps;
    for (const auto &[key, amp] : s.amplitudes()) {
        amps.emplace(key, factor * amp);
    }
    return StateVector(s.num_qubits(), std::move(amps));
}

StateVector normalized(const StateVector &s) {
    const double nrm = s.norm();
    if (nrm == 0.0) {
        throw std::invalid_argument("cannot normalize the zero vector");
    }
    return scaled(s, Amplitude{1.0 / nrm});
}

Amplitude inner_product(const StateVector &a, const StateVector &b) {
    check_same_size(a, b);
    const auto &small = a.support_size() <= b.support_size() ? a.amplitudes() : b.amplitudes();
    const auto &large = a.support_size() <= b.support_size() ? b.amplitudes() : a.amplitudes();
    const bool a_is_small = &small == &a.amplitudes();
    Amplitude total{};
    for (const auto &[key, amp] : small) {
        auto it = large.find(key);
        if (it == large.end()) {
            continue;
        }
        total += a_is_small ? std::conj(amp) * it->second : std::conj(it->second) * amp;
    }
    return total;
}

double distance(const StateVector &a, const StateVector &b) {
    const WeightedState terms[] = {{Amplitude{1.0}, a}, {Amplitude{-1.0}, b}};
    return linear_combination(terms, 0.0).norm();
}

bool equal_up_to_phase(const StateVector &a, const StateVector &b, double tol) {
    check_same_size(a, b);
    if (a.is_zero() || b.is_zero()) {
        throw std::invalid_argument("equal_up_to_phase is undefined for the zero vector");
    }
    return std::abs(inner_product(a, b)) >= (1.0 - tol) * a.norm() * b.norm();
}

StateVector m4_state() {
    const Amplitude omega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    const Amplitude base{1.0 / std::sqrt(6.0)};
    const std::pair<std::string, Amplitude> terms[] = {
        {"0011", base},         {"1100", base},         {"1010", omega * base},
        {"0101", omega * base}, {"1001", omega * omega * base}, {"0110", omega * omega * base},
    };
    return StateVector::from_bitstrings(terms);
}

std::string serialize_state(const StateVector &s) {
    nlohmann::json amps = nlohmann::json::object();
    for (const auto &[key, amp] : s.amplitudes()) {
        amps[MultiIndex(s.num_qubits(), key).to_string()] = {amp.real(), amp.imag()};
    }
    nlohmann::json doc = {{"n", s.num_qubits()}, {"amplitudes", std::move(amps)}};
    return doc.dump(2);
}

StateVector deserialize_state(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(std::string("state document is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer() || !doc.contains("amplitudes") ||
        !doc["amplitudes"].is_object()) {
        throw ParseError("state document needs integer \"n\" and object \"amplitudes\"");
    }
    const int n = doc["n"].get<int>();
    if (n < 1 || n > kMaxQubits) {
        throw ParseError("state document has unsupported n = " + std::to_string(n));
    }
    StateVector::AmplitudeMap amps;
    for (const auto &[bits, value] : doc["amplitudes"].items()) {
        if (bits.size() != static_cast<std::size_t>(n)) {
            throw ParseError("bitstring \"" + bits + "\" does not have length n = " + std::to_string(n));
        }
        std::uint64_t key = 0;
        try {
            key = MultiIndex::from_string(bits).value();
        } catch (const std::invalid_argument &) {
            throw ParseError("bitstring \"" + bits + "\" is not a 0/1 string");
        }
        if (!value.is_array() || value.size() != 2 || !value[0].is_number() || !value[1].is_number()) {
            throw ParseError("amplitude for \"" + bits + "\" must be [re, im]");
        }
        amps[key] = Amplitude{value[0].get<double>(), value[1].get<double>()};
    }
    return StateVector(n, std::move(amps));
}

}  // namespace deltastab
