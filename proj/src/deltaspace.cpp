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

#include "deltastab/deltaspace.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "deltastab/collectiveops.hpp"
#include "deltastab/errors.hpp"
#include "json.hpp"

namespace deltastab {

CoefficientMap::CoefficientMap(int m) : m_(m) {
    if (m < 1) {
        throw std::invalid_argument("coefficient map needs m >= 1");
    }
}

CoefficientMap::CoefficientMap(int m, Entries entries) : CoefficientMap(m) {
    for (auto &[p, c] : entries) {
        if (p.num_pairs() != m) {
            throw std::invalid_argument("diagram " + format_diagram(p) + " does not have " + std::to_string(m) +
                                        " chords");
        }
        if (!is_noncrossing(p)) {
            throw std::invalid_argument("diagram " + format_diagram(p) + " has crossing chords");
        }
        if (c != Amplitude{}) {
            entries_.emplace(p, c);
        }
    }
}

Amplitude CoefficientMap::at(const PairPartition &p) const {
    auto it = entries_.find(p);
    return it == entries_.end() ? Amplitude{} : it->second;
}

std::vector<PairPartition> CoefficientMap::support(double zero_tol) const {
    std::vector<PairPartition> out;
    for (const auto &[p, c] : entries_) {
        if (std::abs(c) > zero_tol) {
            out.push_back(p);
        }
    }
    return out;
}

bool is_in_v_delta(const StateVector &s, double tol) {
    if (s.is_zero()) {
        throw std::invalid_argument("membership is undefined for the zero vector");
    }
    const int n = s.num_qubits();
    return j_squared_apply(s).norm() <= tol * s.norm() * j_squared_spectral_radius(n);
}

CoefficientMap decompose(const StateVector &s, double tol) {
    if (s.is_zero()) {
        throw std::invalid_argument("cannot decompose the zero vector");
    }
    const int n = s.num_qubits();
    if (n % 2 != 0) {
        throw NotInVDelta("odd qubit count " + std::to_string(n) + ": the invariant subspace is zero");
    }
    const double target = tol * s.norm();
    auto residual = s.amplitudes();
    CoefficientMap::Entries found;

    auto residual_norm = [&residual] {
        double total = 0.0;
        for (const auto &[key, amp] : residual) total += std::norm(amp);
        return std::sqrt(total);
    };

    double remaining = residual_norm();
    while (remaining > target) {
        // Some entry must exceed this once the residual norm is above target.
        const double significant = target / std::sqrt(static_cast<double>(residual.size()));
        auto pivot = residual.begin();
        while (pivot != residual.end() && std::abs(pivot->second) <= significant) {
            ++pivot;
        }
        if (pivot == residual.end()) {
            break;
        }
        const MultiIndex ix(n, pivot->first);
        if (!is_dyck_word(ix)) {
            throw NotInVDelta("smallest residual index " + ix.to_string() + " is not a Dyck word", ix.to_string());
        }
        PairPartition p = dyck_to_partition(ix);
        const Amplitude coeff = pivot->second;
        if (!found.emplace(p, coeff).second) {
            throw std::logic_error("triangular elimination revisited diagram " + format_diagram(p));
        }
        const StateVector sp = singlet_product(p);
        for (const auto &[key, amp] : sp.amplitudes()) {
            auto [it, inserted] = residual.try_emplace(key, Amplitude{});
            it->second -= coeff * amp;
            if (it->second == Amplitude{}) {
                residual.erase(it);
            }
        }
        residual.erase(ix.value());
        if (residual.empty()) {
            break;
        }
        remaining = residual_norm();
    }
    return CoefficientMap(n / 2, std::move(found));
}

StateVector reconstruct(const CoefficientMap &c) {
    std::vector<WeightedState> terms;
    terms.reserve(c.entries().size());
    for (const auto &[p, coeff] : c.entries()) {
        terms.emplace_back(coeff, singlet_product(p));
    }
    if (terms.empty()) {
        return StateVector(c.num_qubits());
    }
    return linear_combination(terms, 0.0);
}

BasisCheck verify_basis(int m, double tol, int cap) {
    if (m > cap) {
        throw ResourceLimitError("basis check for m = " + std::to_string(m) + " exceeds cap " + std::to_string(cap));
    }
    const auto diagrams = enumerate_noncrossing(m, cap);
    std::unordered_map<std::uint64_t, Eigen::Index> row_of;
    std::vector<StateVector> columns;
    columns.reserve(diagrams.size());
    for (const auto &p : diagrams) {
        columns.push_back(singlet_product(p));
        for (const auto &[key, amp] : columns.back().amplitudes()) {
            row_of.try_emplace(key, static_cast<Eigen::Index>(row_of.size()));
        }
    }
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(row_of.size()),
                                              static_cast<Eigen::Index>(columns.size()));
    for (Eigen::Index col = 0; col < a.cols(); ++col) {
        for (const auto &[key, amp] : columns[col].amplitudes()) {
            a(row_of.at(key), col) = amp.real();
        }
    }
    Eigen::BDCSVD<Eigen::MatrixXd> svd(a);
    const auto &sv = svd.singularValues();
    const double threshold = tol * sv.maxCoeff();
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > threshold) ++rank;
    }
    return {rank, rank == static_cast<int>(catalan(m))};
}

std::string serialize_coefficients(const CoefficientMap &c) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto &[p, coeff] : c.entries()) {
        terms.push_back({{"pairs", format_diagram(p)}, {"coeff", {coeff.real(), coeff.imag()}}});
    }
    nlohmann::json doc = {{"m", c.num_pairs()}, {"terms", std::move(terms)}};
    return doc.dump(2);
}

CoefficientMap deserialize_coefficients(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(std::string("coefficient document is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("m") || !doc["m"].is_number_integer() || !doc.contains("terms") ||
        !doc["terms"].is_array()) {
        throw ParseError("coefficient document needs integer \"m\" and array \"terms\"");
    }
    const int m = doc["m"].get<int>();
    if (m < 1 || 2 * m > kMaxQubits) {
        throw ParseError("coefficient document has unsupported m = " + std::to_string(m));
    }
    CoefficientMap::Entries entries;
    for (const auto &term : doc["terms"]) {
        if (!term.is_object() || !term.contains("pairs") || !term["pairs"].is_string() || !term.contains("coeff")) {
            throw ParseError("each term needs string \"pairs\" and \"coeff\"");
        }
        const auto &coeff = term["coeff"];
        if (!coeff.is_array() || coeff.size() != 2 || !coeff[0].is_number() || !coeff[1].is_number()) {
            throw ParseError("coeff must be [re, im]");
        }
        PairPartition p = parse_diagram(term["pairs"].get<std::string>());
        if (p.num_pairs() != m) {
            throw ParseError("diagram \"" + format_diagram(p) + "\" does not have m = " + std::to_string(m) + " chords");
        }
        if (!is_noncrossing(p)) {
            throw ParseError("diagram \"" + format_diagram(p) + "\" has crossing chords");
        }
        if (!entries.emplace(p, Amplitude{coeff[0].get<double>(), coeff[1].get<double>()}).second) {
            throw ParseError("diagram \"" + format_diagram(p) + "\" listed twice");
        }
    }
    return CoefficientMap(m, std::move(entries));
}

}  // namespace deltastab
