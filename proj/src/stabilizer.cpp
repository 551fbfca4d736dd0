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

#include "deltastab/stabilizer.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "deltastab/errors.hpp"

namespace deltastab {

StabilizerReport stabilizer_algebra(const StateVector &s, double tol, int cap) {
    if (s.is_zero()) {
        throw std::invalid_argument("stabilizer of the zero vector is the whole group");
    }
    const int n = s.num_qubits();
    if (n > cap) {
        throw ResourceLimitError("stabilizer on " + std::to_string(n) + " qubits exceeds cap " + std::to_string(cap));
    }
    const int num_coords = 1 + 3 * n;

    std::vector<StateVector> images;
    images.reserve(num_coords);
    std::unordered_map<std::uint64_t, Eigen::Index> row_of;
    std::vector<double> unit(num_coords, 0.0);
    for (int j = 0; j < num_coords; ++j) {
        unit[j] = 1.0;
        images.push_back(apply_element(LocalAlgebraElement::from_coordinates(unit), s));
        unit[j] = 0.0;
        for (const auto &[key, amp] : images.back().amplitudes()) {
            row_of.try_emplace(key, static_cast<Eigen::Index>(row_of.size()));
        }
    }

    // Real and imaginary parts of each image amplitude are separate rows.
    Eigen::MatrixXd action = Eigen::MatrixXd::Zero(2 * static_cast<Eigen::Index>(row_of.size()), num_coords);
    for (int j = 0; j < num_coords; ++j) {
        for (const auto &[key, amp] : images[j].amplitudes()) {
            const Eigen::Index r = row_of.at(key);
            action(2 * r, j) = amp.real();
            action(2 * r + 1, j) = amp.imag();
        }
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(action, Eigen::ComputeFullV);
    const auto &sv = svd.singularValues();
    const double threshold = sv.size() > 0 ? tol * sv(0) : 0.0;
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) >= threshold && sv(i) > 0.0) ++rank;
    }

    StabilizerReport report;
    report.singular_values.assign(sv.data(), sv.data() + sv.size());
    report.dimension = num_coords - rank;
    const Eigen::MatrixXd &v = svd.matrixV();
    for (int col = rank; col < num_coords; ++col) {
        Eigen::VectorXd e = v.col(col);
        Eigen::Index lead = 0;
        e.cwiseAbs().maxCoeff(&lead);
        if (e(lead) < 0.0) e = -e;
        report.basis.push_back(LocalAlgebraElement::from_coordinates(std::span<const double>(e.data(), e.size())));
    }
    return report;
}

bool satisfies_star(const CoefficientMap &c) {
    const auto support = c.support(kDefaultZeroTol);
    if (support.empty()) {
        throw std::invalid_argument("condition (*) needs at least one nonzero coefficient");
    }
    return chord_union_connected(support);
}

StabilizerReport analyze_expansion(const CoefficientMap &c, double tol, int cap) {
    const auto support = c.support(kDefaultZeroTol);
    if (support.empty()) {
        throw std::invalid_argument("cannot analyze an all-zero expansion");
    }
    StabilizerReport report = stabilizer_algebra(reconstruct(c), tol, cap);
    report.blocks = chord_union_components(support, c.num_qubits());
    report.exactly_delta = report.blocks->size() == 1;
    return report;
}

void check_consistency(const StabilizerReport &report) {
    if (!report.exactly_delta.has_value()) {
        return;
    }
    if (*report.exactly_delta != (report.dimension == 3)) {
        std::ostringstream msg;
        msg << "chord-union graph is " << (*report.exactly_delta ? "connected" : "disconnected")
            << " but the stabilizer subalgebra has dimension " << report.dimension;
        throw ConsistencyViolation(msg.str());
    }
}

StabilizerReport classify(const CoefficientMap &c, double tol, int cap) {
    StabilizerReport report = analyze_expansion(c, tol, cap);
    check_consistency(report);
    return report;
}

Su2Matrix random_su2(std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss;
    double q[4];
    double norm = 0.0;
    do {
        norm = 0.0;
        for (double &x : q) {
            x = gauss(rng);
            norm += x * x;
        }
    } while (norm < 1e-24);
    norm = std::sqrt(norm);
    for (double &x : q) x /= norm;
    const std::complex<double> alpha{q[0], q[1]};
    const std::complex<double> beta{q[2], q[3]};
    return {{{alpha, -std::conj(beta)}, {beta, std::conj(alpha)}}};
}

StateVector apply_diagonal_rotation(const Su2Matrix &g, const StateVector &s) {
    const int n = s.num_qubits();
    StateVector::AmplitudeMap current = s.amplitudes();
    for (Label k = 1; k <= n; ++k) {
        const std::uint64_t mask = qubit_mask(n, k);
        StateVector::AmplitudeMap next;
        for (const auto &[key, amp] : current) {
            const int b = (key & mask) ? 1 : 0;
            next[key & ~mask] += g[0][b] * amp;
            next[key | mask] += g[1][b] * amp;
        }
        current = std::move(next);
    }
    return StateVector(n, std::move(current));
}

bool check_delta_invariance(const StateVector &s, int trials, double tol, std::uint64_t seed) {
    if (trials < 1) {
        throw std::invalid_argument("need at least one trial");
    }
    try {
        decompose(s);
    } catch (const NotInVDelta &e) {
        throw PreconditionViolation(std::string("state is not in the invariant subspace: ") + e.what());
    }
    const double bound = tol * s.norm();
    for (int trial = 0; trial < trials; ++trial) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(trial)};
        std::mt19937_64 rng(seq);
        if (distance(apply_diagonal_rotation(random_su2(rng), s), s) > bound) {
            return false;
        }
    }
    return true;
}

}  // namespace deltastab
