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

#include "deltastab/collectiveops.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>
#include <unordered_map>

#include "deltastab/errors.hpp"

namespace deltastab {

namespace {

constexpr Amplitude kI{0.0, 1.0};

void check_labels(int n, std::span<const Label> qubits) {
    for (Label k : qubits) {
        if (k < 1 || k > n) {
            throw std::out_of_range("qubit label " + std::to_string(k) + " outside 1.." + std::to_string(n));
        }
    }
}

// Single-qubit Pauli action on |b>: sigma|b> = phase * |b xor flip>.
struct PauliAction {
    bool flip;
    Amplitude phase_if_zero;
    Amplitude phase_if_one;
};

PauliAction pauli(Axis axis) {
    switch (axis) {
        case Axis::X:
            return {true, 1.0, 1.0};
        case Axis::Y:
            return {true, kI, -kI};
        case Axis::Z:
            return {false, 1.0, -1.0};
    }
    throw std::logic_error("unknown axis");
}

}  // namespace

LocalAlgebraElement::LocalAlgebraElement(int n) : phase_(0.0), locals_(n) {
    if (n < 1) {
        throw std::invalid_argument("algebra element needs at least one qubit");
    }
}

LocalAlgebraElement::LocalAlgebraElement(double phase, std::vector<Su2Coords> locals)
    : phase_(phase), locals_(std::move(locals)) {
    if (locals_.empty()) {
        throw std::invalid_argument("algebra element needs at least one qubit");
    }
}

LocalAlgebraElement LocalAlgebraElement::from_coordinates(std::span<const double> coords) {
    if (coords.size() < 4 || (coords.size() - 1) % 3 != 0) {
        throw std::invalid_argument("coordinate vector must have length 1 + 3n with n >= 1");
    }
    std::vector<Su2Coords> locals((coords.size() - 1) / 3);
    for (std::size_t k = 0; k < locals.size(); ++k) {
        locals[k] = {coords[1 + 3 * k], coords[2 + 3 * k], coords[3 + 3 * k]};
    }
    return {coords[0], std::move(locals)};
}

LocalAlgebraElement LocalAlgebraElement::on_qubits(int n, std::span<const Label> qubits, Axis axis) {
    check_labels(n, qubits);
    LocalAlgebraElement e(n);
    for (Label k : qubits) {
        auto &c = e.locals_[k - 1];
        c = {};
        (axis == Axis::X ? c.x : axis == Axis::Y ? c.y : c.z) = 1.0;
    }
    return e;
}

LocalAlgebraElement LocalAlgebraElement::diagonal(int n, Axis axis) {
    std::vector<Label> all(n);
    for (int k = 0; k < n; ++k) all[k] = k + 1;
    return on_qubits(n, all, axis);
}

std::vector<double> LocalAlgebraElement::coordinates() const {
    std::vector<double> out;
    out.reserve(1 + 3 * locals_.size());
    out.push_back(phase_);
    for (const auto &c : locals_) {
        out.insert(out.end(), {c.x, c.y, c.z});
    }
    return out;
}

int alpha(const MultiIndex &ix, std::span<const Label> qubits) {
    check_labels(ix.length(), qubits);
    int value = 0;
    for (Label k : qubits) {
        value += ix.bit(k) == 0 ? 1 : -1;
    }
    return value;
}

StateVector apply_diagonal_generator(const StateVector &s, std::span<const Label> qubits) {
    const int n = s.num_qubits();
    check_labels(n, qubits);
    StateVector::AmplitudeMap out;
    for (const auto &[key, amp] : s.amplitudes()) {
        int a = alpha(MultiIndex(n, key), qubits);
        if (a != 0) {
            out.emplace(key, kI * static_cast<double>(a) * amp);
        }
    }
    return StateVector(n, std::move(out));
}

StateVector apply_element(const LocalAlgebraElement &e, const StateVector &s) {
    const int n = s.num_qubits();
    if (e.num_qubits() != n) {
        throw std::invalid_argument("algebra element acts on " + std::to_string(e.num_qubits()) +
                                    " qubits, state has " + std::to_string(n));
    }
    StateVector::AmplitudeMap out;
    for (const auto &[key, amp] : s.amplitudes()) {
        if (e.phase() != 0.0) {
            out[key] += kI * e.phase() * amp;
        }
        for (Label k = 1; k <= n; ++k) {
            const auto &c = e.locals()[k - 1];
            const std::uint64_t mask = qubit_mask(n, k);
            const bool one = (key & mask) != 0;
            // i(x sigma_x + y sigma_y + z sigma_z)|b>: diagonal part from z,
            // off-diagonal part from x and y.
            if (c.z != 0.0) {
                out[key] += kI * c.z * (one ? -1.0 : 1.0) * amp;
            }
            if (c.x != 0.0 || c.y != 0.0) {
                const Amplitude off = kI * (c.x + (one ? -kI : kI) * c.y);
                out[key ^ mask] += off * amp;
            }
        }
    }
    return StateVector(n, std::move(out));
}

StateVector apply_collective(const StateVector &s, Axis axis) {
    const int n = s.num_qubits();
    const PauliAction p = pauli(axis);
    StateVector::AmplitudeMap out;
    for (const auto &[key, amp] : s.amplitudes()) {
        for (Label k = 1; k <= n; ++k) {
            const std::uint64_t mask = qubit_mask(n, k);
            const Amplitude phase = (key & mask) ? p.phase_if_one : p.phase_if_zero;
            out[p.flip ? key ^ mask : key] += phase * amp;
        }
    }
    return StateVector(n, std::move(out));
}

StateVector j_squared_apply(const StateVector &s) {
    std::vector<WeightedState> terms;
    for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
        terms.emplace_back(1.0, apply_collective(apply_collective(s, axis), axis));
    }
    return linear_combination(terms, 0.0);
}

std::vector<double> j_squared_singular_values(int n, int cap) {
    if (n < 1) {
        throw std::invalid_argument("qubit count must be positive");
    }
    if (n > cap) {
        throw ResourceLimitError("J^2 kernel on " + std::to_string(n) + " qubits exceeds cap " + std::to_string(cap));
    }
    const std::uint64_t dim = std::uint64_t{1} << n;
    std::vector<std::vector<std::uint64_t>> sectors(n + 1);
    for (std::uint64_t key = 0; key < dim; ++key) {
        sectors[std::popcount(key)].push_back(key);
    }

    std::vector<double> values;
    values.reserve(dim);
    for (const auto &sector : sectors) {
        const auto size = static_cast<Eigen::Index>(sector.size());
        std::unordered_map<std::uint64_t, Eigen::Index> row_of;
        for (Eigen::Index r = 0; r < size; ++r) {
            row_of.emplace(sector[r], r);
        }
        Eigen::MatrixXd block = Eigen::MatrixXd::Zero(size, size);
        for (Eigen::Index col = 0; col < size; ++col) {
            auto image = j_squared_apply(StateVector::basis_state(MultiIndex(n, sector[col])));
            for (const auto &[key, amp] : image.amplitudes()) {
                auto it = row_of.find(key);
                if (it == row_of.end() || amp.imag() != 0.0) {
                    throw std::logic_error("J^2 left its weight sector or produced a complex entry");
                }
                block(it->second, col) = amp.real();
            }
        }
        Eigen::BDCSVD<Eigen::MatrixXd> svd(block);
        const auto &sv = svd.singularValues();
        values.insert(values.end(), sv.data(), sv.data() + sv.size());
    }
    std::sort(values.begin(), values.end(), std::greater<>());
    return values;
}

int v_delta_dimension(int n, double tol, int cap) {
    if (tol < 0.0) {
        throw std::invalid_argument("tolerance must be nonnegative");
    }
    const auto values = j_squared_singular_values(n, cap);
    const double threshold = tol * values.front();
    return static_cast<int>(std::count_if(values.begin(), values.end(), [&](double v) { return v < threshold; }));
}

}  // namespace deltastab
