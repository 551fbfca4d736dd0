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

// Infinitesimal local unitary action: elements of u(1) + su(2)^n acting on
// sparse states, the collective spin operators, and the kernel of J^2.

#include <span>
#include <vector>

#include "deltastab/chordkit.hpp"
#include "deltastab/statevec.hpp"

namespace deltastab {

inline constexpr int kDefaultVDeltaCap = 12;
inline constexpr double kDefaultKernelTol = 1e-9;

enum class Axis { X, Y, Z };

/// Coordinates of an su(2) element in the basis {i sigma_x, i sigma_y, i sigma_z}.
struct Su2Coords {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend bool operator==(const Su2Coords &, const Su2Coords &) = default;
};

/// An element (i t, A_1, ..., A_n) of u(1) + su(2)^n. As a real vector it
/// has 1 + 3n coordinates laid out (t, x_1, y_1, z_1, x_2, ...).
class LocalAlgebraElement {
   public:
    /// The zero element on n qubits.
    explicit LocalAlgebraElement(int n);
    LocalAlgebraElement(double phase, std::vector<Su2Coords> locals);

    static LocalAlgebraElement from_coordinates(std::span<const double> coords);

    /// i sigma_axis on every qubit in `qubits`, zero elsewhere, no phase.
    static LocalAlgebraElement on_qubits(int n, std::span<const Label> qubits, Axis axis);
    /// i sigma_axis on every qubit: a generator of the diagonal subgroup.
    static LocalAlgebraElement diagonal(int n, Axis axis);

    int num_qubits() const noexcept { return static_cast<int>(locals_.size()); }
    double phase() const noexcept { return phase_; }
    std::span<const Su2Coords> locals() const noexcept { return locals_; }
    std::vector<double> coordinates() const;

    friend bool operator==(const LocalAlgebraElement &, const LocalAlgebraElement &) = default;

   private:
    double phase_;
    std::vector<Su2Coords> locals_;
};

/// (#0 bits of ix on K) - (#1 bits of ix on K).
int alpha(const MultiIndex &ix, std::span<const Label> qubits);

/// i sigma_z on every qubit of K: each amplitude a_I becomes i alpha_I a_I.
StateVector apply_diagonal_generator(const StateVector &s, std::span<const Label> qubits);

/// (i t Id + sum_k A_k^{(k)}) |s>.
StateVector apply_element(const LocalAlgebraElement &e, const StateVector &s);

/// sum_k sigma_axis^{(k)} |s>.
StateVector apply_collective(const StateVector &s, Axis axis);

/// (sum sigma_x)^2 + (sum sigma_y)^2 + (sum sigma_z)^2 applied to s, with
/// hbar/2 set to 1. Eigenvalue 4 j (j + 1) on total spin j; the largest is
/// n (n + 2).
StateVector j_squared_apply(const StateVector &s);

/// Largest eigenvalue of J^2 on n qubits in the units above.
constexpr double j_squared_spectral_radius(int n) noexcept { return static_cast<double>(n) * (n + 2); }

/// Singular values of the 2^n x 2^n J^2 matrix, descending. The matrix is
/// assembled and decomposed one Hamming-weight sector at a time, since J^2
/// commutes with the collective z operator. Throws ResourceLimitError for
/// n > cap.
std::vector<double> j_squared_singular_values(int n, int cap = kDefaultVDeltaCap);

/// Number of singular values of J^2 below tol * (largest singular value).
int v_delta_dimension(int n, double tol = kDefaultKernelTol, int cap = kDefaultVDeltaCap);

}  // namespace deltastab
