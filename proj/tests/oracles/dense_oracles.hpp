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

// Brute-force reference computations for tests. Everything here works on
// dense 2^n vectors and matrices built from Kronecker products, or on
// literal enumeration of subsets, and shares no code path with the sparse
// library routines it checks.

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "deltastab/chordkit.hpp"
#include "deltastab/statevec.hpp"

namespace deltastab::oracle {

using cd = std::complex<double>;

/// Amplitudes read straight off the definition: product over chords {a<b}
/// of [i_a != i_b] * (i_a == 0 ? +1 : -1).
Eigen::VectorXcd dense_singlet(const PairPartition &p);

Eigen::VectorXcd to_dense(const StateVector &s);

/// Pauli matrix (0 = x, 1 = y, 2 = z) on qubit k (1-based, qubit 1 most
/// significant) of n, as an explicit Kronecker product.
Eigen::MatrixXcd pauli_on(int n, int k, int axis);

/// (sum sigma_x)^2 + (sum sigma_y)^2 + (sum sigma_z)^2 as a dense matrix.
Eigen::MatrixXcd dense_j_squared(int n);

/// Eigenvalues of dense_j_squared(n), ascending.
Eigen::VectorXd j_squared_eigenvalues(int n);

/// Stabilizer subalgebra dimension of psi: rank deficiency of the real
/// (2 * 2^n) x (1 + 3n) matrix whose columns are i psi and i sigma_a^{(k)} psi,
/// from a column-pivoted QR with the given relative threshold.
int dense_stabilizer_dimension(const Eigen::VectorXcd &psi, double threshold = 1e-9);

/// g^{(x) n} as a dense matrix.
Eigen::MatrixXcd dense_diagonal_rotation(const Eigen::Matrix2cd &g, int n);

/// Literal condition (*): every proper nonempty subset S of {1..2m} is
/// split by a chord of some diagram.
bool brute_force_star(const std::vector<PairPartition> &diagrams);

/// Smallest index, read along the ordering, among nonzero entries of the
/// dense singlet product. Returned indexed by qubit label.
MultiIndex brute_force_minimal_index(const PairPartition &p, const QubitOrdering &o);

/// Segment intersection of chord endpoints placed on the unit circle.
bool geometric_cross(Chord x, Chord y, int num_labels);

}  // namespace deltastab::oracle
