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

// Randomized invariants across modules. Generators are seeded so failures
// reproduce.

#include <gtest/gtest.h>

#include <random>

#include "deltastab/collectiveops.hpp"
#include "deltastab/deltaspace.hpp"
#include "deltastab/errors.hpp"
#include "deltastab/stabilizer.hpp"
#include "oracles/dense_oracles.hpp"
#include "oracles/generators.hpp"

namespace deltastab {
namespace {

using testing::random_coefficient_map;
using testing::random_disconnected_map;

TEST(Property, DecomposeInvertsReconstruct) {
    std::mt19937_64 rng(100);
    for (int m = 1; m <= 5; ++m) {
        for (int rep = 0; rep < 20; ++rep) {
            const CoefficientMap c = random_coefficient_map(m, rng);
            const CoefficientMap back = decompose(reconstruct(c));
            for (const auto &p : enumerate_noncrossing(m)) {
                EXPECT_LE(std::abs(back.at(p) - c.at(p)), 1e-10) << format_diagram(p);
            }
        }
    }
}

TEST(Property, DecomposeExactOnIntegerCoefficients) {
    std::mt19937_64 rng(101);
    for (int m = 2; m <= 4; ++m) {
        const auto diagrams = enumerate_noncrossing(m);
        for (int rep = 0; rep < 10; ++rep) {
            CoefficientMap::Entries entries;
            for (const auto &p : diagrams) {
                const int v = static_cast<int>(rng() % 7) - 3;
                if (v != 0) entries.emplace(p, Amplitude(v));
            }
            if (entries.empty()) continue;
            const CoefficientMap c(m, entries);
            const CoefficientMap back = decompose(reconstruct(c));
            EXPECT_EQ(back.entries(), c.entries());
        }
    }
}

TEST(Property, KernelOfJSquaredLiesInChordSpan) {
    // Random vectors drawn from the dense J^2 kernel must decompose.
    std::mt19937_64 rng(102);
    std::normal_distribution<double> g;
    for (int n : {2, 4, 6}) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(oracle::dense_j_squared(n));
        const int kernel = static_cast<int>(catalan(n / 2));
        for (int rep = 0; rep < 5; ++rep) {
            Eigen::VectorXcd v = Eigen::VectorXcd::Zero(solver.eigenvectors().rows());
            for (int j = 0; j < kernel; ++j) v += Amplitude(g(rng), g(rng)) * solver.eigenvectors().col(j);
            StateVector::AmplitudeMap amps;
            for (Eigen::Index i = 0; i < v.size(); ++i) {
                if (std::abs(v(i)) > 1e-13) amps[static_cast<std::uint64_t>(i)] = v(i);
            }
            const StateVector s(n, amps);
            ASSERT_TRUE(is_in_v_delta(s));
            const CoefficientMap c = decompose(s, 1e-9);
            EXPECT_LT(distance(reconstruct(c), s), 1e-9 * s.norm());
        }
    }
}

TEST(Property, CompletenessDimensionMatchesEnumeration) {
    for (int n : {2, 4, 6, 8}) {
        EXPECT_EQ(v_delta_dimension(n), static_cast<int>(enumerate_noncrossing(n / 2).size()));
    }
}

TEST(Property, DiagonalGeneratorsStabilizeEveryExpansion) {
    std::mt19937_64 rng(103);
    for (int m = 1; m <= 4; ++m) {
        for (int rep = 0; rep < 10; ++rep) {
            const StateVector psi = reconstruct(random_coefficient_map(m, rng));
            for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
                EXPECT_LE(apply_element(LocalAlgebraElement::diagonal(2 * m, axis), psi).norm(), 1e-12 * psi.norm());
            }
            // Random element of the diagonal su(2) as well.
            std::normal_distribution<double> g;
            const Su2Coords c{g(rng), g(rng), g(rng)};
            const LocalAlgebraElement e(0.0, std::vector<Su2Coords>(2 * m, c));
            EXPECT_LE(apply_element(e, psi).norm(), 1e-12 * psi.norm());
        }
    }
}

TEST(Property, DiagonalGeneratorsLieInComputedNullspace) {
    std::mt19937_64 rng(104);
    for (int m = 2; m <= 4; ++m) {
        const CoefficientMap c = random_coefficient_map(m, rng);
        const StabilizerReport r = stabilizer_algebra(reconstruct(c));
        for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
            const auto d = LocalAlgebraElement::diagonal(2 * m, axis).coordinates();
            std::vector<double> projected(d.size(), 0.0);
            for (const auto &b : r.basis) {
                const auto bc = b.coordinates();
                double dot = 0.0;
                for (std::size_t k = 0; k < d.size(); ++k) dot += d[k] * bc[k];
                for (std::size_t k = 0; k < d.size(); ++k) projected[k] += dot * bc[k];
            }
            double err = 0.0;
            for (std::size_t k = 0; k < d.size(); ++k) err += (projected[k] - d[k]) * (projected[k] - d[k]);
            EXPECT_LT(std::sqrt(err), 1e-9);
        }
    }
}

TEST(Property, BlockLowerBoundAndPhaseExclusion) {
    std::mt19937_64 rng(105);
    for (int m = 2; m <= 4; ++m) {
        for (int rep = 0; rep < 10; ++rep) {
            const CoefficientMap c = rep % 2 ? random_disconnected_map(m, rng) : random_coefficient_map(m, rng);
            const StabilizerReport r = analyze_expansion(c);
            EXPECT_GE(r.dimension, 3 * static_cast<int>(r.blocks->size()));
            std::vector<Su2Coords> zero(2 * m);
            const StateVector psi = reconstruct(c);
            EXPECT_GT(apply_element(LocalAlgebraElement(1.0, zero), psi).norm(), 0.5 * psi.norm());
            // Per-block diagonal generators annihilate psi.
            for (const auto &block : *r.blocks) {
                const auto e = LocalAlgebraElement::on_qubits(2 * m, block, Axis::X);
                EXPECT_LE(apply_element(e, psi).norm(), 1e-12 * psi.norm());
            }
        }
    }
}

TEST(Property, ConnectivityPredictsDimensionForGenericCoefficients) {
    std::mt19937_64 rng(106);
    for (int m = 2; m <= 3; ++m) {
        for (int rep = 0; rep < 20; ++rep) {
            const CoefficientMap c = rep % 3 == 0 ? random_disconnected_map(m, rng) : random_coefficient_map(m, rng);
            const StabilizerReport r = classify(c);
            EXPECT_EQ(satisfies_star(c), r.dimension == 3);
            EXPECT_EQ(oracle::dense_stabilizer_dimension(oracle::to_dense(reconstruct(c))), r.dimension);
        }
    }
}

TEST(Property, LinearCombinationExactOnIntegerStates) {
    const auto all = enumerate_all(3);
    std::mt19937_64 rng(107);
    for (int rep = 0; rep < 20; ++rep) {
        const StateVector a = singlet_product(all[rng() % all.size()]);
        const StateVector b = singlet_product(all[rng() % all.size()]);
        const StateVector c = singlet_product(all[rng() % all.size()]);
        std::vector<WeightedState> ab{{1.0, a}, {2.0, b}}, ba{{2.0, b}, {1.0, a}};
        EXPECT_EQ(linear_combination(ab), linear_combination(ba));
        std::vector<WeightedState> left{{1.0, linear_combination(ab)}, {-3.0, c}};
        std::vector<WeightedState> bc{{2.0, b}, {-3.0, c}};
        std::vector<WeightedState> right{{1.0, a}, {1.0, linear_combination(bc)}};
        EXPECT_EQ(linear_combination(left), linear_combination(right));
        const Amplitude self = inner_product(a, a);
        EXPECT_EQ(self.imag(), 0.0);
        EXPECT_EQ(self.real(), a.squared_norm());
    }
}

TEST(Property, StateSerializationRoundTrips) {
    std::mt19937_64 rng(108);
    for (int m = 1; m <= 4; ++m) {
        const StateVector s = reconstruct(random_coefficient_map(m, rng));
        EXPECT_EQ(deserialize_state(serialize_state(s)), s);
        const CoefficientMap c = random_coefficient_map(m, rng);
        EXPECT_EQ(deserialize_coefficients(serialize_coefficients(c)).entries(), c.entries());
    }
}

}  // namespace
}  // namespace deltastab
