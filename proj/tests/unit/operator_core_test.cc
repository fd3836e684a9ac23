// Copyright 2026 The qladder Authors
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

#include <complex>
#include <cstdint>
#include <random>

#include <gtest/gtest.h>

#include "oracles.h"
#include "qladder/errors.h"
#include "qladder/ladder_index.h"
#include "qladder/pauli.h"
#include "qladder/sector.h"
#include "qladder/sparse_operator.h"

namespace qladder {
namespace {

using oracle::C;
using oracle::Mat;

Mat pauli_matrix(Pauli p) {
    switch (p) {
        case Pauli::X:
            return oracle::sx();
        case Pauli::Y:
            return oracle::sy();
        case Pauli::Z:
            return oracle::sz();
        case Pauli::Plus:
            return oracle::raise();
        case Pauli::Minus:
            return oracle::lower();
    }
    return oracle::identity2();
}

Mat dense_string(const PauliString &p, int qubits) {
    Mat m = Mat::Identity(Eigen::Index{1} << qubits, Eigen::Index{1} << qubits);
    for (const auto &[q, f] : p.factors()) {
        m = m * oracle::embed(pauli_matrix(f), q, qubits);
    }
    return p.coefficient() * m;
}

PauliString random_string(std::mt19937_64 &rng, int qubits) {
    std::uniform_int_distribution<int> pick(0, 5);
    std::normal_distribution<double> coef;
    PauliString p(Complex(coef(rng), coef(rng)));
    for (int q = 1; q <= qubits; ++q) {
        const int k = pick(rng);
        if (k < 5) {
            p.with(q, static_cast<Pauli>(k));
        }
    }
    return p;
}

TEST(LadderIndex, LinearizeExamples) {
    EXPECT_EQ(linearize({1, Chain::down}, 3), 1);
    EXPECT_EQ(linearize({1, Chain::up}, 3), 4);
    EXPECT_EQ(linearize({3, Chain::up}, 3), 6);
}

TEST(LadderIndex, RoundTripUpToEightSites) {
    for (int n = 1; n <= 8; ++n) {
        for (int q = 1; q <= 2 * n; ++q) {
            EXPECT_EQ(linearize(delinearize(q, n), n), q);
        }
        for (int site = 1; site <= n; ++site) {
            for (Chain c : {Chain::down, Chain::up}) {
                const LadderIndex idx{site, c};
                EXPECT_EQ(delinearize(linearize(idx, n), n), idx);
            }
        }
    }
}

TEST(LadderIndex, OutOfRangeIsDomainError) {
    EXPECT_THROW(linearize({0, Chain::down}, 3), DomainError);
    EXPECT_THROW(linearize({4, Chain::up}, 3), DomainError);
    EXPECT_THROW(delinearize(7, 3), DomainError);
}

TEST(LadderIndex, ParsesShortAndLongForms) {
    EXPECT_EQ(parse_ladder_index("3u"), (LadderIndex{3, Chain::up}));
    EXPECT_EQ(parse_ladder_index("2down"), (LadderIndex{2, Chain::down}));
    EXPECT_THROW(parse_ladder_index("x2"), DomainError);
    EXPECT_THROW(parse_ladder_index("2q"), DomainError);
}

TEST(Realize, SingleZIsTraceless) {
    const SparseOperator z = realize(PauliString(1.0, {{1, Pauli::Z}}), 1);
    EXPECT_EQ(z.dimension(), 4);
    EXPECT_NEAR(std::abs(z.trace()), 0.0, 1e-15);
    // Qubit 1 is the least-significant bit; index 1 has it excited.
    EXPECT_EQ(z.at(0, 0), Complex(-1.0));
    EXPECT_EQ(z.at(1, 1), Complex(1.0));
    EXPECT_EQ(z.at(2, 2), Complex(-1.0));
}

TEST(Realize, EmptyStringIsScaledIdentity) {
    const SparseOperator a = realize(PauliString(2.5), 1);
    EXPECT_NEAR(std::abs(a.trace() - Complex(10.0)), 0.0, 1e-15);
    EXPECT_NEAR(max_abs_difference(a, 2.5 * SparseOperator::identity(4)), 0.0, 1e-15);
}

TEST(Realize, XXIsAnInvolution) {
    const SparseOperator a = realize(PauliString(1.0, {{1, Pauli::X}, {2, Pauli::X}}), 1);
    EXPECT_DOUBLE_EQ(a.max_abs(), 1.0);
    EXPECT_NEAR(max_abs_difference(a * a, SparseOperator::identity(4)), 0.0, 1e-15);
}

TEST(Realize, FactorBeyondRegisterIsDomainError) {
    EXPECT_THROW(realize(PauliString(1.0, {{3, Pauli::Z}}), 1), DomainError);
}

TEST(Realize, MatchesKroneckerOracle) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const PauliString p = random_string(rng, 6);
        const Mat expected = dense_string(p, 6);
        EXPECT_LT(oracle::max_abs(realize(p, 3).to_dense() - expected), 1e-12) << p.str();
    }
}

TEST(Realize, IsAHomomorphism) {
    std::mt19937_64 rng(7);
    for (int qubits : {2, 4, 6}) {
        const int n = qubits / 2;
        for (int trial = 0; trial < 20; ++trial) {
            const PauliString p = random_string(rng, qubits);
            const PauliString q = random_string(rng, qubits);
            const SparseOperator lhs = realize(p * q, n);
            const SparseOperator rhs = realize(p, n) * realize(q, n);
            EXPECT_LT(max_abs_difference(lhs, rhs), 1e-12) << p.str() << " * " << q.str();
        }
    }
}

TEST(Arithmetic, SelfCancellationStoresNothing) {
    const SparseOperator a = realize(PauliString(0.3, {{1, Pauli::X}, {2, Pauli::Y}}), 1);
    const SparseOperator z = a + Complex(-1.0) * a;
    EXPECT_EQ(z.nonzeros(), 0);
}

TEST(Arithmetic, XTimesZIsMinusIY) {
    const SparseOperator x = realize(PauliString(1.0, {{1, Pauli::X}}), 1);
    const SparseOperator z = realize(PauliString(1.0, {{1, Pauli::Z}}), 1);
    const SparseOperator y = realize(PauliString(1.0, {{1, Pauli::Y}}), 1);
    EXPECT_LT(max_abs_difference(x * z, Complex(0, -1) * y), 1e-15);
}

TEST(Arithmetic, AdjointOfProductReversesOrder) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        const SparseOperator a = realize(PauliSum(random_string(rng, 4)) + PauliSum(random_string(rng, 4)), 2);
        const SparseOperator b = realize(PauliSum(random_string(rng, 4)) + PauliSum(random_string(rng, 4)), 2);
        EXPECT_LT(max_abs_difference((a * b).adjoint(), b.adjoint() * a.adjoint()), 1e-12);
    }
}

TEST(Arithmetic, HermitianFlagIsRecomputed) {
    const SparseOperator x = realize(PauliString(1.0, {{1, Pauli::X}}), 1);
    const SparseOperator p = realize(PauliString(1.0, {{1, Pauli::Plus}}), 1);
    EXPECT_TRUE(x.is_hermitian());
    EXPECT_FALSE(p.is_hermitian());
    EXPECT_TRUE((p + p.adjoint()).is_hermitian());
    EXPECT_FALSE((Complex(0, 1) * x).is_hermitian());
}

TEST(Arithmetic, DimensionMismatchIsDomainError) {
    const SparseOperator a = SparseOperator::identity(4);
    const SparseOperator b = SparseOperator::identity(16);
    EXPECT_THROW(a + b, DomainError);
    EXPECT_THROW(a * b, DomainError);
    EXPECT_THROW(matvec(a, Amplitudes::Zero(8)), DomainError);
}

TEST(Matvec, IdentityAndSignConvention) {
    Amplitudes psi = Amplitudes::Random(16);
    EXPECT_LT((matvec(SparseOperator::identity(16), psi) - psi).norm(), 1e-15);

    Amplitudes ground = Amplitudes::Zero(4);
    ground(0) = 1.0;
    const Amplitudes out = matvec(realize(PauliString(1.0, {{1, Pauli::Z}}), 1), ground);
    EXPECT_EQ(out(0), Complex(-1.0));
}

TEST(Matvec, HermitianExpectationIsReal) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        PauliSum s = random_string(rng, 6);
        s += random_string(rng, 6);
        const SparseOperator h = realize(s + s.adjoint(), 3);
        Amplitudes psi = Amplitudes::Random(64);
        psi.normalize();
        EXPECT_LT(std::abs(expectation(h, psi).imag()), 1e-12);
    }
}

TEST(Sector, ExampleDimensions) {
    const SectorBasis empty(2, 0, 0);
    ASSERT_EQ(empty.dimension(), 1);
    EXPECT_EQ(empty.state(0), 0u);
    EXPECT_EQ(SectorBasis(2, 1, 1).dimension(), 4);
    EXPECT_EQ(SectorBasis(3, 2, 1).dimension(), 9);
}

TEST(Sector, DimensionsSumToFullRegister) {
    for (int n = 1; n <= 5; ++n) {
        Index total = 0;
        for (int u = 0; u <= n; ++u) {
            for (int d = 0; d <= n; ++d) {
                const SectorBasis b(n, u, d);
                EXPECT_EQ(static_cast<std::uint64_t>(b.dimension()), binomial(n, u) * binomial(n, d));
                total += b.dimension();
            }
        }
        EXPECT_EQ(total, Index{1} << (2 * n));
    }
}

TEST(Sector, StatesCarryTheirCounts) {
    const SectorBasis b(4, 2, 3);
    for (Index i = 0; i < b.dimension(); ++i) {
        EXPECT_EQ(sector_of(b.state(i), 4), (SectorTag{2, 3}));
        EXPECT_EQ(b.index_of(b.state(i)), i);
    }
    EXPECT_FALSE(b.index_of(0).has_value());
}

TEST(Sector, ProjectorIsIdempotentAndHermitian) {
    for (int n = 1; n <= 4; ++n) {
        const SparseOperator p = projector(SectorBasis(n, n / 2, (n + 1) / 2));
        EXPECT_LT(max_abs_difference(p * p, p), 1e-12);
        EXPECT_LT(max_abs_difference(p.adjoint(), p), 1e-12);
    }
}

TEST(Sector, TermwiseRealizationEqualsProjection) {
    std::mt19937_64 rng(9);
    PauliSum s;
    for (int k = 0; k < 12; ++k) {
        s += random_string(rng, 6);
    }
    const SparseOperator full = realize(s, 3);
    for (int u = 0; u <= 3; ++u) {
        for (int d = 0; d <= 3; ++d) {
            const SectorBasis b(3, u, d);
            EXPECT_LT(max_abs_difference(realize(s, b), project(full, b)), 1e-12);
        }
    }
}

TEST(Sector, EmbedAndRestrictRoundTrip) {
    const SectorBasis b(3, 1, 2);
    Amplitudes a = Amplitudes::Random(b.dimension());
    const StateVector full = embed(StateVector{a, b.tag()}, b);
    EXPECT_EQ(full.dimension(), 64);
    EXPECT_LT((restrict_to(full.amplitudes, b) - a).norm(), 1e-15);
}

TEST(Sector, BadCountsAndCapacity) {
    EXPECT_THROW(SectorBasis(2, 3, 0), DomainError);
    EXPECT_THROW(SectorBasis(2, 0, -1), DomainError);
    EXPECT_THROW(SectorBasis(15, 1, 1), CapacityError);
    EXPECT_THROW(realize(PauliString(1.0, {{1, Pauli::Z}}), 13), CapacityError);
}

}  // namespace
}  // namespace qladder
