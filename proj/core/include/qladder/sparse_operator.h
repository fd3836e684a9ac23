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
#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <complex>
#include <cstdint>

#include "qladder/pauli.h"

namespace qladder {

using Index = std::int64_t;
using Amplitudes = Eigen::VectorXcd;

/// Immutable sparse matrix over a (full-register or sector) Hilbert space.
///
/// Entries of magnitude at or below the drop tolerance are pruned on
/// construction, and the Hermitian flag is computed then as
/// max|A - A^dagger| <= kHermitianTolerance.
class SparseOperator {
   public:
    using Matrix = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;

    static constexpr double kDefaultDropTolerance = 1e-14;
    static constexpr double kHermitianTolerance = 1e-12;

    SparseOperator() = default;
    explicit SparseOperator(Matrix m, double drop_tolerance = kDefaultDropTolerance);

    static SparseOperator identity(Index dim);
    static SparseOperator zero(Index dim);
    static SparseOperator diagonal(const Eigen::VectorXd &values);
    static SparseOperator from_dense(const Eigen::MatrixXcd &m, double drop_tolerance = kDefaultDropTolerance);

    Index dimension() const {
        return static_cast<Index>(matrix_.rows());
    }
    Index nonzeros() const {
        return static_cast<Index>(matrix_.nonZeros());
    }
    bool is_hermitian() const {
        return hermitian_;
    }
    double drop_tolerance() const {
        return drop_tolerance_;
    }
    const Matrix &matrix() const {
        return matrix_;
    }

    Complex at(Index row, Index col) const;
    Complex trace() const;
    /// Largest entry magnitude, 0 for an empty operator.
    double max_abs() const;
    /// Largest absolute row sum; an upper bound on the spectral norm.
    double norm_inf() const;

    SparseOperator adjoint() const;
    Eigen::MatrixXcd to_dense() const;

   private:
    Matrix matrix_;
    double drop_tolerance_ = kDefaultDropTolerance;
    bool hermitian_ = true;
};

SparseOperator operator+(const SparseOperator &a, const SparseOperator &b);
SparseOperator operator-(const SparseOperator &a, const SparseOperator &b);
SparseOperator operator*(const SparseOperator &a, const SparseOperator &b);
SparseOperator operator*(Complex s, const SparseOperator &a);
SparseOperator operator*(const SparseOperator &a, Complex s);

SparseOperator commutator(const SparseOperator &a, const SparseOperator &b);
SparseOperator anticommutator(const SparseOperator &a, const SparseOperator &b);

/// max_ij |a_ij - b_ij|.
double max_abs_difference(const SparseOperator &a, const SparseOperator &b);

/// y = A x. The result is not normalized.
Amplitudes matvec(const SparseOperator &a, const Amplitudes &x);

/// <x|A|x>.
Complex expectation(const SparseOperator &a, const Amplitudes &x);

/// Kronecker realization of Pauli strings on the full 2n-qubit register
/// (chain length n). Qubit 1 is the least-significant tensor slot.
SparseOperator realize(const PauliString &p, int n);
SparseOperator realize(const PauliSum &s, int n);

}  // namespace qladder
