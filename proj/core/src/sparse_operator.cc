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
#include "qladder/sparse_operator.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "qladder/errors.h"
#include "qladder/ladder_index.h"
#include "pauli_action.h"

namespace qladder {

namespace {

using Triplet = Eigen::Triplet<Complex, typename SparseOperator::Matrix::StorageIndex>;

void require_same_dimension(const SparseOperator &a, const SparseOperator &b, const char *what) {
    if (a.dimension() != b.dimension()) {
        throw DomainError(std::string(what) + ": dimension mismatch " + std::to_string(a.dimension()) + " vs " +
                          std::to_string(b.dimension()));
    }
}

Index register_dimension(int n) {
    if (n < 1) {
        throw DomainError("chain length must be >= 1, got " + std::to_string(n));
    }
    if (2 * n > kMaxFullRegisterQubits) {
        throw CapacityError("full-register operators are capped at " + std::to_string(kMaxFullRegisterQubits) +
                            " qubits, requested " + std::to_string(2 * n));
    }
    return Index{1} << (2 * n);
}

// Appends the nonzero entries of one Pauli string. Each column b maps to at
// most one row b ^ flip_mask.
void append_pauli_triplets(const PauliString &p, Index dim, std::vector<Triplet> &out) {
    const detail::PauliAction action(p);
    for (Index b = 0; b < dim; ++b) {
        const auto col = static_cast<std::uint64_t>(b);
        const Complex amp = action.amplitude(col);
        if (amp != Complex{0.0, 0.0}) {
            out.emplace_back(static_cast<int>(col ^ action.flip_mask()), static_cast<int>(b), amp);
        }
    }
}

void check_register(const PauliSum &s, int n) {
    if (s.max_qubit() > 2 * n) {
        throw DomainError("Pauli factor on qubit " + std::to_string(s.max_qubit()) + " exceeds register of " +
                          std::to_string(2 * n) + " qubits");
    }
}

}  // namespace

SparseOperator::SparseOperator(Matrix m, double drop_tolerance)
    : matrix_(std::move(m)), drop_tolerance_(drop_tolerance) {
    if (matrix_.rows() != matrix_.cols()) {
        throw DomainError("operators must be square, got " + std::to_string(matrix_.rows()) + "x" +
                          std::to_string(matrix_.cols()));
    }
    const double tol = drop_tolerance_;
    matrix_.prune([tol](const Index &, const Index &, const Complex &v) { return std::abs(v) > tol; });
    matrix_.makeCompressed();
    Matrix diff = matrix_ - Matrix(matrix_.adjoint());
    double worst = 0.0;
    for (Index k = 0; k < diff.outerSize(); ++k) {
        for (Matrix::InnerIterator it(diff, k); it; ++it) {
            worst = std::max(worst, std::abs(it.value()));
        }
    }
    hermitian_ = worst <= kHermitianTolerance;
}

SparseOperator SparseOperator::identity(Index dim) {
    Matrix m(dim, dim);
    m.setIdentity();
    return SparseOperator(std::move(m));
}

SparseOperator SparseOperator::zero(Index dim) {
    return SparseOperator(Matrix(dim, dim));
}

SparseOperator SparseOperator::diagonal(const Eigen::VectorXd &values) {
    const Index dim = values.size();
    std::vector<Triplet> t;
    t.reserve(static_cast<std::size_t>(dim));
    for (Index i = 0; i < dim; ++i) {
        t.emplace_back(static_cast<int>(i), static_cast<int>(i), values(i));
    }
    Matrix m(dim, dim);
    m.setFromTriplets(t.begin(), t.end());
    return SparseOperator(std::move(m));
}

SparseOperator SparseOperator::from_dense(const Eigen::MatrixXcd &d, double drop_tolerance) {
    Matrix m = d.sparseView(0.0, 0.0);
    return SparseOperator(std::move(m), drop_tolerance);
}

Complex SparseOperator::at(Index row, Index col) const {
    if (row < 0 || col < 0 || row >= dimension() || col >= dimension()) {
        throw DomainError("operator entry (" + std::to_string(row) + ", " + std::to_string(col) + ") out of range");
    }
    return matrix_.coeff(row, col);
}

Complex SparseOperator::trace() const {
    Complex t = 0.0;
    for (Index i = 0; i < dimension(); ++i) {
        t += matrix_.coeff(i, i);
    }
    return t;
}

double SparseOperator::max_abs() const {
    double m = 0.0;
    for (Index k = 0; k < matrix_.outerSize(); ++k) {
        for (Matrix::InnerIterator it(matrix_, k); it; ++it) {
            m = std::max(m, std::abs(it.value()));
        }
    }
    return m;
}

double SparseOperator::norm_inf() const {
    double m = 0.0;
    for (Index k = 0; k < matrix_.outerSize(); ++k) {
        double row = 0.0;
        for (Matrix::InnerIterator it(matrix_, k); it; ++it) {
            row += std::abs(it.value());
        }
        m = std::max(m, row);
    }
    return m;
}

SparseOperator SparseOperator::adjoint() const {
    return SparseOperator(Matrix(matrix_.adjoint()), drop_tolerance_);
}

Eigen::MatrixXcd SparseOperator::to_dense() const {
    if (dimension() > (Index{1} << 14)) {
        throw CapacityError("refusing to densify an operator of dimension " + std::to_string(dimension()));
    }
    return Eigen::MatrixXcd(matrix_);
}

SparseOperator operator+(const SparseOperator &a, const SparseOperator &b) {
    require_same_dimension(a, b, "add");
    return SparseOperator(a.matrix() + b.matrix(), a.drop_tolerance());
}

SparseOperator operator-(const SparseOperator &a, const SparseOperator &b) {
    require_same_dimension(a, b, "subtract");
    return SparseOperator(a.matrix() - b.matrix(), a.drop_tolerance());
}

SparseOperator operator*(const SparseOperator &a, const SparseOperator &b) {
    require_same_dimension(a, b, "multiply");
    return SparseOperator(SparseOperator::Matrix(a.matrix() * b.matrix()), a.drop_tolerance());
}

SparseOperator operator*(Complex s, const SparseOperator &a) {
    return SparseOperator(SparseOperator::Matrix(s * a.matrix()), a.drop_tolerance());
}

SparseOperator operator*(const SparseOperator &a, Complex s) {
    return s * a;
}

SparseOperator commutator(const SparseOperator &a, const SparseOperator &b) {
    return a * b - b * a;
}

SparseOperator anticommutator(const SparseOperator &a, const SparseOperator &b) {
    return a * b + b * a;
}

double max_abs_difference(const SparseOperator &a, const SparseOperator &b) {
    require_same_dimension(a, b, "compare");
    SparseOperator::Matrix diff = a.matrix() - b.matrix();
    double m = 0.0;
    for (Index k = 0; k < diff.outerSize(); ++k) {
        for (SparseOperator::Matrix::InnerIterator it(diff, k); it; ++it) {
            m = std::max(m, std::abs(it.value()));
        }
    }
    return m;
}

Amplitudes matvec(const SparseOperator &a, const Amplitudes &x) {
    if (a.dimension() != x.size()) {
        throw DomainError("matvec: operator dimension " + std::to_string(a.dimension()) + " vs vector length " +
                          std::to_string(x.size()));
    }
    return a.matrix() * x;
}

Complex expectation(const SparseOperator &a, const Amplitudes &x) {
    return x.dot(matvec(a, x));
}

SparseOperator realize(const PauliString &p, int n) {
    return realize(PauliSum(p), n);
}

SparseOperator realize(const PauliSum &s, int n) {
    const Index dim = register_dimension(n);
    check_register(s, n);
    std::vector<Triplet> triplets;
    triplets.reserve(static_cast<std::size_t>(dim) * std::min<std::size_t>(s.size(), 8));
    for (const auto &term : s.terms()) {
        append_pauli_triplets(term, dim, triplets);
    }
    SparseOperator::Matrix m(dim, dim);
    m.setFromTriplets(triplets.begin(), triplets.end());
    return SparseOperator(std::move(m));
}

}  // namespace qladder
