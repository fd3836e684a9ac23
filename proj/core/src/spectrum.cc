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

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "qladder/errors.h"
#include "qladder/solver.h"

namespace qladder {

SpectrumResult dense_spectrum(const SparseOperator &h, bool keep_vectors) {
    const Index dim = h.dimension();
    if (dim > kMaxDenseDimension) {
        throw CapacityError("dense_spectrum: dimension " + std::to_string(dim) + " exceeds " +
                            std::to_string(kMaxDenseDimension));
    }
    if (!h.is_hermitian()) {
        throw DomainError("dense_spectrum: operator is not Hermitian");
    }
    SpectrumResult out;
    if (dim == 0) {
        return out;
    }
    const Eigen::MatrixXcd dense = h.to_dense();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("dense_spectrum: eigensolver failed");
    }
    const Eigen::VectorXd &values = solver.eigenvalues();
    const Eigen::MatrixXcd &vectors = solver.eigenvectors();
    out.eigenvalues.assign(values.data(), values.data() + values.size());

    const double scale = std::max(1.0, h.norm_inf());
    const Eigen::MatrixXcd r = h.matrix() * vectors - vectors * values.asDiagonal();
    for (Index i = 0; i < dim; ++i) {
        out.max_residual = std::max(out.max_residual, r.col(i).norm());
    }
    if (out.max_residual > kResidualTolerance * scale) {
        throw NumericalError("dense_spectrum: residual " + std::to_string(out.max_residual) + " above tolerance");
    }
    if (keep_vectors) {
        out.eigenvectors = vectors;
    }
    return out;
}

}  // namespace qladder
