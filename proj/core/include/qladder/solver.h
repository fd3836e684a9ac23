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

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "qladder/sector.h"
#include "qladder/sparse_operator.h"
#include "qladder/state_vector.h"

namespace qladder {

/// Largest dimension accepted by dense_spectrum.
inline constexpr Index kMaxDenseDimension = 4096;
/// Largest accepted residual ||Hv - lambda v|| for a reported pair.
inline constexpr double kResidualTolerance = 1e-8;

struct SpectrumResult {
    /// Ascending.
    std::vector<double> eigenvalues;
    /// Column i pairs with eigenvalues[i].
    std::optional<Eigen::MatrixXcd> eigenvectors;
    std::optional<SectorTag> sector;
    /// Largest residual over the reported pairs (0 when vectors are not kept).
    double max_residual = 0.0;
};

/// Full spectrum by dense Hermitian diagonalization.
SpectrumResult dense_spectrum(const SparseOperator &h, bool keep_vectors = false);

struct LanczosOptions {
    /// Iterations per Lanczos run, capped by the remaining dimension.
    int max_iterations = 300;
    /// Ritz pairs count as converged when |beta s_m| <= tolerance * max(1, |theta|).
    double tolerance = 1e-10;
    std::uint64_t seed = 0x5eed;
    bool keep_vectors = false;
};

struct LanczosDiagnostics {
    int runs = 0;
    int total_iterations = 0;
    int restarts = 0;
    /// Lowest Ritz value after each iteration of the first run.
    std::vector<double> lowest_history;
};

/// k lowest eigenvalues by Lanczos with full reorthogonalization. Converged
/// pairs are locked and the search continues in their orthogonal complement,
/// so degenerate levels are resolved; a final complement run guards against
/// missed levels. Breakdown restarts from a fresh random vector.
SpectrumResult lanczos_extremal(const SparseOperator &h, int k, const LanczosOptions &options = {},
                                LanczosDiagnostics *diagnostics = nullptr);
/// Same, restricted to a particle-number sector of a full-register operator.
SpectrumResult lanczos_extremal(const SparseOperator &h, int k, const SectorBasis &sector,
                                const LanczosOptions &options = {}, LanczosDiagnostics *diagnostics = nullptr);

/// Ground state and energy; convenience over lanczos_extremal.
std::pair<double, Amplitudes> ground_state(const SparseOperator &h, const LanczosOptions &options = {});

}  // namespace qladder
