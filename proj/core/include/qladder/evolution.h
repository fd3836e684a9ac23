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

#include <vector>

#include "qladder/sparse_operator.h"
#include "qladder/state_vector.h"

namespace qladder {

struct KrylovOptions {
    int krylov_dimension = 30;
    /// Bound on the summed local error estimates over the whole run.
    double tolerance = 1e-9;
    /// Steps shorter than this fraction of the span raise PropagationError.
    double min_step_fraction = 1e-12;
};

struct EvolutionResult {
    std::vector<double> times;
    /// states[i] = exp(-i H times[i]) psi0.
    std::vector<StateVector> states;
    int krylov_dimension = 0;
    int steps = 0;
    double min_step = 0.0;
    double max_step = 0.0;
    /// Sum of accepted local error estimates.
    double error_estimate = 0.0;
};

/// Propagates psi0 under exp(-i H t) to each requested time. Times must be
/// non-negative and nondecreasing; internal substeps are chosen adaptively.
EvolutionResult krylov_evolve(const SparseOperator &h, const StateVector &psi0, const std::vector<double> &times,
                              const KrylovOptions &options = {});

/// <psi(t)|O|psi(t)> at each stored time.
std::vector<Complex> observable_series(const EvolutionResult &result, const SparseOperator &o);
/// Real parts; throws DomainError if O is not Hermitian.
std::vector<double> real_observable_series(const EvolutionResult &result, const SparseOperator &o);

/// C(t) = <psi0| exp(iHt) A exp(-iHt) B |psi0>, by propagating psi0 and B psi0.
std::vector<Complex> correlation(const SparseOperator &h, const StateVector &psi0, const SparseOperator &a,
                                 const SparseOperator &b, const std::vector<double> &times,
                                 const KrylovOptions &options = {});

}  // namespace qladder
