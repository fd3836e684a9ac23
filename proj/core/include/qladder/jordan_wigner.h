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

#include <span>
#include <vector>

#include "qladder/pauli.h"
#include "qladder/sparse_operator.h"

namespace qladder::jw {

/// Fermionic mode operator on the 1D ordering of the ladder register.
///
/// The string factor exp(i pi n_k) equals 1 - 2 n_k = -Z_k under the register
/// convention, so c_j = prod_{k<j} (-Z_k) * Minus_j and c_j^dagger is its
/// adjoint.
struct FermionOp {
    int mode = 1;
    bool dagger = false;
    PauliString string;
    SparseOperator realized;
};

FermionOp build_annihilation(int mode, int n);
FermionOp build_creation(int mode, int n);

/// c_j^dagger c_{j'} as a single Pauli string: Plus_j, Minus_{j'} and -Z on
/// every qubit strictly between. Adjacent modes carry no string.
PauliString hopping_string(int j, int j_prime, int n);
SparseOperator hopping_operator(int j, int j_prime, int n);

/// c_j^dagger c_j = (Z_j + 1) / 2.
PauliSum number_terms(int mode, int n);
SparseOperator number_operator(int mode, int n);

/// prod_k (-Z_k) over the whole register.
SparseOperator parity_operator(int n);

struct AlgebraReport {
    /// Largest entry deviation over all {c_a^dagger, c_b} - delta_ab and {c_a, c_b}.
    double max_deviation = 0.0;
    int worst_a = 0;
    int worst_b = 0;
    bool worst_is_mixed = false;
    int pairs_checked = 0;
};

/// Checks the canonical anticommutation relations for all 2n modes.
AlgebraReport check_algebra(int n);
/// Same checks over an explicit list of annihilators (modes 1..size). Lets
/// callers probe deliberately broken encodings.
AlgebraReport check_algebra(std::span<const FermionOp> annihilators);

}  // namespace qladder::jw
