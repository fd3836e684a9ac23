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

#include "qladder/jordan_wigner.h"

#include <string>

#include "qladder/errors.h"
#include "qladder/ladder_index.h"

namespace qladder::jw {

namespace {

void check_mode(int mode, int n) {
    if (n < 1) {
        throw DomainError("chain length must be >= 1, got " + std::to_string(n));
    }
    if (mode < 1 || mode > 2 * n) {
        throw DomainError("fermion mode " + std::to_string(mode) + " outside [1, " + std::to_string(2 * n) + "]");
    }
}

PauliString annihilation_string(int mode) {
    PauliString s(mode % 2 == 1 ? 1.0 : -1.0);  // (-1)^(mode-1) from the -Z factors
    for (int k = 1; k < mode; ++k) {
        s.with(k, Pauli::Z);
    }
    s.with(mode, Pauli::Minus);
    return s;
}

}  // namespace

FermionOp build_annihilation(int mode, int n) {
    check_mode(mode, n);
    PauliString s = annihilation_string(mode);
    return {mode, false, s, realize(s, n)};
}

FermionOp build_creation(int mode, int n) {
    check_mode(mode, n);
    PauliString s = annihilation_string(mode).adjoint();
    return {mode, true, s, realize(s, n)};
}

PauliString hopping_string(int j, int j_prime, int n) {
    check_mode(j, n);
    check_mode(j_prime, n);
    if (j == j_prime) {
        throw DomainError("hopping_operator needs distinct modes; use number_operator for j == j'");
    }
    const int lo = std::min(j, j_prime);
    const int hi = std::max(j, j_prime);
    const int between = hi - lo - 1;
    PauliString s(between % 2 == 0 ? 1.0 : -1.0);
    s.with(j, Pauli::Plus);
    s.with(j_prime, Pauli::Minus);
    for (int k = lo + 1; k < hi; ++k) {
        s.with(k, Pauli::Z);
    }
    return s;
}

SparseOperator hopping_operator(int j, int j_prime, int n) {
    return realize(hopping_string(j, j_prime, n), n);
}

PauliSum number_terms(int mode, int n) {
    check_mode(mode, n);
    PauliSum s;
    s += PauliString(0.5, {{mode, Pauli::Z}});
    s += PauliString(0.5);
    return s;
}

SparseOperator number_operator(int mode, int n) {
    return realize(number_terms(mode, n), n);
}

SparseOperator parity_operator(int n) {
    PauliString s(1.0);  // (-1)^(2n) = 1
    for (int k = 1; k <= 2 * n; ++k) {
        s.with(k, Pauli::Z);
    }
    return realize(s, n);
}

AlgebraReport check_algebra(int n) {
    if (n < 1) {
        throw DomainError("chain length must be >= 1, got " + std::to_string(n));
    }
    std::vector<FermionOp> ops;
    ops.reserve(static_cast<std::size_t>(2 * n));
    for (int j = 1; j <= 2 * n; ++j) {
        ops.push_back(build_annihilation(j, n));
    }
    return check_algebra(ops);
}

AlgebraReport check_algebra(std::span<const FermionOp> annihilators) {
    AlgebraReport report;
    if (annihilators.empty()) {
        return report;
    }
    const Index dim = annihilators.front().realized.dimension();
    const SparseOperator identity = SparseOperator::identity(dim);
    std::vector<SparseOperator> daggers;
    daggers.reserve(annihilators.size());
    for (const auto &c : annihilators) {
        daggers.push_back(c.realized.adjoint());
    }

    auto record = [&](double deviation, int a, int b, bool mixed) {
        ++report.pairs_checked;
        if (deviation > report.max_deviation) {
            report.max_deviation = deviation;
            report.worst_a = a;
            report.worst_b = b;
            report.worst_is_mixed = mixed;
        }
    };

    const int modes = static_cast<int>(annihilators.size());
    for (int a = 0; a < modes; ++a) {
        for (int b = 0; b < modes; ++b) {
            SparseOperator mixed = anticommutator(daggers[a], annihilators[b].realized);
            double dev = a == b ? max_abs_difference(mixed, identity) : mixed.max_abs();
            record(dev, a + 1, b + 1, true);
            if (b >= a) {
                record(anticommutator(annihilators[a].realized, annihilators[b].realized).max_abs(), a + 1, b + 1,
                       false);
            }
        }
    }
    return report;
}

}  // namespace qladder::jw
