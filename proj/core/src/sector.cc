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

#include "qladder/sector.h"

#include <algorithm>
#include <bit>
#include <string>

#include "qladder/errors.h"
#include "pauli_action.h"

namespace qladder {

namespace {

using Triplet = Eigen::Triplet<Complex, typename SparseOperator::Matrix::StorageIndex>;

// All n-bit masks with k bits set, ascending.
std::vector<std::uint64_t> combinations(int n, int k) {
    std::vector<std::uint64_t> out;
    if (k == 0) {
        out.push_back(0);
        return out;
    }
    std::uint64_t v = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (v < limit) {
        out.push_back(v);
        // Next mask with the same popcount.
        std::uint64_t t = v | (v - 1);
        v = (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
    }
    return out;
}

}  // namespace

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

SectorBasis::SectorBasis(int n, int n_up, int n_down) : n_(n), n_up_(n_up), n_down_(n_down) {
    if (n < 1) {
        throw DomainError("chain length must be >= 1, got " + std::to_string(n));
    }
    if (2 * n > kMaxSectorRegisterQubits) {
        throw CapacityError("sector bases are capped at " + std::to_string(kMaxSectorRegisterQubits) +
                            " qubits, requested " + std::to_string(2 * n));
    }
    if (n_up < 0 || n_up > n || n_down < 0 || n_down > n) {
        throw DomainError("sector counts (n_up=" + std::to_string(n_up) + ", n_down=" + std::to_string(n_down) +
                          ") outside [0, " + std::to_string(n) + "]");
    }
    const auto ups = combinations(n, n_up);
    const auto downs = combinations(n, n_down);
    states_.reserve(ups.size() * downs.size());
    for (auto u : ups) {
        for (auto d : downs) {
            states_.push_back((u << n) | d);
        }
    }
}

std::optional<Index> SectorBasis::index_of(std::uint64_t state) const {
    auto it = std::lower_bound(states_.begin(), states_.end(), state);
    if (it == states_.end() || *it != state) {
        return std::nullopt;
    }
    return static_cast<Index>(it - states_.begin());
}

SectorTag sector_of(std::uint64_t state, int n) {
    const std::uint64_t low = (std::uint64_t{1} << n) - 1;
    return {std::popcount(state >> n), std::popcount(state & low)};
}

SparseOperator realize(const PauliSum &s, const SectorBasis &basis) {
    const int n = basis.chain_length();
    if (s.max_qubit() > 2 * n) {
        throw DomainError("Pauli factor on qubit " + std::to_string(s.max_qubit()) + " exceeds register of " +
                          std::to_string(2 * n) + " qubits");
    }
    const Index dim = basis.dimension();
    std::vector<Triplet> triplets;
    triplets.reserve(static_cast<std::size_t>(dim) * std::min<std::size_t>(s.size(), 8));
    for (const auto &term : s.terms()) {
        const detail::PauliAction action(term);
        for (Index c = 0; c < dim; ++c) {
            const std::uint64_t col = basis.state(c);
            const Complex amp = action.amplitude(col);
            if (amp == Complex{0.0, 0.0}) {
                continue;
            }
            if (auto r = basis.index_of(col ^ action.flip_mask())) {
                triplets.emplace_back(static_cast<int>(*r), static_cast<int>(c), amp);
            }
        }
    }
    SparseOperator::Matrix m(dim, dim);
    m.setFromTriplets(triplets.begin(), triplets.end());
    return SparseOperator(std::move(m));
}

SparseOperator project(const SparseOperator &full, const SectorBasis &basis) {
    const Index full_dim = Index{1} << (2 * basis.chain_length());
    if (full.dimension() != full_dim) {
        throw DomainError("project: operator dimension " + std::to_string(full.dimension()) +
                          " does not match register dimension " + std::to_string(full_dim));
    }
    std::vector<Triplet> triplets;
    const auto &m = full.matrix();
    for (Index r = 0; r < basis.dimension(); ++r) {
        for (SparseOperator::Matrix::InnerIterator it(m, static_cast<Index>(basis.state(r))); it; ++it) {
            auto c = basis.index_of(static_cast<std::uint64_t>(it.col()));
            if (c) {
                triplets.emplace_back(static_cast<int>(r), static_cast<int>(*c), it.value());
            }
        }
    }
    SparseOperator::Matrix out(basis.dimension(), basis.dimension());
    out.setFromTriplets(triplets.begin(), triplets.end());
    return SparseOperator(std::move(out), full.drop_tolerance());
}

SparseOperator projector(const SectorBasis &basis) {
    const Index full_dim = Index{1} << (2 * basis.chain_length());
    if (2 * basis.chain_length() > kMaxFullRegisterQubits) {
        throw CapacityError("full-register projector exceeds the register cap");
    }
    Eigen::VectorXd d = Eigen::VectorXd::Zero(full_dim);
    for (auto s : basis.states()) {
        d(static_cast<Index>(s)) = 1.0;
    }
    return SparseOperator::diagonal(d);
}

Amplitudes restrict_to(const Amplitudes &full, const SectorBasis &basis) {
    const Index full_dim = Index{1} << (2 * basis.chain_length());
    if (full.size() != full_dim) {
        throw DomainError("restrict_to: vector length " + std::to_string(full.size()) +
                          " does not match register dimension " + std::to_string(full_dim));
    }
    Amplitudes out(basis.dimension());
    for (Index i = 0; i < basis.dimension(); ++i) {
        out(i) = full(static_cast<Index>(basis.state(i)));
    }
    return out;
}

StateVector embed(const StateVector &sector_state, const SectorBasis &basis) {
    if (sector_state.dimension() != basis.dimension()) {
        throw DomainError("embed: state length " + std::to_string(sector_state.dimension()) +
                          " does not match sector dimension " + std::to_string(basis.dimension()));
    }
    if (2 * basis.chain_length() > kMaxFullRegisterQubits) {
        throw CapacityError("embedding into a full register beyond the register cap");
    }
    const Index full_dim = Index{1} << (2 * basis.chain_length());
    StateVector out{Amplitudes::Zero(full_dim), basis.tag()};
    for (Index i = 0; i < basis.dimension(); ++i) {
        out.amplitudes(static_cast<Index>(basis.state(i))) = sector_state.amplitudes(i);
    }
    return out;
}

}  // namespace qladder
