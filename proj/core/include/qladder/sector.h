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

#include "qladder/ladder_index.h"
#include "qladder/sparse_operator.h"
#include "qladder/state_vector.h"

namespace qladder {

/// Computational basis states with fixed excitation counts per chain.
///
/// States are full-register basis indices listed in strictly increasing
/// order; there are C(n, n_up) * C(n, n_down) of them.
class SectorBasis {
   public:
    SectorBasis(int n, int n_up, int n_down);

    int chain_length() const {
        return n_;
    }
    int n_up() const {
        return n_up_;
    }
    int n_down() const {
        return n_down_;
    }
    SectorTag tag() const {
        return {n_up_, n_down_};
    }
    Index dimension() const {
        return static_cast<Index>(states_.size());
    }
    const std::vector<std::uint64_t> &states() const {
        return states_;
    }
    std::uint64_t state(Index i) const {
        return states_[static_cast<std::size_t>(i)];
    }
    /// Position of a full-register basis index, or nullopt if outside the sector.
    std::optional<Index> index_of(std::uint64_t state) const;

   private:
    int n_;
    int n_up_;
    int n_down_;
    std::vector<std::uint64_t> states_;
};

/// Sector of a full-register basis index.
SectorTag sector_of(std::uint64_t state, int n);

/// Binomial coefficient, exact for the register sizes used here.
std::uint64_t binomial(int n, int k);

/// P O P written in sector coordinates, built term by term without forming
/// the full-register matrix. Terms that leave the sector are dropped.
SparseOperator realize(const PauliSum &s, const SectorBasis &basis);

/// Restriction of a full-register operator to the sector block.
SparseOperator project(const SparseOperator &full, const SectorBasis &basis);

/// Full-register diagonal projector onto the sector.
SparseOperator projector(const SectorBasis &basis);

/// Sector amplitudes of a full-register vector (no renormalization).
Amplitudes restrict_to(const Amplitudes &full, const SectorBasis &basis);

/// Full-register state from sector amplitudes.
StateVector embed(const StateVector &sector_state, const SectorBasis &basis);

}  // namespace qladder
