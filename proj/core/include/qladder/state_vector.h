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

#include <optional>

#include "qladder/sparse_operator.h"

namespace qladder {

/// Excitation counts per chain, (N_up, N_down).
struct SectorTag {
    int n_up = 0;
    int n_down = 0;

    bool operator==(const SectorTag &) const = default;
};

/// Complex amplitudes over the full register, or over a sector basis when
/// the sector field is set. Operations in this library hand out unit-norm states.
struct StateVector {
    Amplitudes amplitudes;
    std::optional<SectorTag> sector;

    Index dimension() const {
        return static_cast<Index>(amplitudes.size());
    }
    double norm() const {
        return amplitudes.norm();
    }

    static StateVector basis_state(Index dim, Index index, std::optional<SectorTag> tag = std::nullopt) {
        StateVector s{Amplitudes::Zero(dim), tag};
        s.amplitudes(index) = 1.0;
        return s;
    }
};

}  // namespace qladder
