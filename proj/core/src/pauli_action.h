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

#include "qladder/ladder_index.h"
#include "qladder/pauli.h"

namespace qladder::detail {

// Action of one Pauli string on computational basis states: column `col`
// maps to row `col ^ flip_mask` with amplitude `amplitude(col)` (possibly 0).
class PauliAction {
   public:
    explicit PauliAction(const PauliString &p) : p_(p) {
        for (const auto &[q, f] : p.factors()) {
            if (f != Pauli::Z) {
                flip_mask_ |= qubit_bit(q);
            }
        }
    }

    std::uint64_t flip_mask() const {
        return flip_mask_;
    }

    Complex amplitude(std::uint64_t col) const {
        constexpr Complex kI{0.0, 1.0};
        Complex amp = p_.coefficient();
        for (const auto &[q, f] : p_.factors()) {
            const bool excited = (col & qubit_bit(q)) != 0;
            switch (f) {
                case Pauli::X:
                    break;
                case Pauli::Y:
                    amp *= excited ? kI : -kI;
                    break;
                case Pauli::Z:
                    amp *= excited ? 1.0 : -1.0;
                    break;
                case Pauli::Plus:
                    if (excited) return 0.0;
                    break;
                case Pauli::Minus:
                    if (!excited) return 0.0;
                    break;
            }
        }
        return amp;
    }

   private:
    const PauliString &p_;
    std::uint64_t flip_mask_ = 0;
};

}  // namespace qladder::detail
