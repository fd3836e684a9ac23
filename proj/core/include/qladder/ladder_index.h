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
#include <string>

namespace qladder {

/// Register layout shared by every module.
///
/// A ladder of chain length n holds 2n qubits. Qubits carry 1-based linear
/// indices: (j, down) -> j and (j, up) -> j + n. Linear qubit q occupies bit
/// q-1 of a computational basis index, and a set bit means the qubit is
/// excited. With this layout the down chain is the low n bits and the up chain
/// the high n bits, so excitation counts per chain are popcounts.
enum class Chain : std::uint8_t { down, up };

struct LadderIndex {
    int site = 1;
    Chain chain = Chain::down;

    bool operator==(const LadderIndex &) const = default;
};

/// Hard caps on the number of qubits 2n.
inline constexpr int kMaxFullRegisterQubits = 24;
inline constexpr int kMaxSectorRegisterQubits = 28;

int linearize(LadderIndex idx, int n);
LadderIndex delinearize(int qubit, int n);

/// Bit mask of the computational basis for linear qubit q (1-based).
inline std::uint64_t qubit_bit(int qubit) {
    return std::uint64_t{1} << (qubit - 1);
}

std::string to_string(Chain chain);
std::string to_string(LadderIndex idx);

/// Parses "3u", "3up", "2d" or "2down" (site first, then chain).
LadderIndex parse_ladder_index(const std::string &text);

}  // namespace qladder
