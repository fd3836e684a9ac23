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

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qladder {

using Complex = std::complex<double>;

/// Single-qubit factors. In the computational basis (bit 0 = ground, bit 1 =
/// excited) the convention is
///   Z|excited> = +|excited>, Z|ground> = -|ground>,
///   Plus = |excited><ground|, Minus = |ground><excited|,
///   X = Plus + Minus, Y = -i (Plus - Minus).
/// so that Plus * Minus = (Z + 1) / 2 and X * Z = -i Y.
enum class Pauli : std::uint8_t { X, Y, Z, Plus, Minus };

char pauli_symbol(Pauli p);

/// A coefficient times a tensor product of single-qubit factors; qubits absent
/// from the factor map carry the identity. Qubit indices are 1-based.
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(Complex coefficient) : coefficient_(coefficient) {
    }
    PauliString(Complex coefficient, std::initializer_list<std::pair<int, Pauli>> factors);

    /// Sets the factor on one qubit; a qubit may carry at most one factor.
    PauliString &with(int qubit, Pauli p);

    Complex coefficient() const {
        return coefficient_;
    }
    const std::map<int, Pauli> &factors() const {
        return factors_;
    }
    bool is_identity() const {
        return factors_.empty();
    }
    /// Largest qubit index carrying a factor, 0 for a scaled identity.
    int max_qubit() const;

    PauliString adjoint() const;
    PauliString scaled(Complex s) const;

    std::string str() const;

    bool operator==(const PauliString &) const = default;

   private:
    Complex coefficient_{1.0, 0.0};
    std::map<int, Pauli> factors_;
};

/// Formal sum of Pauli strings. Terms are kept as given; no simplification
/// beyond dropping zero coefficients.
class PauliSum {
   public:
    PauliSum() = default;
    PauliSum(PauliString term);  // NOLINT(google-explicit-constructor)

    const std::vector<PauliString> &terms() const {
        return terms_;
    }
    std::size_t size() const {
        return terms_.size();
    }
    bool empty() const {
        return terms_.empty();
    }
    int max_qubit() const;

    PauliSum &operator+=(const PauliString &term);
    PauliSum &operator+=(const PauliSum &other);
    PauliSum &operator*=(Complex s);
    PauliSum adjoint() const;

   private:
    std::vector<PauliString> terms_;
};

PauliSum operator+(PauliSum a, const PauliSum &b);
PauliSum operator*(Complex s, PauliSum a);

/// Operator products. Factors on a shared qubit are multiplied as 2x2
/// matrices; when the product is not a multiple of a single factor it is
/// expanded in the {I, X, Y, Z} basis, so the result may hold several terms.
PauliSum operator*(const PauliString &a, const PauliString &b);
PauliSum operator*(const PauliSum &a, const PauliSum &b);

}  // namespace qladder
