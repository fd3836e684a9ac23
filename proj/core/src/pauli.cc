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
#include "qladder/pauli.h"

#include <algorithm>
#include <array>
#include <sstream>

#include "qladder/errors.h"

namespace qladder {

namespace {

// 2x2 matrices in computational-basis order, row-major: {m00, m01, m10, m11}.
using Mat2 = std::array<Complex, 4>;

constexpr Complex kI{0.0, 1.0};

Mat2 matrix_of(Pauli p) {
    switch (p) {
        case Pauli::X:
            return {0.0, 1.0, 1.0, 0.0};
        case Pauli::Y:
            return {0.0, kI, -kI, 0.0};
        case Pauli::Z:
            return {-1.0, 0.0, 0.0, 1.0};
        case Pauli::Plus:
            return {0.0, 0.0, 1.0, 0.0};
        case Pauli::Minus:
            return {0.0, 1.0, 0.0, 0.0};
    }
    return {};
}

Mat2 matmul(const Mat2 &a, const Mat2 &b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
}

// One candidate factor (nullopt-like "identity" encoded by has_factor=false).
struct Factor {
    bool has_factor;
    Pauli p;
    Complex coefficient;
};

// Writes m as a combination of at most four single-qubit factors. A single
// factor is returned whenever m is proportional to I, X, Y, Z, Plus or Minus.
std::vector<Factor> decompose(const Mat2 &m) {
    constexpr double kEps = 1e-15;
    auto is_zero = [](Complex c) { return std::abs(c) <= kEps; };

    const Mat2 identity{1.0, 0.0, 0.0, 1.0};
    std::vector<std::pair<bool, Pauli>> candidates = {
        {false, Pauli::X}, {true, Pauli::X}, {true, Pauli::Y}, {true, Pauli::Z}, {true, Pauli::Plus}, {true, Pauli::Minus}};
    for (const auto &[has, p] : candidates) {
        Mat2 basis = has ? matrix_of(p) : identity;
        std::size_t pivot = 0;
        while (pivot < 4 && is_zero(basis[pivot])) {
            ++pivot;
        }
        Complex c = m[pivot] / basis[pivot];
        bool ok = true;
        for (std::size_t k = 0; k < 4 && ok; ++k) {
            ok = std::abs(m[k] - c * basis[k]) <= kEps * (1.0 + std::abs(c));
        }
        if (ok) {
            if (is_zero(c)) {
                return {};
            }
            return {{has, p, c}};
        }
    }

    // General case: m = cI I + cX X + cY Y + cZ Z with c_P = tr(P m) / 2.
    std::vector<Factor> out;
    Complex c_i = (m[0] + m[3]) / 2.0;
    Complex c_x = (m[1] + m[2]) / 2.0;
    Complex c_y = (-kI * m[1] + kI * m[2]) / 2.0;
    Complex c_z = (m[3] - m[0]) / 2.0;
    if (!is_zero(c_i)) out.push_back({false, Pauli::X, c_i});
    if (!is_zero(c_x)) out.push_back({true, Pauli::X, c_x});
    if (!is_zero(c_y)) out.push_back({true, Pauli::Y, c_y});
    if (!is_zero(c_z)) out.push_back({true, Pauli::Z, c_z});
    return out;
}

}  // namespace

char pauli_symbol(Pauli p) {
    switch (p) {
        case Pauli::X:
            return 'X';
        case Pauli::Y:
            return 'Y';
        case Pauli::Z:
            return 'Z';
        case Pauli::Plus:
            return '+';
        case Pauli::Minus:
            return '-';
    }
    return '?';
}

PauliString::PauliString(Complex coefficient, std::initializer_list<std::pair<int, Pauli>> factors)
    : coefficient_(coefficient) {
    for (const auto &[q, p] : factors) {
        with(q, p);
    }
}

PauliString &PauliString::with(int qubit, Pauli p) {
    if (qubit < 1) {
        throw DomainError("Pauli factor on qubit " + std::to_string(qubit) + "; qubits are 1-based");
    }
    if (!factors_.emplace(qubit, p).second) {
        throw DomainError("qubit " + std::to_string(qubit) + " already carries a factor");
    }
    return *this;
}

int PauliString::max_qubit() const {
    return factors_.empty() ? 0 : factors_.rbegin()->first;
}

PauliString PauliString::adjoint() const {
    PauliString out(std::conj(coefficient_));
    for (const auto &[q, p] : factors_) {
        Pauli a = p == Pauli::Plus ? Pauli::Minus : p == Pauli::Minus ? Pauli::Plus : p;
        out.factors_.emplace(q, a);
    }
    return out;
}

PauliString PauliString::scaled(Complex s) const {
    PauliString out = *this;
    out.coefficient_ *= s;
    return out;
}

std::string PauliString::str() const {
    std::ostringstream out;
    out << "(" << coefficient_.real() << (coefficient_.imag() < 0 ? "" : "+") << coefficient_.imag() << "i)";
    if (factors_.empty()) {
        out << "*I";
    }
    for (const auto &[q, p] : factors_) {
        out << "*" << pauli_symbol(p) << q;
    }
    return out.str();
}

PauliSum::PauliSum(PauliString term) {
    *this += term;
}

int PauliSum::max_qubit() const {
    int m = 0;
    for (const auto &t : terms_) {
        m = std::max(m, t.max_qubit());
    }
    return m;
}

PauliSum &PauliSum::operator+=(const PauliString &term) {
    if (term.coefficient() != Complex{0.0, 0.0}) {
        terms_.push_back(term);
    }
    return *this;
}

PauliSum &PauliSum::operator+=(const PauliSum &other) {
    for (const auto &t : other.terms_) {
        *this += t;
    }
    return *this;
}

PauliSum &PauliSum::operator*=(Complex s) {
    if (s == Complex{0.0, 0.0}) {
        terms_.clear();
        return *this;
    }
    for (auto &t : terms_) {
        t = t.scaled(s);
    }
    return *this;
}

PauliSum PauliSum::adjoint() const {
    PauliSum out;
    for (const auto &t : terms_) {
        out += t.adjoint();
    }
    return out;
}

PauliSum operator+(PauliSum a, const PauliSum &b) {
    a += b;
    return a;
}

PauliSum operator*(Complex s, PauliSum a) {
    a *= s;
    return a;
}

PauliSum operator*(const PauliString &a, const PauliString &b) {
    // Partial products: each entry is one term of the expansion so far.
    std::vector<PauliString> partial = {PauliString(a.coefficient() * b.coefficient())};

    std::map<int, std::pair<const Pauli *, const Pauli *>> qubits;
    for (const auto &[q, p] : a.factors()) {
        qubits[q].first = &p;
    }
    for (const auto &[q, p] : b.factors()) {
        qubits[q].second = &p;
    }

    for (const auto &[q, pair] : qubits) {
        const auto [pa, pb] = pair;
        if (pa == nullptr || pb == nullptr) {
            Pauli p = pa != nullptr ? *pa : *pb;
            for (auto &t : partial) {
                t.with(q, p);
            }
            continue;
        }
        std::vector<Factor> pieces = decompose(matmul(matrix_of(*pa), matrix_of(*pb)));
        if (pieces.empty()) {
            return {};
        }
        std::vector<PauliString> next;
        next.reserve(partial.size() * pieces.size());
        for (const auto &t : partial) {
            for (const auto &f : pieces) {
                PauliString term = t.scaled(f.coefficient);
                if (f.has_factor) {
                    term.with(q, f.p);
                }
                next.push_back(std::move(term));
            }
        }
        partial = std::move(next);
    }

    PauliSum out;
    for (const auto &t : partial) {
        out += t;
    }
    return out;
}

PauliSum operator*(const PauliSum &a, const PauliSum &b) {
    PauliSum out;
    for (const auto &ta : a.terms()) {
        for (const auto &tb : b.terms()) {
            out += ta * tb;
        }
    }
    return out;
}

}  // namespace qladder
