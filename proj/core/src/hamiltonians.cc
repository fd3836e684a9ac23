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

#include "qladder/hamiltonians.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qladder/errors.h"
#include "qladder/jordan_wigner.h"

namespace qladder {

namespace {

void check_list(const std::vector<double> &v, std::size_t full, const char *name) {
    if (v.size() != 1 && v.size() != full) {
        throw DomainError(std::string("LadderParams.") + name + " must hold 1 or " + std::to_string(full) +
                          " values, got " + std::to_string(v.size()));
    }
    for (double x : v) {
        if (!std::isfinite(x)) {
            throw DomainError(std::string("LadderParams.") + name + " holds a non-finite value");
        }
    }
}

std::optional<double> common_value(const std::vector<double> &v, double tolerance) {
    if (v.empty()) {
        return 0.0;
    }
    double scale = 0.0;
    for (double x : v) {
        scale = std::max(scale, std::abs(x));
    }
    for (double x : v) {
        if (std::abs(x - v.front()) > tolerance * std::max(scale, 1e-300)) {
            return std::nullopt;
        }
    }
    return v.front();
}

std::vector<double> expand(const std::vector<double> &v, std::size_t full) {
    if (v.size() == full) {
        return v;
    }
    return std::vector<double>(full, v.front());
}

void require_uniform(const LadderParams &p, const char *what) {
    p.validate();
    if (!p.is_uniform()) {
        throw DomainError(std::string(what) + " is defined for uniform parameters only; per-element lists present");
    }
}

}  // namespace

LadderParams LadderParams::uniform(int n, double epsilon, double gx, double gz) {
    LadderParams p{n, {epsilon}, {gx}, {gz}};
    p.validate();
    return p;
}

void LadderParams::validate() const {
    if (n < 1) {
        throw DomainError("LadderParams.n must be >= 1, got " + std::to_string(n));
    }
    check_list(epsilon, static_cast<std::size_t>(2 * n), "epsilon");
    // n = 1 has no bonds; a single (unused) uniform value is still accepted.
    if (n == 1) {
        if (gx.size() > 1) {
            throw DomainError("LadderParams.gx must hold at most 1 value for n = 1");
        }
    } else {
        check_list(gx, static_cast<std::size_t>(2 * (n - 1)), "gx");
    }
    check_list(gz, static_cast<std::size_t>(n), "gz");
}

bool LadderParams::is_uniform() const {
    return epsilon.size() == 1 && gx.size() <= 1 && gz.size() == 1;
}

std::optional<LadderParams> LadderParams::uniformized(double tolerance) const {
    validate();
    auto e = common_value(epsilon, tolerance);
    auto x = common_value(gx, tolerance);
    auto z = common_value(gz, tolerance);
    if (!e || !x || !z) {
        return std::nullopt;
    }
    return LadderParams{n, {*e}, {*x}, {*z}};
}

bool LadderParams::chains_identical() const {
    for (int j = 1; j <= n; ++j) {
        if (epsilon_at(j) != epsilon_at(j + n)) {
            return false;
        }
    }
    for (int b = 1; b < n; ++b) {
        if (gx_at(b, Chain::down) != gx_at(b, Chain::up)) {
            return false;
        }
    }
    return true;
}

double LadderParams::epsilon_at(int qubit) const {
    if (qubit < 1 || qubit > 2 * n) {
        throw DomainError("qubit " + std::to_string(qubit) + " outside [1, " + std::to_string(2 * n) + "]");
    }
    return epsilon.size() == 1 ? epsilon.front() : epsilon[static_cast<std::size_t>(qubit - 1)];
}

double LadderParams::gx_at(int bond, Chain chain) const {
    if (bond < 1 || bond > n - 1) {
        throw DomainError("bond " + std::to_string(bond) + " outside [1, " + std::to_string(n - 1) + "]");
    }
    if (gx.size() == 1) {
        return gx.front();
    }
    const int offset = chain == Chain::down ? 0 : n - 1;
    return gx[static_cast<std::size_t>(offset + bond - 1)];
}

double LadderParams::gz_at(int site) const {
    if (site < 1 || site > n) {
        throw DomainError("site " + std::to_string(site) + " outside [1, " + std::to_string(n) + "]");
    }
    return gz.size() == 1 ? gz.front() : gz[static_cast<std::size_t>(site - 1)];
}

LadderParams LadderParams::expanded() const {
    validate();
    LadderParams out = *this;
    out.epsilon = expand(epsilon, static_cast<std::size_t>(2 * n));
    out.gx = n > 1 ? expand(gx, static_cast<std::size_t>(2 * (n - 1))) : gx;
    out.gz = expand(gz, static_cast<std::size_t>(n));
    return out;
}

LadderParams LadderParams::with_gx(int bond, Chain chain, double value) const {
    LadderParams out = expanded();
    if (bond < 1 || bond > n - 1) {
        throw DomainError("bond " + std::to_string(bond) + " outside [1, " + std::to_string(n - 1) + "]");
    }
    const int offset = chain == Chain::down ? 0 : n - 1;
    out.gx[static_cast<std::size_t>(offset + bond - 1)] = value;
    return out;
}

void HubbardParams::validate() const {
    if (n < 1) {
        throw DomainError("HubbardParams.n must be >= 1, got " + std::to_string(n));
    }
    if (!std::isfinite(mu) || !std::isfinite(u) || !std::isfinite(t)) {
        throw DomainError("HubbardParams holds a non-finite energy");
    }
}

namespace {

PauliSum ladder_terms(const LadderParams &p, bool flip_flop) {
    p.validate();
    const int n = p.n;
    PauliSum h;
    for (int q = 1; q <= 2 * n; ++q) {
        h += PauliString(0.5 * p.epsilon_at(q), {{q, Pauli::Z}});
    }
    for (int j = 1; j <= n; ++j) {
        h += PauliString(p.gz_at(j), {{j + n, Pauli::Z}, {j, Pauli::Z}});
    }
    for (Chain chain : {Chain::down, Chain::up}) {
        for (int b = 1; b < n; ++b) {
            const double g = p.gx_at(b, chain);
            const int a = linearize({b, chain}, n);
            const int c = linearize({b + 1, chain}, n);
            if (flip_flop) {
                h += PauliString(g, {{a, Pauli::Plus}, {c, Pauli::Minus}});
                h += PauliString(g, {{c, Pauli::Plus}, {a, Pauli::Minus}});
            } else {
                h += PauliString(g, {{a, Pauli::X}, {c, Pauli::X}});
            }
        }
    }
    return h;
}

}  // namespace

PauliSum hqs_terms(const LadderParams &p) {
    return ladder_terms(p, true);
}

PauliSum hqs_xx_terms(const LadderParams &p) {
    return ladder_terms(p, false);
}

PauliSum hfh_terms(const HubbardParams &p) {
    p.validate();
    const int n = p.n;
    PauliSum h;
    for (int mode = 1; mode <= 2 * n; ++mode) {
        h += Complex(-p.mu) * jw::number_terms(mode, n);
    }
    for (int j = 1; j <= n; ++j) {
        const int up = linearize({j, Chain::up}, n);
        const int down = linearize({j, Chain::down}, n);
        h += Complex(p.u) * (jw::number_terms(up, n) * jw::number_terms(down, n));
    }
    for (Chain chain : {Chain::down, Chain::up}) {
        for (int j = 1; j < n; ++j) {
            const int a = linearize({j, chain}, n);
            const int b = linearize({j + 1, chain}, n);
            h += jw::hopping_string(a, b, n).scaled(-p.t);
            h += jw::hopping_string(b, a, n).scaled(-p.t);
        }
    }
    return h;
}

SparseOperator build_hqs(const LadderParams &p) {
    return realize(hqs_terms(p), p.n);
}

SparseOperator build_hqs(const LadderParams &p, const SectorBasis &basis) {
    if (basis.chain_length() != p.n) {
        throw DomainError("sector basis chain length does not match LadderParams.n");
    }
    return realize(hqs_terms(p), basis);
}

SparseOperator build_hqs_xx(const LadderParams &p) {
    return realize(hqs_xx_terms(p), p.n);
}

SparseOperator build_hfh(const HubbardParams &p) {
    return realize(hfh_terms(p), p.n);
}

SparseOperator build_hfh(const HubbardParams &p, const SectorBasis &basis) {
    if (basis.chain_length() != p.n) {
        throw DomainError("sector basis chain length does not match HubbardParams.n");
    }
    return realize(hfh_terms(p), basis);
}

HubbardParams map_params(const LadderParams &p) {
    require_uniform(p, "map_params");
    const double eps = p.epsilon.front();
    const double gz = p.gz.front();
    const double gx = p.gx.empty() ? 0.0 : p.gx.front();
    return {p.n, -eps + 2.0 * gz, 4.0 * gz, -gx};
}

LadderParams unmap_params(const HubbardParams &h) {
    h.validate();
    const double gz = h.u / 4.0;
    return LadderParams::uniform(h.n, 2.0 * gz - h.mu, -h.t, gz);
}

double spectral_offset(const LadderParams &p) {
    require_uniform(p, "spectral_offset");
    return p.n * (p.gz.front() - p.epsilon.front());
}

PauliSum chain_number_terms(int n, Chain chain) {
    PauliSum s;
    for (int j = 1; j <= n; ++j) {
        s += jw::number_terms(linearize({j, chain}, n), n);
    }
    return s;
}

SparseOperator chain_number(int n, Chain chain) {
    return realize(chain_number_terms(n, chain), n);
}

SparseOperator chain_swap(int n) {
    if (n < 1) {
        throw DomainError("chain length must be >= 1, got " + std::to_string(n));
    }
    if (2 * n > kMaxFullRegisterQubits) {
        throw CapacityError("chain_swap exceeds the full-register cap");
    }
    const Index dim = Index{1} << (2 * n);
    const std::uint64_t low = (std::uint64_t{1} << n) - 1;
    std::vector<Eigen::Triplet<Complex, typename SparseOperator::Matrix::StorageIndex>> t;
    t.reserve(static_cast<std::size_t>(dim));
    for (Index b = 0; b < dim; ++b) {
        const auto s = static_cast<std::uint64_t>(b);
        const std::uint64_t swapped = ((s & low) << n) | (s >> n);
        t.emplace_back(static_cast<int>(swapped), static_cast<int>(b), 1.0);
    }
    SparseOperator::Matrix m(dim, dim);
    m.setFromTriplets(t.begin(), t.end());
    return SparseOperator(std::move(m));
}

}  // namespace qladder
