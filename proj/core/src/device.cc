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

#include <algorithm>
#include <cmath>
#include <string>

#include "qladder/circuit.h"
#include "qladder/errors.h"

namespace qladder::circuit {

DeviceChain DeviceChain::uniform(int n, const TransmonSpec &t, double k_m, double cx_ratio) {
    if (n < 1) {
        throw DomainError("DeviceChain.n must be >= 1, got " + std::to_string(n));
    }
    DeviceChain d;
    d.n = n;
    d.transmons.assign(static_cast<std::size_t>(2 * n), t);
    d.rung_couplers.assign(static_cast<std::size_t>(n), CouplerSpec{k_m, 0.0});
    d.chain_couplers.assign(static_cast<std::size_t>(2 * (n - 1)), cx_ratio);
    return d;
}

std::vector<std::string> DeviceChain::validate() const {
    if (n < 1) {
        throw DomainError("DeviceChain.n must be >= 1, got " + std::to_string(n));
    }
    if (transmons.size() != static_cast<std::size_t>(2 * n)) {
        throw DomainError("DeviceChain.transmons must hold 2n = " + std::to_string(2 * n) + " entries");
    }
    if (rung_couplers.size() != static_cast<std::size_t>(n)) {
        throw DomainError("DeviceChain.rung_couplers must hold n = " + std::to_string(n) + " entries");
    }
    if (chain_couplers.size() != static_cast<std::size_t>(2 * (n - 1))) {
        throw DomainError("DeviceChain.chain_couplers must hold 2(n-1) = " + std::to_string(2 * (n - 1)) +
                          " entries");
    }
    std::vector<std::string> warnings;
    for (std::size_t i = 0; i < transmons.size(); ++i) {
        for (auto &w : transmons[i].validate()) {
            warnings.push_back("transmon " + to_string(delinearize(static_cast<int>(i) + 1, n)) + ": " + w);
        }
    }
    for (std::size_t j = 0; j < rung_couplers.size(); ++j) {
        for (auto &w : rung_couplers[j].validate()) {
            warnings.push_back("rung " + std::to_string(j + 1) + ": " + w);
        }
    }
    for (std::size_t b = 0; b < chain_couplers.size(); ++b) {
        for (auto &w : CouplerSpec{0.5, chain_couplers[b]}.validate()) {
            warnings.push_back("bond " + std::to_string(b + 1) + ": " + w);
        }
    }
    return warnings;
}

FeasibilityReport circuit_to_hubbard(const DeviceChain &d, double decoherence_rate, double threshold) {
    if (!std::isfinite(decoherence_rate) || decoherence_rate <= 0.0) {
        throw DomainError("circuit_to_hubbard: decoherence rate must be positive");
    }
    if (!std::isfinite(threshold) || threshold <= 0.0) {
        throw DomainError("circuit_to_hubbard: threshold must be positive");
    }
    FeasibilityReport r;
    r.warnings = d.validate();
    r.decoherence_rate = decoherence_rate;
    const int n = d.n;

    LadderParams p;
    p.n = n;
    p.epsilon.clear();
    for (const auto &t : d.transmons) {
        p.epsilon.push_back(transmon_splitting(t));
    }
    p.gz.clear();
    for (int j = 1; j <= n; ++j) {
        const auto &up = d.transmons[static_cast<std::size_t>(linearize({j, Chain::up}, n) - 1)];
        const auto &down = d.transmons[static_cast<std::size_t>(linearize({j, Chain::down}, n) - 1)];
        p.gz.push_back(gz_from_circuit(up, down, d.rung_couplers[static_cast<std::size_t>(j - 1)]));
    }
    p.gx.clear();
    for (Chain chain : {Chain::down, Chain::up}) {
        for (int b = 1; b < n; ++b) {
            const double e1 = p.epsilon[static_cast<std::size_t>(linearize({b, chain}, n) - 1)];
            const double e2 = p.epsilon[static_cast<std::size_t>(linearize({b + 1, chain}, n) - 1)];
            const std::size_t idx = static_cast<std::size_t>((chain == Chain::down ? 0 : n - 1) + b - 1);
            p.gx.push_back(gx_bond(e1, e2, d.chain_couplers[idx]));
        }
    }
    if (n == 1) {
        p.gx = {0.0};
    }
    p.validate();

    r.ratio = 1e300;
    const auto rate = [&](const std::string &name, double g) {
        CouplingFlag f{name, std::abs(g), std::abs(g) / decoherence_rate, false};
        f.above_linewidth = f.ratio >= threshold;
        r.ratio = std::min(r.ratio, f.ratio);
        r.couplings.push_back(f);
    };
    for (int j = 1; j <= n; ++j) {
        rate("gz[" + std::to_string(j) + "]", p.gz_at(j));
    }
    for (Chain chain : {Chain::down, Chain::up}) {
        for (int b = 1; b < n; ++b) {
            rate("gx[" + std::to_string(b) + to_string(chain).substr(0, 1) + "]", p.gx_at(b, chain));
        }
    }
    r.feasible = std::all_of(r.couplings.begin(), r.couplings.end(),
                             [](const CouplingFlag &f) { return f.above_linewidth; });

    if (auto u = p.uniformized()) {
        r.ladder = *u;
        r.hubbard = map_params(*u);
    } else {
        r.ladder = p;
        r.warnings.push_back("couplings are not uniform; no single Hubbard parameter set");
    }
    return r;
}

}  // namespace qladder::circuit
