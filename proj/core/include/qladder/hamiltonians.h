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
#include <vector>

#include "qladder/ladder_index.h"
#include "qladder/pauli.h"
#include "qladder/sector.h"
#include "qladder/sparse_operator.h"

namespace qladder {

/// Qubit-ladder parameters. All energies share one caller-chosen unit.
///
/// Each list holds either a single uniform value or one value per element:
///   epsilon: 2n entries in linear qubit order (down chain, then up chain),
///   gx:      2(n-1) entries, bonds (j, j+1) of the down chain then the up chain,
///   gz:      n entries, one per rung.
struct LadderParams {
    int n = 1;
    std::vector<double> epsilon{0.0};
    std::vector<double> gx{0.0};
    std::vector<double> gz{0.0};

    static LadderParams uniform(int n, double epsilon, double gx, double gz);

    /// Throws DomainError for n < 1, wrong list lengths or non-finite values.
    void validate() const;
    /// True when every list holds a single value.
    bool is_uniform() const;
    /// Collapses per-element lists whose entries agree within `tolerance`
    /// (relative to the largest magnitude); nullopt if any list varies.
    std::optional<LadderParams> uniformized(double tolerance = 1e-12) const;
    /// True when both chains carry identical epsilon and gx values.
    bool chains_identical() const;

    double epsilon_at(int qubit) const;
    double gx_at(int bond, Chain chain) const;
    double gz_at(int site) const;

    /// Expands every list to per-element form.
    LadderParams expanded() const;
    /// Sets one bond's exchange in per-element form.
    LadderParams with_gx(int bond, Chain chain, double value) const;
};

struct HubbardParams {
    int n = 1;
    double mu = 0.0;
    double u = 0.0;
    double t = 0.0;

    void validate() const;
};

/// H_QS = sum_q eps_q/2 Z_q + sum_j gz_j Z_(j,up) Z_(j,down)
///        + sum_(bonds, chains) gx (Plus_j Minus_(j+1) + h.c.), open chains.
PauliSum hqs_terms(const LadderParams &p);
/// Same with gx X_j X_(j+1) in place of the flip-flop term.
PauliSum hqs_xx_terms(const LadderParams &p);
/// H_FH = -mu sum n + U sum n_up n_down - t sum (c^dagger c + h.c.), built
/// from Jordan-Wigner operators on the linear mode ordering.
PauliSum hfh_terms(const HubbardParams &p);

SparseOperator build_hqs(const LadderParams &p);
SparseOperator build_hqs(const LadderParams &p, const SectorBasis &basis);
SparseOperator build_hqs_xx(const LadderParams &p);
SparseOperator build_hfh(const HubbardParams &p);
SparseOperator build_hfh(const HubbardParams &p, const SectorBasis &basis);

/// mu = -eps + 2 gz, U = 4 gz, t = -gx. Uniform parameters only.
HubbardParams map_params(const LadderParams &p);
/// gz = U/4, eps = 2 gz - mu, gx = -t.
LadderParams unmap_params(const HubbardParams &h);

/// E0 = n (gz - eps), the constant with spec(H_QS) = spec(H_FH) + E0 under
/// map_params. Uniform parameters only.
double spectral_offset(const LadderParams &p);

/// N_s = sum_j (Z_(j,s) + 1)/2.
PauliSum chain_number_terms(int n, Chain chain);
SparseOperator chain_number(int n, Chain chain);

/// Unitary exchanging the two chains, (j, up) <-> (j, down).
SparseOperator chain_swap(int n);

}  // namespace qladder
