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

#include "qladder/protocols.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "qladder/errors.h"
#include "qladder/solver.h"

namespace qladder {

void ExcitationPattern::validate(int n) const {
    std::set<int> seen;
    for (const LadderIndex &idx : excited) {
        const int q = linearize(idx, n);
        if (!seen.insert(q).second) {
            throw DomainError("excitation pattern repeats qubit " + to_string(idx));
        }
    }
}

SectorTag ExcitationPattern::sector() const {
    SectorTag tag;
    for (const LadderIndex &idx : excited) {
        (idx.chain == Chain::up ? tag.n_up : tag.n_down) += 1;
    }
    return tag;
}

std::uint64_t ExcitationPattern::basis_index(int n) const {
    std::uint64_t b = 0;
    for (const LadderIndex &idx : excited) {
        b |= qubit_bit(linearize(idx, n));
    }
    return b;
}

StateVector prepare_product_state(const ExcitationPattern &pattern, int n) {
    pattern.validate(n);
    if (2 * n > kMaxFullRegisterQubits) {
        throw CapacityError("prepare_product_state: 2n = " + std::to_string(2 * n) + " exceeds the full-register cap");
    }
    const Index dim = Index{1} << (2 * n);
    return StateVector::basis_state(dim, static_cast<Index>(pattern.basis_index(n)), pattern.sector());
}

StateVector prepare_product_state(const ExcitationPattern &pattern, const SectorBasis &basis) {
    const int n = basis.chain_length();
    pattern.validate(n);
    if (!(pattern.sector() == basis.tag())) {
        throw DomainError("prepare_product_state: pattern does not lie in the requested sector");
    }
    const auto i = basis.index_of(pattern.basis_index(n));
    return StateVector::basis_state(basis.dimension(), *i, basis.tag());
}

std::vector<double> occupations(const StateVector &state, int n, const SectorBasis *basis) {
    const Index dim = state.dimension();
    if (basis != nullptr ? dim != basis->dimension() : dim != (Index{1} << (2 * n))) {
        throw DomainError("occupations: state dimension does not match the register");
    }
    std::vector<double> occ(static_cast<std::size_t>(2 * n), 0.0);
    for (Index i = 0; i < dim; ++i) {
        const double w = std::norm(state.amplitudes(i));
        if (w == 0.0) {
            continue;
        }
        std::uint64_t s = basis != nullptr ? basis->state(i) : static_cast<std::uint64_t>(i);
        while (s != 0) {
            const int q = std::countr_zero(s);
            occ[static_cast<std::size_t>(q)] += w;
            s &= s - 1;
        }
    }
    return occ;
}

namespace {

std::pair<double, double> chain_totals(const std::vector<double> &occ, int n) {
    double down = 0.0, up = 0.0;
    for (int q = 0; q < n; ++q) {
        down += occ[static_cast<std::size_t>(q)];
        up += occ[static_cast<std::size_t>(q + n)];
    }
    return {up, down};
}

double number_drift(const StateVector &s, int n, const SectorBasis *basis, SectorTag tag) {
    const auto [up, down] = chain_totals(occupations(s, n, basis), n);
    return std::max(std::abs(up - tag.n_up), std::abs(down - tag.n_down));
}

SparseOperator add_diagonal(const SparseOperator &h, const Eigen::VectorXd &d) {
    return h + SparseOperator::diagonal(d);
}

/// Lowest level of a sector Hamiltonian with its (possibly degenerate) eigenvectors.
struct SectorGround {
    double energy = 0.0;
    Eigen::MatrixXcd vectors;
};

SectorGround sector_ground(const SparseOperator &h) {
    SpectrumResult r;
    if (h.dimension() <= 512) {
        r = dense_spectrum(h, true);
    } else {
        LanczosOptions o;
        o.keep_vectors = true;
        r = lanczos_extremal(h, static_cast<int>(std::min<Index>(4, h.dimension())), o);
    }
    SectorGround g;
    g.energy = r.eigenvalues.front();
    const double tol = 1e-9 * std::max(1.0, std::abs(g.energy));
    Index count = 0;
    while (count < static_cast<Index>(r.eigenvalues.size()) &&
           r.eigenvalues[static_cast<std::size_t>(count)] - g.energy <= tol) {
        ++count;
    }
    g.vectors = r.eigenvectors->leftCols(count);
    return g;
}

LadderParams sub_ladder(const LadderParams &q, int first, int last) {
    const int n = q.n;
    LadderParams s;
    s.n = last - first + 1;
    s.epsilon.clear();
    for (Chain chain : {Chain::down, Chain::up}) {
        for (int j = first; j <= last; ++j) {
            s.epsilon.push_back(q.epsilon_at(linearize({j, chain}, n)));
        }
    }
    s.gx.clear();
    for (Chain chain : {Chain::down, Chain::up}) {
        for (int b = first; b < last; ++b) {
            s.gx.push_back(q.gx_at(b, chain));
        }
    }
    if (s.n == 1) {
        s.gx = {0.0};
    }
    s.gz.clear();
    for (int j = first; j <= last; ++j) {
        s.gz.push_back(q.gz_at(j));
    }
    return s;
}

/// Occupation series of the product state under H_QS(p), sector-restricted.
std::vector<std::vector<double>> occupation_series(const LadderParams &p, const ExcitationPattern &pattern,
                                                   const std::vector<double> &times, const KrylovOptions &krylov,
                                                   double *drift) {
    const SectorTag tag = pattern.sector();
    const SectorBasis basis(p.n, tag.n_up, tag.n_down);
    const SparseOperator h = build_hqs(p, basis);
    const EvolutionResult r = krylov_evolve(h, prepare_product_state(pattern, basis), times, krylov);
    std::vector<std::vector<double>> out;
    for (const StateVector &s : r.states) {
        out.push_back(occupations(s, p.n, &basis));
        if (drift != nullptr) {
            *drift = std::max(*drift, number_drift(s, p.n, &basis, tag));
        }
    }
    return out;
}

}  // namespace

AdiabaticReport adiabatic_prepare(const LadderParams &p, const ExcitationPattern &pattern, const RampSpec &ramp,
                                  double overlap_threshold, const KrylovOptions &krylov) {
    p.validate();
    const int n = p.n;
    pattern.validate(n);
    if (!std::isfinite(ramp.duration) || ramp.duration < 0.0) {
        throw DomainError("adiabatic_prepare: ramp duration must be >= 0");
    }
    if (ramp.slices < 1) {
        throw DomainError("adiabatic_prepare: slices must be >= 1");
    }
    std::vector<double> delta(static_cast<std::size_t>(2 * n), 0.0);
    if (ramp.initial_detunings.size() == 1) {
        for (const LadderIndex &idx : pattern.excited) {
            delta[static_cast<std::size_t>(linearize(idx, n) - 1)] = ramp.initial_detunings.front();
        }
    } else if (ramp.initial_detunings.size() == delta.size()) {
        delta = ramp.initial_detunings;
    } else if (!ramp.initial_detunings.empty()) {
        throw DomainError("adiabatic_prepare: initial_detunings must hold 1 or 2n values");
    }
    const auto schedule = ramp.schedule ? ramp.schedule : [](double s) { return 1.0 - s; };

    const SectorTag tag = pattern.sector();
    const SectorBasis basis(n, tag.n_up, tag.n_down);
    const SparseOperator h0 = build_hqs(p, basis);
    Eigen::VectorXd detuning = Eigen::VectorXd::Zero(basis.dimension());
    for (Index i = 0; i < basis.dimension(); ++i) {
        for (int q = 1; q <= 2 * n; ++q) {
            if (basis.state(i) & qubit_bit(q)) {
                detuning(i) += delta[static_cast<std::size_t>(q - 1)];
            }
        }
    }

    const int slices = ramp.slices;

    StateVector psi = prepare_product_state(pattern, basis);
    if (ramp.duration > 0.0) {
        const double dt = ramp.duration / slices;
        for (int k = 0; k < slices; ++k) {
            const double s = (k + 0.5) / slices;
            const SparseOperator hk = add_diagonal(h0, schedule(s) * detuning);
            psi = krylov_evolve(hk, psi, {dt}, krylov).states.back();
        }
    }

    AdiabaticReport r;
    const SectorGround g = sector_ground(h0);
    r.sector_ground_energy = g.energy;
    r.ground_degeneracy = static_cast<int>(g.vectors.cols());
    r.overlap = (g.vectors.adjoint() * psi.amplitudes).squaredNorm();
    r.number_drift = number_drift(psi, n, &basis, tag);
    r.final_state = std::move(psi);
    if (r.overlap < overlap_threshold) {
        r.warning = "final overlap " + std::to_string(r.overlap) + " with the sector ground state is below " +
                    std::to_string(overlap_threshold) + "; ramp too fast (duration " + std::to_string(ramp.duration) +
                    ")";
    }
    return r;
}

SymmetryReport check_symmetries(const LadderParams &p) {
    p.validate();
    const int n = p.n;
    const SparseOperator h = build_hqs(p);
    SymmetryReport r;
    r.commutator_up = commutator(h, chain_number(n, Chain::up)).max_abs();
    r.commutator_down = commutator(h, chain_number(n, Chain::down)).max_abs();
    const SparseOperator s = chain_swap(n);
    r.swap_violation = max_abs_difference(s * h * s, h);
    r.swap_expected = p.chains_identical();

    if (n >= 3) {
        r.translation_sector = {n / 2, n / 2};
        const SectorBasis basis(n, n / 2, n / 2);
        LanczosOptions o;
        o.keep_vectors = true;
        const SpectrumResult g = lanczos_extremal(build_hqs(p, basis), 1, o);
        const StateVector ground{g.eigenvectors->col(0), basis.tag()};
        const std::vector<double> occ = occupations(ground, n, &basis);
        for (Chain chain : {Chain::down, Chain::up}) {
            double lo = 1e300, hi = -1e300;
            for (int j = 2; j <= n - 1; ++j) {
                const double v = occ[static_cast<std::size_t>(linearize({j, chain}, n) - 1)];
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
            r.translation_spread = std::max(r.translation_spread, hi - lo);
        }
    }
    return r;
}

TightBindingReport tight_binding_experiment(const LadderParams &p, const TightBindingOptions &options) {
    const auto uniform = p.uniformized();
    if (!uniform) {
        throw DomainError("tight_binding_experiment requires uniform parameters");
    }
    const int n = p.n;
    const int k = options.k;
    if (k < 0 || k > n) {
        throw DomainError("tight_binding_experiment: k must lie in [0, n]");
    }
    const HubbardParams hub = map_params(*uniform);
    TightBindingReport r;
    r.sector = options.chain == Chain::down ? SectorTag{0, k} : SectorTag{k, 0};
    const SectorBasis basis(n, r.sector.n_up, r.sector.n_down);
    if (basis.dimension() > kMaxDenseDimension) {
        throw CapacityError("tight_binding_experiment: sector too large for dense comparison");
    }
    r.reference_energy = build_hqs(*uniform, SectorBasis(n, 0, 0)).at(0, 0).real();
    r.onsite_energy = -hub.mu;

    const SpectrumResult spec = dense_spectrum(build_hqs(*uniform, basis));
    for (double e : spec.eigenvalues) {
        r.hopping_energies.push_back(e - r.reference_energy - k * r.onsite_energy);
    }
    std::vector<double> single(static_cast<std::size_t>(n));
    for (int m = 1; m <= n; ++m) {
        single[static_cast<std::size_t>(m - 1)] = -2.0 * hub.t * std::cos(m * std::numbers::pi / (n + 1));
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (std::popcount(mask) != k) {
            continue;
        }
        double e = 0.0;
        for (int m = 0; m < n; ++m) {
            if (mask & (std::uint64_t{1} << m)) {
                e += single[static_cast<std::size_t>(m)];
            }
        }
        r.analytic_energies.push_back(e);
    }
    std::sort(r.analytic_energies.begin(), r.analytic_energies.end());
    for (std::size_t i = 0; i < r.analytic_energies.size(); ++i) {
        r.spectral_deviation =
            std::max(r.spectral_deviation, std::abs(r.hopping_energies[i] - r.analytic_energies[i]));
    }

    if (!options.times.empty()) {
        const int j0 = options.initial_site;
        if (j0 < 1 || j0 > n) {
            throw DomainError("tight_binding_experiment: initial_site outside [1, n]");
        }
        const SectorTag one = options.chain == Chain::down ? SectorTag{0, 1} : SectorTag{1, 0};
        const SectorBasis b1(n, one.n_up, one.n_down);
        const ExcitationPattern pattern{{{j0, options.chain}}};
        const EvolutionResult ev =
            krylov_evolve(build_hqs(*uniform, b1), prepare_product_state(pattern, b1), options.times, options.krylov);
        const double shift = r.reference_energy + r.onsite_energy;
        const double norm = std::sqrt(2.0 / (n + 1));
        for (std::size_t ti = 0; ti < options.times.size(); ++ti) {
            const double t = options.times[ti];
            const StateVector &s = ev.states[ti];
            for (int j = 1; j <= n; ++j) {
                Complex oracle = 0.0;
                for (int m = 1; m <= n; ++m) {
                    const double phase = m * std::numbers::pi / (n + 1);
                    oracle += norm * std::sin(phase * j) * norm * std::sin(phase * j0) *
                              std::exp(Complex(0.0, -single[static_cast<std::size_t>(m - 1)] * t));
                }
                oracle *= std::exp(Complex(0.0, -shift * t));
                const Index i = *b1.index_of(qubit_bit(linearize({j, options.chain}, n)));
                r.dynamics_deviation = std::max(r.dynamics_deviation, std::abs(s.amplitudes(i) - oracle));
            }
            r.number_drift = std::max(r.number_drift, number_drift(s, n, &b1, one));
        }
    }
    return r;
}

PartitionReport partition_experiment(const LadderParams &p, int cut_bond, const ExcitationPattern &pattern,
                                     const std::vector<double> &times, const KrylovOptions &krylov) {
    p.validate();
    const int n = p.n;
    if (n < 2 || cut_bond < 1 || cut_bond > n - 1) {
        throw DomainError("partition_experiment: cut_bond must lie in [1, n-1]");
    }
    pattern.validate(n);
    const LadderParams q = p.with_gx(cut_bond, Chain::down, 0.0).with_gx(cut_bond, Chain::up, 0.0);

    PartitionReport r;
    r.cut_bond = cut_bond;
    const auto full = occupation_series(q, pattern, times, krylov, &r.number_drift);

    ExcitationPattern left, right;
    for (const LadderIndex &idx : pattern.excited) {
        if (idx.site <= cut_bond) {
            left.excited.push_back(idx);
        } else {
            right.excited.push_back({idx.site - cut_bond, idx.chain});
        }
    }
    const LadderParams left_params = sub_ladder(q, 1, cut_bond);
    const LadderParams right_params = sub_ladder(q, cut_bond + 1, n);
    const auto left_series = occupation_series(left_params, left, times, krylov, nullptr);
    const auto right_series = occupation_series(right_params, right, times, krylov, nullptr);

    const auto right_total = [&](const std::vector<double> &occ) {
        double s = 0.0;
        for (Chain chain : {Chain::down, Chain::up}) {
            for (int j = cut_bond + 1; j <= n; ++j) {
                s += occ[static_cast<std::size_t>(linearize({j, chain}, n) - 1)];
            }
        }
        return s;
    };
    const double initial = static_cast<double>(right.excited.size());
    for (std::size_t ti = 0; ti < times.size(); ++ti) {
        const auto &occ = full[ti];
        const double leak = std::abs(right_total(occ) - initial);
        r.leakage_series.push_back(leak);
        r.leakage = std::max(r.leakage, leak);
        for (Chain chain : {Chain::down, Chain::up}) {
            for (int j = 1; j <= n; ++j) {
                const double v = occ[static_cast<std::size_t>(linearize({j, chain}, n) - 1)];
                if (j <= cut_bond) {
                    const double w =
                        left_series[ti][static_cast<std::size_t>(linearize({j, chain}, cut_bond) - 1)];
                    r.left_block_deviation = std::max(r.left_block_deviation, std::abs(v - w));
                } else {
                    const int m = n - cut_bond;
                    const double w =
                        right_series[ti][static_cast<std::size_t>(linearize({j - cut_bond, chain}, m) - 1)];
                    r.right_block_deviation = std::max(r.right_block_deviation, std::abs(v - w));
                }
            }
        }
    }
    return r;
}

}  // namespace qladder
