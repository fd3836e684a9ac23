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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qladder/evolution.h"
#include "qladder/hamiltonians.h"
#include "qladder/sector.h"
#include "qladder/state_vector.h"

namespace qladder {

struct ExcitationPattern {
    std::vector<LadderIndex> excited;

    /// Throws DomainError for out-of-range or repeated indices.
    void validate(int n) const;
    SectorTag sector() const;
    /// Full-register basis index with the listed qubits set.
    std::uint64_t basis_index(int n) const;
};

/// Product state on the full register, tagged with its sector.
StateVector prepare_product_state(const ExcitationPattern &pattern, int n);
/// Same state expressed in a sector basis; the basis must match the pattern.
StateVector prepare_product_state(const ExcitationPattern &pattern, const SectorBasis &basis);

/// <n_q> = <(Z_q + 1)/2> for every qubit, in linear order. The state lives
/// either on the full register (basis == nullptr) or in `basis`.
std::vector<double> occupations(const StateVector &state, int n, const SectorBasis *basis = nullptr);

// -- adiabatic preparation ---------------------------------------------------

struct RampSpec {
    double duration = 0.0;
    /// Detuning delta_q added as delta_q n_q at the start of the ramp; one
    /// entry per qubit (linear order) or a single value applied to every
    /// excited qubit of the pattern.
    std::vector<double> initial_detunings;
    /// Fraction of the initial detuning left at s = t/duration; linear by default.
    std::function<double(double)> schedule;
    /// Number of piecewise-constant slices.
    int slices = 200;
};

struct AdiabaticReport {
    StateVector final_state;
    /// Weight of the final state in the lowest level (or degenerate level) of
    /// the target sector.
    double overlap = 0.0;
    double sector_ground_energy = 0.0;
    int ground_degeneracy = 1;
    double number_drift = 0.0;
    std::optional<std::string> warning;
};

AdiabaticReport adiabatic_prepare(const LadderParams &p, const ExcitationPattern &pattern, const RampSpec &ramp,
                                  double overlap_threshold = 0.99, const KrylovOptions &krylov = {});

// -- symmetry report ----------------------------------------------------------

struct SymmetryReport {
    double commutator_up = 0.0;
    double commutator_down = 0.0;
    /// max |S H S - H| for the chain swap S.
    double swap_violation = 0.0;
    /// True when epsilon and g^x agree between the chains, so the swap is a symmetry.
    bool swap_expected = false;
    /// Spread of bulk <n_(j,s)> in the lowest state of the balanced sector;
    /// finite-size effect, reported only.
    double translation_spread = 0.0;
    SectorTag translation_sector;
};

SymmetryReport check_symmetries(const LadderParams &p);

// -- tight-binding limit -------------------------------------------------------

struct TightBindingOptions {
    /// Excitations in the chosen chain.
    int k = 1;
    Chain chain = Chain::down;
    /// Site of the localized excitation for the dynamics check.
    int initial_site = 1;
    std::vector<double> times;
    KrylovOptions krylov;
};

struct TightBindingReport {
    SectorTag sector;
    /// Energy of the empty sector, used as reference.
    double reference_energy = 0.0;
    /// Per-excitation on-site energy -mu = eps - 2 g^z.
    double onsite_energy = 0.0;
    /// Sector spectrum minus reference and k times the on-site energy.
    std::vector<double> hopping_energies;
    /// Sums of k distinct values -2t cos(m pi/(n+1)), ascending.
    std::vector<double> analytic_energies;
    double spectral_deviation = 0.0;
    /// max over times and sites of |amplitude - mode-sum propagator|.
    double dynamics_deviation = 0.0;
    double number_drift = 0.0;
};

TightBindingReport tight_binding_experiment(const LadderParams &p, const TightBindingOptions &options = {});

// -- partition ------------------------------------------------------------------

struct PartitionReport {
    int cut_bond = 0;
    /// max over times of |N_right(t) - N_right(0)|; for a state left of the
    /// cut this is the excitation weight that crossed it.
    double leakage = 0.0;
    std::vector<double> leakage_series;
    /// max deviation of <n_q>(t) from standalone simulators of either block.
    double left_block_deviation = 0.0;
    double right_block_deviation = 0.0;
    double number_drift = 0.0;
};

/// Sets g^x = 0 on `cut_bond` in both chains, evolves the product state and
/// compares each side with an independently built smaller ladder.
PartitionReport partition_experiment(const LadderParams &p, int cut_bond, const ExcitationPattern &pattern,
                                     const std::vector<double> &times, const KrylovOptions &krylov = {});

// -- disorder -------------------------------------------------------------------

enum class Distribution { uniform, gaussian };

struct DisorderSpec {
    /// Relative standard deviations.
    double epsilon_spread = 0.0;
    double gx_spread = 0.0;
    double gz_spread = 0.0;
    std::uint64_t seed = 1;
    Distribution distribution = Distribution::gaussian;

    void validate() const;
};

/// Per-element parameters drawn from `d`; every value is base * (1 + spread xi)
/// with xi of unit variance.
LadderParams sample_disorder(const LadderParams &base, const DisorderSpec &d, std::uint64_t sample);

enum class DisorderExperiment { spectrum, dynamics };

struct DisorderObservable {
    DisorderExperiment kind = DisorderExperiment::spectrum;
    /// Initial state (dynamics) and target sector (both kinds).
    ExcitationPattern pattern;
    /// Levels compared in the spectrum experiment.
    int levels = 4;
    std::vector<double> times;
    KrylovOptions krylov;
};

struct DisorderSample {
    std::uint64_t index = 0;
    /// max |value - clean value| over levels, or over times and qubits.
    double deviation = 0.0;
    double conservation_violation = 0.0;
};

struct DisorderTable {
    std::vector<DisorderSample> samples;
    double mean_deviation = 0.0;
    double std_deviation = 0.0;
    double max_conservation_violation = 0.0;
    /// "commutator" when the full-register commutators were formed, else "structural".
    std::string conservation_method;
};

/// Runs `samples` seeded realizations on up to `threads` workers (0 = hardware
/// concurrency); results do not depend on the worker count.
DisorderTable disorder_sweep(const LadderParams &base, const DisorderSpec &d, const DisorderObservable &obs,
                             int samples, int threads = 0);

/// Largest chain-number change of any Pauli term; 0 when every term of H
/// preserves both chain numbers.
double structural_number_violation(const PauliSum &h, int n);

}  // namespace qladder
