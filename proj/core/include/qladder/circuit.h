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
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qladder/hamiltonians.h"

namespace qladder::circuit {

/// Tunable transmon. Energies in one consistent unit, phi_e in radians.
struct TransmonSpec {
    double e_c = 0.25;
    double e_j = 12.5;
    double e_l = 1250.0;
    double phi_e = 0.0;

    /// Throws DomainError for non-positive energies or cos(phi_e/2) <= 0;
    /// returns warnings for E_J/E_C < 20 and E_L/E_J < 10.
    std::vector<std::string> validate() const;
};

/// Coupler between two transmons: k_m = M/L and cx_ratio = C^x/C.
struct CouplerSpec {
    double k_m = 0.5;
    double cx_ratio = 0.0;

    /// Throws DomainError unless 0 < k_m < 1 and cx_ratio >= 0; warns above
    /// cx_ratio 0.1.
    std::vector<std::string> validate() const;
};

/// Two chains of transmons with inductive rung couplers and capacitive
/// intra-chain couplers.
struct DeviceChain {
    int n = 1;
    /// 2n entries in linear qubit order (down chain, then up chain).
    std::vector<TransmonSpec> transmons;
    /// n entries; k_m is used.
    std::vector<CouplerSpec> rung_couplers;
    /// 2(n-1) C^x/C ratios: down-chain bonds, then up-chain bonds.
    std::vector<double> chain_couplers;

    static DeviceChain uniform(int n, const TransmonSpec &t, double k_m, double cx_ratio);
    std::vector<std::string> validate() const;
};

/// eps = sqrt(8 E_C E_J cos(phi_e/2)).
double transmon_splitting(const TransmonSpec &t);

/// g^z = -(k_M/16) tan(phi_1e/2) tan(phi_2e/2) eps_1 eps_2 / E_L.
double gz_from_circuit(const TransmonSpec &t1, const TransmonSpec &t2, const CouplerSpec &c);

/// g^x = (1/4)(C^x/C) eps.
double gx_from_circuit(double epsilon, const CouplerSpec &c);
/// Per-bond form g^x_j = (1/2) lambda sqrt(eps_j eps_(j+1)) with lambda = C^x/2C.
double gx_bond(double epsilon_j, double epsilon_next, double cx_ratio);

/// gamma = (C/C^x)(M/L) sqrt(8 E_C E_J) / E_L.
double ut_gamma(const TransmonSpec &t, const CouplerSpec &c);

struct UtPoint {
    double phi_e = 0.0;
    /// |U/t| from the composed pipeline.
    double u_over_t = 0.0;
    /// gamma tan^2(phi_e/2) sqrt(cos(phi_e/2)).
    double closed_form = 0.0;
};

/// |U/t| along phi_grid for a circuit with universal scale gamma, obtained by
/// composing transmon_splitting, gz_from_circuit, gx_from_circuit and
/// map_params with equal fluxes. Requires gamma > 0 and phi in [0, pi).
std::vector<UtPoint> ut_curve(double gamma, const std::vector<double> &phi_grid);
double ut_closed_form(double gamma, double phi_e);
/// phi_i = pi i / points, i = 0..points-1.
std::vector<double> ut_grid(int points);

/// Qualitative accessible window: couplings above a multiple of the
/// linewidth and fluxes below a ceiling.
struct AccessibleWindow {
    double max_phi_e = 3.141592653589793;
    double min_gz_over_linewidth = 1.0;
    double linewidth = 0.0;
};
bool accessible(const AccessibleWindow &w, double phi_e, double gz);

struct DuffingLevels {
    /// Lowest three levels of eps(a^dag a + 1/2) - 2 E_J cos(phi_e/2) - (E_C/24)(a^dag - a)^4.
    double e0 = 0.0;
    double e1 = 0.0;
    double e2 = 0.0;
    double epsilon = 0.0;
    /// Largest weight of the three states on the top retained level.
    double top_population = 0.0;
    double splitting() const {
        return e1 - e0;
    }
    double anharmonicity() const {
        return (e2 - e1) - (e1 - e0);
    }
};

/// Throws DomainError for n_max < 10 and AccuracyError when the top level
/// carries more than 1e-8 of any returned state.
DuffingLevels duffing_levels(const TransmonSpec &t, int n_max = 40);

enum class ZzModel {
    /// Linear coupling of sigma^z to the two oscillator coordinates.
    pre_displacement,
    /// Oscillator coordinates kept inside the cosine, cos(phi_e/2 + phi_+ +- phi_-),
    /// with the qubit cosine projected onto alpha sigma^z + beta.
    full_cosine,
};

struct ZzOptions {
    ZzModel model = ZzModel::pre_displacement;
    /// Levels per oscillator mode; 0 picks 8 (pre_displacement) or 16 (full_cosine).
    int truncation = 0;
    /// Required omega_pm / eps.
    double min_frequency_ratio = 4.0;
};

struct ZzReport {
    double gz_numeric = 0.0;
    /// -2 (g_1+ g_2+ / omega_+ - g_1- g_2- / omega_-).
    double gz_analytic = 0.0;
    /// gz_from_circuit.
    double gz_closed_form = 0.0;
    /// (numeric - analytic) / analytic, signed.
    double relative_error = 0.0;
    double omega_plus = 0.0;
    double omega_minus = 0.0;
    double g1_plus = 0.0;
    double g2_plus = 0.0;
    double g1_minus = 0.0;
    double g2_minus = 0.0;
    int truncation = 0;
    /// |gz(truncation) - gz(2 truncation)|.
    double truncation_change = 0.0;
};

/// Diagonalizes two qubits coupled to the two loop oscillators. The
/// Hamiltonian commutes with both sigma^z, so each of the four qubit
/// configurations is an oscillator block; the four lowest dressed levels give
/// g^z = (E_uu + E_dd - E_ud - E_du)/4.
ZzReport effective_gz_numeric(const TransmonSpec &t1, const TransmonSpec &t2, const CouplerSpec &c,
                              const ZzOptions &options = {});

/// xi_+ = 2/(1+k), xi_- = 4/(1-k^2) - 2/(1+k).
double xi_plus(double k_m);
double xi_minus(double k_m);

/// Tridiagonal A_lambda with unit diagonal and lambda off the diagonal.
Eigen::MatrixXd capacitance_matrix(int n, double lambda);
/// max |A_lambda^-1 - A_-lambda|. Requires |lambda| < 1/2.
double capacitance_matrix_check(int n, double lambda);
/// Log-log slope of capacitance_matrix_check between two lambdas.
double capacitance_slope(int n, double lambda_a, double lambda_b);

struct CouplingFlag {
    std::string name;
    double magnitude = 0.0;
    double ratio = 0.0;
    bool above_linewidth = false;
};

struct FeasibilityReport {
    LadderParams ladder;
    /// Present when every coupling is uniform.
    std::optional<HubbardParams> hubbard;
    double decoherence_rate = 0.0;
    /// Smallest |coupling| / decoherence rate.
    double ratio = 0.0;
    bool feasible = false;
    std::vector<CouplingFlag> couplings;
    std::vector<std::string> warnings;
};

/// Composes the circuit formulas into ladder and Hubbard parameters and rates
/// every coupling against the decoherence rate (same unit as the energies).
/// A coupling is above the linewidth when |g| / rate >= threshold.
FeasibilityReport circuit_to_hubbard(const DeviceChain &d, double decoherence_rate, double threshold = 1.0);

}  // namespace qladder::circuit
