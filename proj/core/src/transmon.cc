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
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "qladder/circuit.h"
#include "qladder/errors.h"

namespace qladder::circuit {

namespace {

void require_positive(double v, const char *name) {
    if (!std::isfinite(v) || v <= 0.0) {
        throw DomainError(std::string("TransmonSpec.") + name + " must be positive and finite");
    }
}

}  // namespace

std::vector<std::string> TransmonSpec::validate() const {
    require_positive(e_c, "e_c");
    require_positive(e_j, "e_j");
    require_positive(e_l, "e_l");
    if (!std::isfinite(phi_e) || std::cos(phi_e / 2.0) <= 0.0) {
        throw DomainError("TransmonSpec.phi_e: cos(phi_e/2) must be positive (qubit collapse at |phi_e| >= pi)");
    }
    std::vector<std::string> warnings;
    if (e_j / e_c < 20.0) {
        warnings.push_back("E_J/E_C = " + std::to_string(e_j / e_c) + " is below the transmon regime (20)");
    }
    if (e_l / e_j < 10.0) {
        warnings.push_back("E_L/E_J = " + std::to_string(e_l / e_j) + " is below 10; loop mode not frozen out");
    }
    return warnings;
}

double transmon_splitting(const TransmonSpec &t) {
    t.validate();
    return std::sqrt(8.0 * t.e_c * t.e_j * std::cos(t.phi_e / 2.0));
}

double ut_closed_form(double gamma, double phi_e) {
    const double half = phi_e / 2.0;
    const double tn = std::tan(half);
    return gamma * tn * tn * std::sqrt(std::cos(half));
}

std::vector<double> ut_grid(int points) {
    if (points < 1) {
        throw DomainError("ut_grid: points must be >= 1");
    }
    std::vector<double> grid(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        grid[static_cast<std::size_t>(i)] = std::numbers::pi * i / points;
    }
    return grid;
}

std::vector<UtPoint> ut_curve(double gamma, const std::vector<double> &phi_grid) {
    if (!std::isfinite(gamma) || gamma <= 0.0) {
        throw DomainError("ut_curve: gamma must be positive and finite");
    }
    // A fixed reference circuit with sqrt(8 E_C E_J) = 5 whose E_L is chosen
    // to realize gamma; the curve depends on the circuit only through gamma.
    const CouplerSpec coupler{0.5, 0.04};
    TransmonSpec t{0.25, 12.5, coupler.k_m * 5.0 / (coupler.cx_ratio * gamma), 0.0};
    std::vector<UtPoint> out;
    out.reserve(phi_grid.size());
    for (double phi : phi_grid) {
        if (!std::isfinite(phi) || phi < 0.0 || phi >= std::numbers::pi) {
            throw DomainError("ut_curve: phi_e = " + std::to_string(phi) + " outside [0, pi)");
        }
        t.phi_e = phi;
        const double eps = transmon_splitting(t);
        const double gz = gz_from_circuit(t, t, coupler);
        const double gx = gx_from_circuit(eps, coupler);
        const HubbardParams h = map_params(LadderParams::uniform(2, eps, gx, gz));
        out.push_back({phi, std::abs(h.u / h.t), ut_closed_form(gamma, phi)});
    }
    return out;
}

bool accessible(const AccessibleWindow &w, double phi_e, double gz) {
    if (phi_e > w.max_phi_e) {
        return false;
    }
    if (w.linewidth <= 0.0) {
        return true;
    }
    return std::abs(gz) / w.linewidth >= w.min_gz_over_linewidth;
}

DuffingLevels duffing_levels(const TransmonSpec &t, int n_max) {
    if (n_max < 10) {
        throw DomainError("duffing_levels: n_max must be >= 10, got " + std::to_string(n_max));
    }
    const double eps = transmon_splitting(t);
    // (a^dag - a)^4 built four levels wider, so the retained block is exact.
    const int wide = n_max + 4;
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(wide, wide);
    for (int k = 1; k < wide; ++k) {
        const double s = std::sqrt(static_cast<double>(k));
        d(k, k - 1) = s;   // a^dag
        d(k - 1, k) = -s;  // -a
    }
    const Eigen::MatrixXd d2 = d * d;
    const Eigen::MatrixXd d4 = (d2 * d2).topLeftCorner(n_max, n_max);
    Eigen::MatrixXd h = -(t.e_c / 24.0) * d4;
    const double offset = -2.0 * t.e_j * std::cos(t.phi_e / 2.0);
    for (int k = 0; k < n_max; ++k) {
        h(k, k) += eps * (k + 0.5) + offset;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("duffing_levels: eigensolver failed");
    }
    // The quartic term is unbounded below, so a wide truncation can hold
    // spurious deep states; pick the states that live on Fock levels 0, 1, 2.
    const Eigen::MatrixXd &v = solver.eigenvectors();
    double levels[3];
    DuffingLevels out;
    out.epsilon = eps;
    for (int k = 0; k < 3; ++k) {
        Eigen::Index best = 0;
        v.row(k).cwiseAbs().maxCoeff(&best);
        levels[k] = solver.eigenvalues()(best);
        out.top_population = std::max(out.top_population, v(n_max - 1, best) * v(n_max - 1, best));
    }
    if (out.top_population > 1e-8) {
        throw AccuracyError("duffing_levels: top level population " + std::to_string(out.top_population) +
                            " exceeds 1e-8; increase n_max");
    }
    out.e0 = levels[0];
    out.e1 = levels[1];
    out.e2 = levels[2];
    return out;
}

}  // namespace qladder::circuit
