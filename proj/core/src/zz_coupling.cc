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
#include <array>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "qladder/circuit.h"
#include "qladder/errors.h"

namespace qladder::circuit {

std::vector<std::string> CouplerSpec::validate() const {
    if (!std::isfinite(k_m) || k_m <= 0.0 || k_m >= 1.0) {
        throw DomainError("CouplerSpec.k_m must lie in (0, 1), got " + std::to_string(k_m));
    }
    if (!std::isfinite(cx_ratio) || cx_ratio < 0.0) {
        throw DomainError("CouplerSpec.cx_ratio must be >= 0, got " + std::to_string(cx_ratio));
    }
    std::vector<std::string> warnings;
    if (cx_ratio > 0.1) {
        warnings.push_back("C^x/C = " + std::to_string(cx_ratio) + " is not small; weak-coupling formulas degrade");
    }
    return warnings;
}

double xi_plus(double k_m) {
    return 2.0 / (1.0 + k_m);
}

double xi_minus(double k_m) {
    return 4.0 / (1.0 - k_m * k_m) - 2.0 / (1.0 + k_m);
}

double gz_from_circuit(const TransmonSpec &t1, const TransmonSpec &t2, const CouplerSpec &c) {
    t1.validate();
    t2.validate();
    c.validate();
    if (std::abs(t1.e_l - t2.e_l) > 1e-12 * std::max(t1.e_l, t2.e_l)) {
        throw DomainError("gz_from_circuit: the two transmons must share E_L");
    }
    const double e1 = transmon_splitting(t1);
    const double e2 = transmon_splitting(t2);
    return -(c.k_m / 16.0) * std::tan(t1.phi_e / 2.0) * std::tan(t2.phi_e / 2.0) * e1 * e2 / t1.e_l;
}

namespace {

struct Oscillators {
    double omega_plus;
    double omega_minus;
    /// Zero-point amplitude of phi_pm per unit (a + a^dag).
    double zp_plus;
    double zp_minus;
};

Oscillators oscillators(double e_c, double e_l, double k_m) {
    const double xp = xi_plus(k_m);
    const double xm = xi_minus(k_m);
    return {std::sqrt(xp * 2.0 * e_c * e_l), std::sqrt(xm * 2.0 * e_c * e_l),
            std::pow(2.0 * e_c / (xp * e_l), 0.25) / std::sqrt(2.0),
            std::pow(2.0 * e_c / (xm * e_l), 0.25) / std::sqrt(2.0)};
}

/// Qubit projection of cos(phi): alpha sigma^z + beta.
double alpha_z(const TransmonSpec &t) {
    return -0.25 * std::sqrt(2.0 * t.e_c / (t.e_j * std::cos(t.phi_e / 2.0)));
}

double beta_z(const TransmonSpec &t) {
    return 1.0 - 0.5 * std::sqrt(2.0 * t.e_c / (t.e_j * std::cos(t.phi_e / 2.0)));
}

Eigen::MatrixXd position(int levels) {
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(levels, levels);
    for (int k = 1; k < levels; ++k) {
        x(k, k - 1) = x(k - 1, k) = std::sqrt(static_cast<double>(k));
    }
    return x;
}

template <class F>
Eigen::MatrixXd matrix_function(const Eigen::MatrixXd &m, F f) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> s(m);
    return s.eigenvectors() * s.eigenvalues().unaryExpr(f).asDiagonal() * s.eigenvectors().transpose();
}

Eigen::MatrixXd kron(const Eigen::MatrixXd &a, const Eigen::MatrixXd &b) {
    Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

struct Couplings {
    double g1p, g2p, g1m, g2m;
};

/// Block energies for the four qubit configurations (s1, s2) in order
/// (+,+), (+,-), (-,+), (-,-); each entry is the two lowest block levels.
std::array<std::array<double, 2>, 4> block_levels(const TransmonSpec &t1, const TransmonSpec &t2,
                                                  const Oscillators &o, const Couplings &g, ZzModel model,
                                                  int levels) {
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(levels, levels);
    const Eigen::MatrixXd x = position(levels);
    Eigen::MatrixXd number = Eigen::MatrixXd::Zero(levels, levels);
    for (int k = 0; k < levels; ++k) {
        number(k, k) = k;
    }
    const Eigen::MatrixXd h_osc = o.omega_plus * kron(number, id) + o.omega_minus * kron(id, number);
    const Eigen::MatrixXd x_plus = kron(x, id);
    const Eigen::MatrixXd x_minus = kron(id, x);

    Eigen::MatrixXd cos_sum, sin_sum, cos_dif, sin_dif;
    if (model == ZzModel::full_cosine) {
        const auto cp = kron(matrix_function(o.zp_plus * x, [](double v) { return std::cos(v); }), id);
        const auto sp = kron(matrix_function(o.zp_plus * x, [](double v) { return std::sin(v); }), id);
        const auto cm = kron(id, matrix_function(o.zp_minus * x, [](double v) { return std::cos(v); }));
        const auto sm = kron(id, matrix_function(o.zp_minus * x, [](double v) { return std::sin(v); }));
        cos_sum = cp * cm - sp * sm;
        sin_sum = sp * cm + cp * sm;
        cos_dif = cp * cm + sp * sm;
        sin_dif = sp * cm - cp * sm;
    }

    const Eigen::MatrixXd id2 = Eigen::MatrixXd::Identity(levels * levels, levels * levels);
    const double a1 = alpha_z(t1), a2 = alpha_z(t2), b1 = beta_z(t1), b2 = beta_z(t2);
    const double c1 = std::cos(t1.phi_e / 2.0), s1 = std::sin(t1.phi_e / 2.0);
    const double c2 = std::cos(t2.phi_e / 2.0), s2 = std::sin(t2.phi_e / 2.0);
    std::array<std::array<double, 2>, 4> out{};
    const int signs[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    for (int b = 0; b < 4; ++b) {
        const double z1 = signs[b][0];
        const double z2 = signs[b][1];
        Eigen::MatrixXd h = h_osc;
        if (model == ZzModel::pre_displacement) {
            h += (g.g1p * z1 + g.g2p * z2) * x_plus + (g.g1m * z1 - g.g2m * z2) * x_minus;
        } else {
            // -2 E_J cos(phi_i) [cos(phi_ie/2 + y_i) - cos(phi_ie/2)], y_1 = phi_+ + phi_-,
            // y_2 = phi_+ - phi_-; the subtracted part is the bare qubit term.
            const double q1 = a1 * z1 + b1;
            const double q2 = a2 * z2 + b2;
            h -= 2.0 * t1.e_j * q1 * (c1 * cos_sum - s1 * sin_sum - c1 * id2);
            h -= 2.0 * t2.e_j * q2 * (c2 * cos_dif - s2 * sin_dif - c2 * id2);
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success) {
            throw NumericalError("effective_gz_numeric: eigensolver failed");
        }
        out[static_cast<std::size_t>(b)] = {solver.eigenvalues()(0), solver.eigenvalues()(1)};
    }
    return out;
}

double extract_gz(const TransmonSpec &t1, const TransmonSpec &t2, const Oscillators &o, const Couplings &g,
                  ZzModel model, int levels) {
    const auto blocks = block_levels(t1, t2, o, g, model, levels);
    const double e1 = transmon_splitting(t1);
    const double e2 = transmon_splitting(t2);
    const int signs[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    std::array<double, 4> ground{};
    double highest_ground = -1e300;
    double lowest_excited = 1e300;
    for (int b = 0; b < 4; ++b) {
        const double qubit = 0.5 * e1 * signs[b][0] + 0.5 * e2 * signs[b][1];
        ground[static_cast<std::size_t>(b)] = qubit + blocks[static_cast<std::size_t>(b)][0];
        highest_ground = std::max(highest_ground, ground[static_cast<std::size_t>(b)]);
        lowest_excited = std::min(lowest_excited, qubit + blocks[static_cast<std::size_t>(b)][1]);
    }
    // The four lowest dressed levels must be the four block ground states.
    if (!(highest_ground < lowest_excited)) {
        throw NumericalError("effective_gz_numeric: level identification ambiguous (an oscillator excitation lies "
                             "among the four lowest dressed levels)");
    }
    return (ground[0] + ground[3] - ground[1] - ground[2]) / 4.0;
}

}  // namespace

ZzReport effective_gz_numeric(const TransmonSpec &t1, const TransmonSpec &t2, const CouplerSpec &c,
                              const ZzOptions &options) {
    t1.validate();
    t2.validate();
    c.validate();
    if (t1.e_c != t2.e_c || t1.e_j != t2.e_j || t1.e_l != t2.e_l) {
        throw DomainError("effective_gz_numeric: transmons must share E_C, E_J and E_L");
    }
    const int levels =
        options.truncation > 0 ? options.truncation : (options.model == ZzModel::pre_displacement ? 8 : 16);
    if (levels < 2) {
        throw DomainError("effective_gz_numeric: truncation must be >= 2");
    }
    const Oscillators o = oscillators(t1.e_c, t1.e_l, c.k_m);
    const double eps_max = std::max(transmon_splitting(t1), transmon_splitting(t2));
    if (std::min(o.omega_plus, o.omega_minus) < options.min_frequency_ratio * eps_max) {
        throw DomainError("effective_gz_numeric: oscillator frequency " +
                          std::to_string(std::min(o.omega_plus, o.omega_minus)) + " is not well above eps " +
                          std::to_string(eps_max) + "; increase E_L");
    }

    const double a1 = alpha_z(t1);
    const double a2 = alpha_z(t2);
    const double s1 = std::sin(t1.phi_e / 2.0);
    const double s2 = std::sin(t2.phi_e / 2.0);
    const Couplings g{2.0 * t1.e_j * a1 * s1 * o.zp_plus, 2.0 * t2.e_j * a2 * s2 * o.zp_plus,
                      2.0 * t1.e_j * a1 * s1 * o.zp_minus, 2.0 * t2.e_j * a2 * s2 * o.zp_minus};

    ZzReport r;
    r.omega_plus = o.omega_plus;
    r.omega_minus = o.omega_minus;
    r.g1_plus = g.g1p;
    r.g2_plus = g.g2p;
    r.g1_minus = g.g1m;
    r.g2_minus = g.g2m;
    r.gz_analytic = -2.0 * (g.g1p * g.g2p / o.omega_plus - g.g1m * g.g2m / o.omega_minus);
    r.gz_closed_form = gz_from_circuit(t1, t2, c);
    r.truncation = levels;
    r.gz_numeric = extract_gz(t1, t2, o, g, options.model, levels);
    const double doubled = extract_gz(t1, t2, o, g, options.model, 2 * levels);
    r.truncation_change = std::abs(doubled - r.gz_numeric);
    if (r.truncation_change > 1e-9 * std::abs(doubled) + 1e-13 * eps_max) {
        throw AccuracyError("effective_gz_numeric: truncation " + std::to_string(levels) +
                            " not converged (change " + std::to_string(r.truncation_change) + " on doubling)");
    }
    r.relative_error = r.gz_analytic != 0.0 ? (r.gz_numeric - r.gz_analytic) / r.gz_analytic : 0.0;
    return r;
}

}  // namespace qladder::circuit
