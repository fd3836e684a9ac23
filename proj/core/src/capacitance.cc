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

#include <cmath>
#include <string>

#include "qladder/circuit.h"
#include "qladder/errors.h"

namespace qladder::circuit {

double gx_from_circuit(double epsilon, const CouplerSpec &c) {
    if (!std::isfinite(c.cx_ratio) || c.cx_ratio < 0.0) {
        throw DomainError("CouplerSpec.cx_ratio must be >= 0, got " + std::to_string(c.cx_ratio));
    }
    return 0.25 * c.cx_ratio * epsilon;
}

double gx_bond(double epsilon_j, double epsilon_next, double cx_ratio) {
    if (!std::isfinite(cx_ratio) || cx_ratio < 0.0) {
        throw DomainError("gx_bond: cx_ratio must be >= 0, got " + std::to_string(cx_ratio));
    }
    if (epsilon_j < 0.0 || epsilon_next < 0.0) {
        throw DomainError("gx_bond: qubit energies must be non-negative");
    }
    const double lambda = cx_ratio / 2.0;
    return 0.5 * lambda * std::sqrt(epsilon_j * epsilon_next);
}

double ut_gamma(const TransmonSpec &t, const CouplerSpec &c) {
    t.validate();
    c.validate();
    if (c.cx_ratio <= 0.0) {
        throw DomainError("ut_gamma: cx_ratio must be positive");
    }
    return c.k_m * std::sqrt(8.0 * t.e_c * t.e_j) / (c.cx_ratio * t.e_l);
}

Eigen::MatrixXd capacitance_matrix(int n, double lambda) {
    if (n < 1) {
        throw DomainError("capacitance_matrix: n must be >= 1");
    }
    Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n);
    for (int i = 0; i + 1 < n; ++i) {
        a(i, i + 1) = a(i + 1, i) = lambda;
    }
    return a;
}

double capacitance_matrix_check(int n, double lambda) {
    if (!std::isfinite(lambda) || std::abs(lambda) >= 0.5) {
        throw DomainError("capacitance_matrix_check: |lambda| must be < 1/2, got " + std::to_string(lambda));
    }
    const Eigen::MatrixXd a = capacitance_matrix(n, lambda);
    const Eigen::MatrixXd inv = a.ldlt().solve(Eigen::MatrixXd::Identity(n, n));
    return (inv - capacitance_matrix(n, -lambda)).cwiseAbs().maxCoeff();
}

double capacitance_slope(int n, double lambda_a, double lambda_b) {
    const double ea = capacitance_matrix_check(n, lambda_a);
    const double eb = capacitance_matrix_check(n, lambda_b);
    if (ea <= 0.0 || eb <= 0.0 || lambda_a == lambda_b) {
        throw DomainError("capacitance_slope: needs two distinct nonzero lambdas");
    }
    return std::log(ea / eb) / std::log(std::abs(lambda_a / lambda_b));
}

}  // namespace qladder::circuit
