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

#include "qladder/evolution.h"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "qladder/errors.h"

namespace qladder {

namespace {

Complex phi1(Complex z) {
    if (std::abs(z) < 1e-5) {
        return 1.0 + z / 2.0 + z * z / 6.0;
    }
    return (std::exp(z) - 1.0) / z;
}

/// Lanczos basis of the Krylov space of psi, with the tridiagonal
/// eigendecomposition needed to apply exp(-i T tau) and its error estimate.
struct KrylovBasis {
    Eigen::MatrixXcd v;
    Eigen::VectorXd lambda;
    Eigen::MatrixXd s;
    double beta_next = 0.0;
    bool exact = false;
    double norm = 1.0;

    KrylovBasis(const SparseOperator &h, const Amplitudes &psi, int max_dim) {
        const Index dim = h.dimension();
        const Index m_max = std::min<Index>(max_dim, dim);
        norm = psi.norm();
        v.resize(dim, m_max);
        std::vector<double> alpha;
        std::vector<double> beta;
        Amplitudes q = psi / norm;
        const double scale = std::max(1.0, h.norm_inf());
        Index m = 0;
        for (Index j = 0; j < m_max; ++j) {
            v.col(j) = q;
            Amplitudes w = matvec(h, q);
            const double a = (q.adjoint() * w)(0).real();
            alpha.push_back(a);
            w -= a * q;
            if (j > 0) {
                w -= beta.back() * v.col(j - 1);
            }
            for (int pass = 0; pass < 2; ++pass) {
                w.noalias() -= v.leftCols(j + 1) * (v.leftCols(j + 1).adjoint() * w);
            }
            const double b = w.norm();
            m = j + 1;
            if (b <= 1e-12 * scale || m == dim) {
                exact = true;
                beta_next = 0.0;
                break;
            }
            if (m == m_max) {
                beta_next = b;
                break;
            }
            beta.push_back(b);
            q = w / b;
        }
        v.conservativeResize(Eigen::NoChange, m);
        Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(alpha.data(), m);
        Eigen::VectorXd sub =
            m > 1 ? Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(beta.data(), m - 1)) : Eigen::VectorXd();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
        tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
        lambda = tri.eigenvalues();
        s = tri.eigenvectors();
    }

    double error(double tau) const {
        if (exact) {
            return 0.0;
        }
        const Index m = lambda.size();
        Complex acc = 0.0;
        for (Index i = 0; i < m; ++i) {
            acc += s(m - 1, i) * phi1(Complex(0.0, -tau * lambda(i))) * s(0, i);
        }
        return norm * beta_next * tau * std::abs(acc);
    }

    Amplitudes apply(double tau) const {
        const Index m = lambda.size();
        Eigen::VectorXcd coeff(m);
        for (Index i = 0; i < m; ++i) {
            coeff(i) = std::exp(Complex(0.0, -tau * lambda(i))) * s(0, i);
        }
        return norm * (v * (s.cast<Complex>() * coeff));
    }
};

void check_state(const SparseOperator &h, const StateVector &psi0, const char *what) {
    if (!h.is_hermitian()) {
        throw DomainError(std::string(what) + ": operator is not Hermitian");
    }
    if (psi0.dimension() != h.dimension()) {
        throw DomainError(std::string(what) + ": state dimension " + std::to_string(psi0.dimension()) +
                          " does not match operator dimension " + std::to_string(h.dimension()));
    }
}

void check_times(const std::vector<double> &times, const char *what) {
    double prev = 0.0;
    for (double t : times) {
        if (!std::isfinite(t) || t < prev) {
            throw DomainError(std::string(what) + ": times must be finite, non-negative and nondecreasing");
        }
        prev = t;
    }
}

EvolutionResult propagate(const SparseOperator &h, const StateVector &psi0, const std::vector<double> &times,
                          const KrylovOptions &options) {
    EvolutionResult out;
    out.times = times;
    out.krylov_dimension = static_cast<int>(std::min<Index>(options.krylov_dimension, h.dimension()));
    if (times.empty()) {
        return out;
    }
    const double span = times.back();
    const double min_step = options.min_step_fraction * span;

    Amplitudes psi = psi0.amplitudes;
    std::size_t idx = 0;
    while (idx < times.size() && times[idx] <= 0.0) {
        out.states.push_back({psi, psi0.sector});
        ++idx;
    }
    double t = 0.0;
    double tau = span;
    while (idx < times.size()) {
        const KrylovBasis basis(h, psi, options.krylov_dimension);
        const double remaining = span - t;
        const auto accept = [&](double step) { return basis.error(step) <= options.tolerance * step / span; };
        tau = std::min(tau, remaining);
        if (accept(tau)) {
            while (tau < remaining && accept(std::min(2.0 * tau, remaining))) {
                tau = std::min(2.0 * tau, remaining);
            }
        } else {
            while (!accept(tau)) {
                tau /= 2.0;
                if (tau < min_step) {
                    throw PropagationError("krylov_evolve: step size underflow at t = " + std::to_string(t), t);
                }
            }
        }
        const double t_next = tau >= remaining ? span : t + tau;
        while (idx < times.size() && times[idx] <= t_next) {
            out.states.push_back({basis.apply(times[idx] - t), psi0.sector});
            ++idx;
        }
        psi = basis.apply(t_next - t);
        out.error_estimate += basis.error(t_next - t);
        out.min_step = out.steps == 0 ? tau : std::min(out.min_step, tau);
        out.max_step = std::max(out.max_step, tau);
        ++out.steps;
        t = t_next;
    }
    return out;
}

}  // namespace

EvolutionResult krylov_evolve(const SparseOperator &h, const StateVector &psi0, const std::vector<double> &times,
                              const KrylovOptions &options) {
    check_state(h, psi0, "krylov_evolve");
    check_times(times, "krylov_evolve");
    if (std::abs(psi0.norm() - 1.0) > 1e-9) {
        throw DomainError("krylov_evolve: initial state is not normalized (norm " + std::to_string(psi0.norm()) + ")");
    }
    if (options.krylov_dimension < 1 || !(options.tolerance > 0.0)) {
        throw DomainError("krylov_evolve: invalid options");
    }
    return propagate(h, psi0, times, options);
}

std::vector<Complex> observable_series(const EvolutionResult &result, const SparseOperator &o) {
    std::vector<Complex> out;
    out.reserve(result.states.size());
    for (const StateVector &s : result.states) {
        if (s.dimension() != o.dimension()) {
            throw DomainError("observable_series: observable dimension " + std::to_string(o.dimension()) +
                              " does not match state dimension " + std::to_string(s.dimension()));
        }
        out.push_back(expectation(o, s.amplitudes));
    }
    return out;
}

std::vector<double> real_observable_series(const EvolutionResult &result, const SparseOperator &o) {
    if (!o.is_hermitian()) {
        throw DomainError("real_observable_series: observable is not Hermitian");
    }
    std::vector<double> out;
    for (Complex c : observable_series(result, o)) {
        out.push_back(c.real());
    }
    return out;
}

std::vector<Complex> correlation(const SparseOperator &h, const StateVector &psi0, const SparseOperator &a,
                                 const SparseOperator &b, const std::vector<double> &times,
                                 const KrylovOptions &options) {
    if (a.dimension() != h.dimension() || b.dimension() != h.dimension()) {
        throw DomainError("correlation: operator dimensions do not match");
    }
    const EvolutionResult left = krylov_evolve(h, psi0, times, options);
    const Amplitudes phi0 = matvec(b, psi0.amplitudes);
    const double nrm = phi0.norm();
    std::vector<Complex> out(times.size(), Complex(0.0));
    if (nrm == 0.0) {
        return out;
    }
    const EvolutionResult right = krylov_evolve(h, {phi0 / nrm, psi0.sector}, times, options);
    for (std::size_t i = 0; i < times.size(); ++i) {
        const Amplitudes a_phi = matvec(a, right.states[i].amplitudes);
        out[i] = nrm * left.states[i].amplitudes.dot(a_phi);
    }
    return out;
}

}  // namespace qladder
