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

#include <Eigen/Eigenvalues>

#include "qladder/errors.h"
#include "qladder/random.h"
#include "qladder/solver.h"

namespace qladder {

namespace {

struct RunOutcome {
    std::vector<double> values;
    std::vector<Amplitudes> vectors;
};

Amplitudes random_vector(Index dim, Rng &rng) {
    Amplitudes v(dim);
    for (Index i = 0; i < dim; ++i) {
        const double re = rng.normal();
        const double im = rng.normal();
        v(i) = Complex(re, im);
    }
    return v;
}

void orthogonalize(Amplitudes &w, const Eigen::MatrixXcd &basis, Index cols) {
    if (cols == 0) {
        return;
    }
    const auto b = basis.leftCols(cols);
    for (int pass = 0; pass < 2; ++pass) {
        w.noalias() -= b * (b.adjoint() * w);
    }
}

class LanczosRunner {
   public:
    LanczosRunner(const SparseOperator &h, const LanczosOptions &options, LanczosDiagnostics *diagnostics)
        : h_(h),
          options_(options),
          diagnostics_(diagnostics),
          rng_(options.seed),
          scale_(std::max(1.0, h.norm_inf())) {
    }

    /// Lowest converged pairs of H restricted to the complement of `locked`.
    RunOutcome run(const Eigen::MatrixXcd &locked, Index n_locked, bool record_history) {
        const Index dim = h_.dimension();
        const Index complement = dim - n_locked;
        RunOutcome out;
        if (complement <= 0) {
            return out;
        }
        const Index m_max = std::min<Index>(options_.max_iterations, complement);
        Eigen::MatrixXcd v_basis(dim, m_max);
        std::vector<double> alpha;
        std::vector<double> beta;

        Amplitudes v = random_vector(dim, rng_);
        orthogonalize(v, locked, n_locked);
        v.normalize();
        if (diagnostics_ != nullptr) {
            ++diagnostics_->runs;
        }

        double last_residual = 0.0;
        for (Index j = 0; j < m_max; ++j) {
            v_basis.col(j) = v;
            Amplitudes w = matvec(h_, v);
            const double a = (v.adjoint() * w)(0).real();
            alpha.push_back(a);
            w -= a * v;
            if (j > 0) {
                w -= beta.back() * v_basis.col(j - 1);
            }
            orthogonalize(w, v_basis, j + 1);
            orthogonalize(w, locked, n_locked);
            const double b = w.norm();
            if (diagnostics_ != nullptr) {
                ++diagnostics_->total_iterations;
            }

            const Index m = j + 1;
            Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(alpha.data(), m);
            Eigen::VectorXd sub = m > 1 ? Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(beta.data(), m - 1))
                                        : Eigen::VectorXd();
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
            tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
            const Eigen::VectorXd &theta = tri.eigenvalues();
            const Eigen::MatrixXd &s = tri.eigenvectors();
            if (record_history && diagnostics_ != nullptr) {
                diagnostics_->lowest_history.push_back(theta(0));
            }

            const bool invariant = b <= 1e-12 * scale_ || m == complement;
            const auto estimate = [&](Index i) { return std::abs(b * s(m - 1, i)); };
            last_residual = estimate(0);
            if (invariant || estimate(0) <= options_.tolerance * std::max(1.0, std::abs(theta(0)))) {
                // Lock every pair converged contiguously from the bottom.
                for (Index i = 0; i < m; ++i) {
                    if (!invariant && estimate(i) > options_.tolerance * std::max(1.0, std::abs(theta(i)))) {
                        break;
                    }
                    Amplitudes y = v_basis.leftCols(m) * s.col(i).cast<Complex>();
                    y.normalize();
                    const double r = (matvec(h_, y) - theta(i) * y).norm();
                    if (r > kResidualTolerance * scale_) {
                        break;
                    }
                    out.values.push_back(theta(i));
                    out.vectors.push_back(std::move(y));
                }
                if (!out.values.empty()) {
                    if (invariant && diagnostics_ != nullptr && m < complement) {
                        ++diagnostics_->restarts;
                    }
                    return out;
                }
                if (invariant) {
                    break;
                }
            }
            beta.push_back(b);
            v = w / b;
        }
        throw ConvergenceError("lanczos_extremal: no converged Ritz pair after " + std::to_string(m_max) +
                               " iterations (dimension " + std::to_string(dim) + ", locked " +
                               std::to_string(n_locked) + ", residual estimate " + std::to_string(last_residual) +
                               ")");
    }

    double scale() const {
        return scale_;
    }

   private:
    const SparseOperator &h_;
    LanczosOptions options_;
    LanczosDiagnostics *diagnostics_;
    Rng rng_;
    double scale_;
};

}  // namespace

SpectrumResult lanczos_extremal(const SparseOperator &h, int k, const LanczosOptions &options,
                                LanczosDiagnostics *diagnostics) {
    const Index dim = h.dimension();
    if (k < 1 || k > dim) {
        throw DomainError("lanczos_extremal: k = " + std::to_string(k) + " outside [1, " + std::to_string(dim) + "]");
    }
    if (!h.is_hermitian()) {
        throw DomainError("lanczos_extremal: operator is not Hermitian");
    }
    if (options.max_iterations < 1) {
        throw DomainError("lanczos_extremal: max_iterations must be >= 1");
    }

    LanczosRunner runner(h, options, diagnostics);
    Eigen::MatrixXcd locked(dim, 0);
    std::vector<double> values;
    bool first = true;
    while (true) {
        // Once k pairs are locked, keep going only while the complement still
        // holds a level below the current k-th lowest.
        double kth = 0.0;
        if (static_cast<int>(values.size()) >= k) {
            std::vector<double> sorted = values;
            std::nth_element(sorted.begin(), sorted.begin() + (k - 1), sorted.end());
            kth = sorted[static_cast<std::size_t>(k - 1)];
        }
        if (locked.cols() == dim) {
            break;
        }
        RunOutcome run = runner.run(locked, locked.cols(), first);
        first = false;
        if (static_cast<int>(values.size()) >= k) {
            if (run.values.front() >= kth - 1e-9 * runner.scale()) {
                break;
            }
            run.values.resize(1);
            run.vectors.resize(1);
        }
        const Index old = locked.cols();
        locked.conservativeResize(Eigen::NoChange, old + static_cast<Index>(run.vectors.size()));
        for (std::size_t i = 0; i < run.vectors.size(); ++i) {
            locked.col(old + static_cast<Index>(i)) = run.vectors[i];
            values.push_back(run.values[i]);
        }
    }

    std::vector<Index> order(values.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = static_cast<Index>(i);
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](Index a, Index b) { return values[static_cast<std::size_t>(a)] < values[static_cast<std::size_t>(b)]; });

    SpectrumResult out;
    Eigen::MatrixXcd vectors(dim, k);
    for (int i = 0; i < k; ++i) {
        const Index src = order[static_cast<std::size_t>(i)];
        out.eigenvalues.push_back(values[static_cast<std::size_t>(src)]);
        vectors.col(i) = locked.col(src);
        const double r = (matvec(h, vectors.col(i)) - out.eigenvalues.back() * vectors.col(i)).norm();
        out.max_residual = std::max(out.max_residual, r);
    }
    if (options.keep_vectors) {
        out.eigenvectors = std::move(vectors);
    }
    return out;
}

SpectrumResult lanczos_extremal(const SparseOperator &h, int k, const SectorBasis &sector,
                                const LanczosOptions &options, LanczosDiagnostics *diagnostics) {
    SpectrumResult out = lanczos_extremal(project(h, sector), k, options, diagnostics);
    out.sector = sector.tag();
    return out;
}

std::pair<double, Amplitudes> ground_state(const SparseOperator &h, const LanczosOptions &options) {
    LanczosOptions o = options;
    o.keep_vectors = true;
    SpectrumResult r = lanczos_extremal(h, 1, o);
    return {r.eigenvalues.front(), r.eigenvectors->col(0)};
}

}  // namespace qladder
