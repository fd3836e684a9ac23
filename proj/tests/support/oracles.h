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

// Independent reference constructions for the tests. Nothing here calls the
// library's operator builders: matrices are assembled from explicit Kronecker
// products or from fermionic occupation-number rules.

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace oracle {

using C = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Basis order per qubit: index 0 = ground, 1 = excited; sigma^z |e> = +|e>.
inline Mat identity2() {
    return Mat::Identity(2, 2);
}
inline Mat sx() {
    Mat m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}
inline Mat sy() {
    Mat m(2, 2);
    m << 0, C(0, 1), C(0, -1), 0;
    return m;
}
inline Mat sz() {
    Mat m(2, 2);
    m << -1, 0, 0, 1;
    return m;
}
inline Mat raise() {
    Mat m = Mat::Zero(2, 2);
    m(1, 0) = 1;
    return m;
}
inline Mat lower() {
    Mat m = Mat::Zero(2, 2);
    m(0, 1) = 1;
    return m;
}

inline Mat kron(const Mat &a, const Mat &b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

/// Single-qubit matrix on qubit q (1-based, qubit 1 least significant) of a
/// register of `qubits` qubits.
inline Mat embed(const Mat &op, int q, int qubits) {
    Mat out = Mat::Identity(1, 1);
    for (int k = qubits; k >= 1; --k) {
        out = kron(out, k == q ? op : identity2());
    }
    return out;
}

/// Ladder Hamiltonian from Kronecker products; linear qubit (j, down) = j,
/// (j, up) = j + n. Uniform parameters; `xx` selects sigma^x sigma^x coupling.
inline Mat hqs(int n, double eps, double gx, double gz, bool xx = false) {
    const int q = 2 * n;
    const Eigen::Index dim = Eigen::Index{1} << q;
    Mat h = Mat::Zero(dim, dim);
    for (int k = 1; k <= q; ++k) {
        h += 0.5 * eps * embed(sz(), k, q);
    }
    for (int j = 1; j <= n; ++j) {
        h += gz * embed(sz(), j, q) * embed(sz(), j + n, q);
    }
    for (int chain = 0; chain < 2; ++chain) {
        for (int j = 1; j < n; ++j) {
            const int a = j + chain * n;
            const int b = a + 1;
            if (xx) {
                h += gx * embed(sx(), a, q) * embed(sx(), b, q);
            } else {
                h += gx * (embed(raise(), a, q) * embed(lower(), b, q) + embed(raise(), b, q) * embed(lower(), a, q));
            }
        }
    }
    return h;
}

/// Fermionic sign for applying c_mode to occupation bits `s` (modes 1-based,
/// mode m is bit m-1): (-1)^(occupied modes below m).
inline int fermion_sign(std::uint64_t s, int mode) {
    const std::uint64_t below = (std::uint64_t{1} << (mode - 1)) - 1;
    return (std::popcount(s & below) % 2 == 0) ? 1 : -1;
}

/// Hubbard Hamiltonian assembled in the occupation-number basis.
inline Mat hfh(int n, double mu, double u, double t) {
    const int modes = 2 * n;
    const Eigen::Index dim = Eigen::Index{1} << modes;
    Mat h = Mat::Zero(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        const auto s = static_cast<std::uint64_t>(col);
        double diag = -mu * std::popcount(s);
        for (int j = 1; j <= n; ++j) {
            const bool dn = s & (std::uint64_t{1} << (j - 1));
            const bool up = s & (std::uint64_t{1} << (j - 1 + n));
            diag += (dn && up) ? u : 0.0;
        }
        h(col, col) += diag;
        for (int chain = 0; chain < 2; ++chain) {
            for (int j = 1; j < n; ++j) {
                const int m1 = j + chain * n;
                const int m2 = m1 + 1;
                for (const auto &[a, b] : {std::pair{m1, m2}, std::pair{m2, m1}}) {
                    // c^dag_a c_b
                    const std::uint64_t bb = std::uint64_t{1} << (b - 1);
                    const std::uint64_t ab = std::uint64_t{1} << (a - 1);
                    if (!(s & bb)) {
                        continue;
                    }
                    const std::uint64_t mid = s & ~bb;
                    if (mid & ab) {
                        continue;
                    }
                    const int sign = fermion_sign(s, b) * fermion_sign(mid, a);
                    h(static_cast<Eigen::Index>(mid | ab), col) += -t * sign;
                }
            }
        }
    }
    return h;
}

inline std::vector<double> eigenvalues(const Mat &h) {
    Eigen::SelfAdjointEigenSolver<Mat> s(h, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd &v = s.eigenvalues();
    return {v.data(), v.data() + v.size()};
}

inline Mat expm_hermitian(const Mat &h, double t) {
    Eigen::SelfAdjointEigenSolver<Mat> s(h);
    Vec phases(s.eigenvalues().size());
    for (Eigen::Index i = 0; i < phases.size(); ++i) {
        phases(i) = std::exp(C(0, -s.eigenvalues()(i) * t));
    }
    return s.eigenvectors() * phases.asDiagonal() * s.eigenvectors().adjoint();
}

/// Open tight-binding chain propagator <j| exp(-i H t) |j0> for hopping
/// amplitude `hop` on each bond: H = hop sum (|j><j+1| + h.c.).
inline C chain_propagator(int n, double hop, int j, int j0, double t) {
    C acc = 0.0;
    for (int m = 1; m <= n; ++m) {
        const double k = m * std::numbers::pi / (n + 1);
        const double phi = std::sqrt(2.0 / (n + 1));
        acc += phi * std::sin(k * j) * phi * std::sin(k * j0) * std::exp(C(0, -2.0 * hop * std::cos(k) * t));
    }
    return acc;
}

/// Closed-form inverse of the 2x2 matrix [[1, l], [l, 1]].
inline Eigen::Matrix2d inverse_2x2(double l) {
    Eigen::Matrix2d m;
    m << 1, -l, -l, 1;
    return m / (1 - l * l);
}

inline double max_abs(const Mat &m) {
    return m.cwiseAbs().maxCoeff();
}

}  // namespace oracle
