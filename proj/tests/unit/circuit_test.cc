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
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "oracles.h"
#include "qladder/circuit.h"
#include "qladder/errors.h"

namespace qladder::circuit {
namespace {

constexpr double kPi = std::numbers::pi;

TransmonSpec transmon(double e_c, double e_j, double e_l, double phi) {
    return {e_c, e_j, e_l, phi};
}

TEST(Splitting, Examples) {
    EXPECT_DOUBLE_EQ(transmon_splitting(transmon(0.25, 12.5, 1250, 0.0)), 5.0);
    EXPECT_NEAR(transmon_splitting(transmon(0.2, 10, 1250, kPi / 2)), 4.0 * std::pow(2.0, -0.25), 1e-14);
    EXPECT_LT(transmon_splitting(transmon(0.25, 12.5, 1250, kPi - 1e-9)), 1e-3);
}

TEST(Splitting, MonotoneDecreasingInFlux) {
    double previous = transmon_splitting(transmon(0.25, 12.5, 1250, 0.0));
    for (int i = 1; i < 1000; ++i) {
        const double e = transmon_splitting(transmon(0.25, 12.5, 1250, kPi * i / 1000));
        EXPECT_LT(e, previous);
        previous = e;
    }
}

TEST(Splitting, CollapseAndBadEnergiesAreDomainErrors) {
    EXPECT_THROW(transmon_splitting(transmon(0.25, 12.5, 1250, 3.5)), DomainError);
    EXPECT_THROW(transmon_splitting(transmon(-0.25, 12.5, 1250, 0.0)), DomainError);
    EXPECT_THROW(transmon_splitting(transmon(0.25, 0.0, 1250, 0.0)), DomainError);
}

TEST(TransmonSpec, RegimeWarnings) {
    EXPECT_TRUE(transmon(0.25, 12.5, 1250, 0.0).validate().empty());
    EXPECT_EQ(transmon(1.0, 12.5, 1250, 0.0).validate().size(), 1u);
    EXPECT_EQ(transmon(0.25, 12.5, 50, 0.0).validate().size(), 1u);
}

TEST(Gz, Examples) {
    const CouplerSpec c{0.1, 0.0};
    EXPECT_EQ(gz_from_circuit(transmon(0.25, 12.5, 1250, 0.0), transmon(0.25, 12.5, 1250, 0.0), c), 0.0);

    const TransmonSpec t = transmon(0.25, 12.5, 1250, kPi / 2);
    const double eps = transmon_splitting(t);
    EXPECT_NEAR(gz_from_circuit(t, t, c), -(0.1 / 16) * eps * eps / 1250, 1e-15);
}

TEST(Gz, OddInEachFlux) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> phi(-3.0, 3.0);
    for (int trial = 0; trial < 50; ++trial) {
        const TransmonSpec a = transmon(0.25, 12.5, 1250, phi(rng));
        const TransmonSpec b = transmon(0.25, 12.5, 1250, phi(rng));
        TransmonSpec b_neg = b;
        b_neg.phi_e = -b.phi_e;
        TransmonSpec a_neg = a;
        a_neg.phi_e = -a.phi_e;
        const CouplerSpec c{0.4, 0.0};
        EXPECT_NEAR(gz_from_circuit(a, b_neg, c), -gz_from_circuit(a, b, c), 1e-15);
        EXPECT_NEAR(gz_from_circuit(a_neg, b, c), -gz_from_circuit(a, b, c), 1e-15);
    }
}

TEST(Gz, InverseInInductiveEnergy) {
    const CouplerSpec c{0.5, 0.0};
    const TransmonSpec t = transmon(0.25, 12.5, 1250, 1.0);
    const TransmonSpec t2 = transmon(0.25, 12.5, 2500, 1.0);
    EXPECT_NEAR(gz_from_circuit(t2, t2, c) / gz_from_circuit(t, t, c), 0.5, 1e-14);
}

TEST(Gz, MismatchedInductanceIsDomainError) {
    EXPECT_THROW(gz_from_circuit(transmon(0.25, 12.5, 1250, 1.0), transmon(0.25, 12.5, 1000, 1.0), {0.5, 0.0}),
                 DomainError);
}

TEST(Gx, ExamplesAndBondForm) {
    EXPECT_EQ(gx_from_circuit(5.0, {0.5, 0.0}), 0.0);
    EXPECT_NEAR(gx_from_circuit(5.0, {0.5, 0.04}), 0.05, 1e-16);
    for (double eps : {0.5, 3.0, 7.25}) {
        EXPECT_NEAR(gx_bond(eps, eps, 0.04), gx_from_circuit(eps, {0.5, 0.04}), 1e-15);
    }
    EXPECT_NEAR(gx_bond(4.0, 9.0, 0.04), 0.5 * 0.02 * 6.0, 1e-16);
}

TEST(Gx, LinearInCouplingRatio) {
    for (double cx : {0.001, 0.01, 0.05, 0.2}) {
        EXPECT_NEAR(gx_from_circuit(4.0, {0.5, 2 * cx}), 2 * gx_from_circuit(4.0, {0.5, cx}), 1e-15);
    }
}

TEST(Ut, Examples) {
    EXPECT_NEAR(ut_closed_form(1.0, kPi / 2), std::pow(2.0, -0.25), 1e-15);
    const auto curve = ut_curve(1.0, {0.0, 1e-8, kPi / 2});
    EXPECT_EQ(curve[0].u_over_t, 0.0);
    EXPECT_LT(curve[1].u_over_t, 1e-15);
    EXPECT_NEAR(curve[2].u_over_t, std::pow(2.0, -0.25), 1e-12);
}

TEST(Ut, StrictlyIncreasingOverTheGrid) {
    const auto curve = ut_curve(1.0, ut_grid(2000));
    for (std::size_t i = 1; i < curve.size(); ++i) {
        EXPECT_GT(curve[i].u_over_t, curve[i - 1].u_over_t);
    }
}

TEST(Ut, GridAndRangeChecks) {
    const auto grid = ut_grid(4);
    ASSERT_EQ(grid.size(), 4u);
    EXPECT_EQ(grid[0], 0.0);
    EXPECT_DOUBLE_EQ(grid[2], kPi / 2);
    EXPECT_THROW(ut_curve(1.0, {kPi}), DomainError);
    EXPECT_THROW(ut_curve(1.0, {-0.1}), DomainError);
    EXPECT_THROW(ut_curve(0.0, {0.5}), DomainError);
    EXPECT_THROW(ut_grid(0), DomainError);
}

// Random circuits: compose the formulas by hand and compare to gamma times the
// closed form.
TEST(Ut, PipelineMatchesClosedFormForRandomCircuits) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const double phi = 0.05 + 3.0 * u(rng);
        const TransmonSpec t = transmon(0.1 + 0.3 * u(rng), 5 + 20 * u(rng), 200 + 2000 * u(rng), phi);
        const CouplerSpec c{0.05 + 0.9 * u(rng), 0.005 + 0.05 * u(rng)};
        const double eps = transmon_splitting(t);
        const double gz = gz_from_circuit(t, t, c);
        const double gx = gx_from_circuit(eps, c);
        const HubbardParams h = map_params(LadderParams::uniform(1, eps, gx, gz));
        const double ratio = std::abs(h.u / h.t);
        const double expected = ut_closed_form(ut_gamma(t, c), phi);
        EXPECT_LE(std::abs(ratio - expected), 1e-12 * std::max(1.0, expected));
    }
}

TEST(Accessible, Thresholds) {
    const AccessibleWindow w{2.0, 3.0, 0.01};
    EXPECT_TRUE(accessible(w, 1.0, -0.05));
    EXPECT_FALSE(accessible(w, 2.5, -0.05));
    EXPECT_FALSE(accessible(w, 1.0, 0.02));
}

TEST(Duffing, HarmonicLimit) {
    auto deviation = [](double e_c) {
        const DuffingLevels d = duffing_levels(transmon(e_c, 12.5, 1250, 0.0));
        return std::abs(d.splitting() / d.epsilon - 1.0);
    };
    // The quartic term is O(sqrt(E_C/E_J)) relative to eps.
    EXPECT_NEAR(deviation(1e-4) / deviation(1e-6), 10.0, 0.05);
    EXPECT_LT(deviation(1e-10), 2e-5);
}

TEST(Duffing, DeviationShrinksWithRatio) {
    auto deviation = [](double ratio) {
        const DuffingLevels d = duffing_levels(transmon(0.25, 0.25 * ratio, 1e6, 0.0));
        return std::abs(d.splitting() - d.epsilon) / d.epsilon;
    };
    const double d50 = deviation(50);
    const double d100 = deviation(100);
    EXPECT_LT(d50, 0.05);
    EXPECT_LT(d100, d50);
    // With the charging term 2 E_C N^2 the first-order anharmonicity is -E_C/2.
    auto anharmonic_error = [](double ratio) {
        const DuffingLevels d = duffing_levels(transmon(0.25, 0.25 * ratio, 1e6, 0.0));
        return std::abs(d.anharmonicity() / -0.125 - 1.0);
    };
    EXPECT_LT(anharmonic_error(200), anharmonic_error(50));
    EXPECT_LT(anharmonic_error(3200), 0.02);
}

TEST(Duffing, StableUnderTruncation) {
    const TransmonSpec t = transmon(0.25, 12.5, 1250, 0.7);
    const DuffingLevels a = duffing_levels(t, 40);
    const DuffingLevels b = duffing_levels(t, 50);
    EXPECT_NEAR(a.e0, b.e0, 1e-10);
    EXPECT_NEAR(a.e1, b.e1, 1e-10);
    EXPECT_NEAR(a.e2, b.e2, 1e-10);
}

TEST(Duffing, TruncationErrors) {
    EXPECT_THROW(duffing_levels(transmon(0.25, 12.5, 1250, 0.0), 9), DomainError);
    // Strong anharmonicity with a small basis leaves weight at the top level.
    EXPECT_THROW(duffing_levels(transmon(2.0, 4.0, 1250, 0.0), 10), AccuracyError);
}

TEST(Xi, IdentityBetweenModes) {
    for (double k : {0.1, 0.5, 0.9}) {
        EXPECT_NEAR(1 / xi_plus(k) - 1 / xi_minus(k), k, 1e-14);
    }
}

TEST(EffectiveGz, VanishesWithoutMutualInductance) {
    const TransmonSpec t = transmon(0.25, 12.5, 1250, kPi / 2);
    const ZzReport r = effective_gz_numeric(t, t, {1e-8, 0.0});
    EXPECT_LT(std::abs(r.gz_numeric), 1e-10 * transmon_splitting(t));
}

TEST(EffectiveGz, LinearModelMatchesAnalyticAndClosedForm) {
    const TransmonSpec t = transmon(0.25, 12.5, 1250, kPi / 2);
    const ZzReport r = effective_gz_numeric(t, t, {0.5, 0.0});
    EXPECT_LT(std::abs(r.relative_error), 0.05);
    EXPECT_NEAR(r.gz_analytic, r.gz_closed_form, 1e-12 * std::abs(r.gz_closed_form));
    EXPECT_LT(r.truncation_change, 1e-10 * std::abs(r.gz_numeric) + 1e-15);
    EXPECT_GT(r.omega_plus, 4 * transmon_splitting(t));
}

TEST(EffectiveGz, FullCosineApproachesAnalyticWithInductiveEnergy) {
    ZzOptions opts;
    opts.model = ZzModel::full_cosine;
    const CouplerSpec c{0.5, 0.0};
    const ZzReport r100 = effective_gz_numeric(transmon(0.25, 12.5, 1250, kPi / 2), transmon(0.25, 12.5, 1250, kPi / 2),
                                               c, opts);
    const ZzReport r400 = effective_gz_numeric(transmon(0.25, 12.5, 5000, kPi / 2), transmon(0.25, 12.5, 5000, kPi / 2),
                                               c, opts);
    EXPECT_LT(std::abs(r400.relative_error), std::abs(r100.relative_error));
    EXPECT_LT(std::abs(r100.relative_error), 0.1);
}

TEST(EffectiveGz, FluxSignFlipsCoupling) {
    const TransmonSpec a = transmon(0.25, 12.5, 1250, 1.2);
    TransmonSpec b = a;
    b.phi_e = -1.2;
    const ZzReport same = effective_gz_numeric(a, a, {0.5, 0.0});
    const ZzReport flip = effective_gz_numeric(a, b, {0.5, 0.0});
    EXPECT_NEAR(flip.gz_numeric, -same.gz_numeric, 1e-12);
}

TEST(EffectiveGz, RejectsUnfrozenLoopAndAsymmetry) {
    // E_L small enough that omega_pm is comparable to eps.
    EXPECT_THROW(effective_gz_numeric(transmon(0.25, 12.5, 30, 0.5), transmon(0.25, 12.5, 30, 0.5), {0.5, 0.0}),
                 DomainError);
    EXPECT_THROW(effective_gz_numeric(transmon(0.25, 12.5, 1250, 0.5), transmon(0.25, 13, 1250, 0.5), {0.5, 0.0}),
                 DomainError);
}

TEST(Capacitance, Examples) {
    EXPECT_EQ(capacitance_matrix_check(6, 0.0), 0.0);
    const double e = capacitance_matrix_check(2, 0.1);
    const Eigen::Matrix2d a_minus = capacitance_matrix(2, -0.1);
    const double expected = (oracle::inverse_2x2(0.1) - a_minus).cwiseAbs().maxCoeff();
    EXPECT_NEAR(e, expected, 1e-15);
    EXPECT_NEAR(e, 0.01 / 0.99, 1e-15);
    EXPECT_LE(e, 0.0102);
    EXPECT_NEAR(capacitance_matrix_check(6, 0.01) / capacitance_matrix_check(6, 0.001), 100.0, 1.0);
}

TEST(Capacitance, QuadraticScaling) {
    EXPECT_NEAR(capacitance_slope(6, 1e-3, 1e-1), 2.0, 0.1);
    EXPECT_THROW(capacitance_matrix_check(4, 0.5), DomainError);
}

TEST(Capacitance, MatrixShape) {
    const Eigen::MatrixXd a = capacitance_matrix(4, 0.2);
    EXPECT_EQ(a(0, 0), 1.0);
    EXPECT_EQ(a(1, 0), 0.2);
    EXPECT_EQ(a(0, 2), 0.0);
}

DeviceChain feasible_device() {
    // eps = 5, g^z = -0.01, g^x = 0.01.
    const double phi = kPi / 2;
    const TransmonSpec t = transmon(0.25, 12.5 / std::cos(phi / 2), 78.125, phi);
    return DeviceChain::uniform(2, t, 0.5, 0.008);
}

TEST(Feasibility, RatioAgainstDecoherence) {
    const FeasibilityReport r = circuit_to_hubbard(feasible_device(), 1e-4);
    EXPECT_NEAR(r.ladder.epsilon_at(1), 5.0, 1e-12);
    EXPECT_NEAR(r.ladder.gz_at(1), -0.01, 1e-14);
    EXPECT_NEAR(r.ladder.gx_at(1, Chain::down), 0.01, 1e-14);
    EXPECT_NEAR(r.ratio, 100.0, 1e-9);
    EXPECT_TRUE(r.feasible);
    ASSERT_TRUE(r.hubbard.has_value());
    const HubbardParams again = map_params(*r.ladder.uniformized());
    EXPECT_NEAR(again.mu, r.hubbard->mu, 1e-12);
    EXPECT_NEAR(again.u, r.hubbard->u, 1e-12);
    EXPECT_NEAR(again.t, r.hubbard->t, 1e-12);
}

TEST(Feasibility, BelowLinewidthIsInfeasible) {
    const FeasibilityReport r = circuit_to_hubbard(feasible_device(), 0.02);
    EXPECT_FALSE(r.feasible);
    EXPECT_NEAR(r.ratio, 0.5, 1e-9);
    bool flagged = false;
    for (const auto &c : r.couplings) {
        flagged = flagged || !c.above_linewidth;
    }
    EXPECT_TRUE(flagged);
}

TEST(Feasibility, NonUniformDeviceHasNoHubbardSet) {
    DeviceChain d = feasible_device();
    d.chain_couplers[1] = 0.01;
    const FeasibilityReport r = circuit_to_hubbard(d, 1e-4);
    EXPECT_FALSE(r.hubbard.has_value());
    EXPECT_FALSE(r.warnings.empty());
}

TEST(Feasibility, ValidatesInputs) {
    DeviceChain d = feasible_device();
    d.rung_couplers.pop_back();
    EXPECT_THROW(circuit_to_hubbard(d, 1e-4), DomainError);
    EXPECT_THROW(circuit_to_hubbard(feasible_device(), 0.0), DomainError);
    EXPECT_THROW(CouplerSpec({1.0, 0.0}).validate(), DomainError);
    EXPECT_THROW(CouplerSpec({0.5, -0.1}).validate(), DomainError);
}

}  // namespace
}  // namespace qladder::circuit
