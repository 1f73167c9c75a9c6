/*
 * Copyright 2026 The epifit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "epifit/core_model.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

using namespace epifit;

namespace {

// Demonstration scenario: N = 1000, I(0) = 5, beta = 0.2, gamma = 1/14.
ModelParams demo_params(double rho = 0.0) { return {0.2, 1.0 / 14.0, rho, 1000.0}; }
CompartmentState demo_initial() { return {0.0, 995.0, 5.0, 0.0}; }

}  // namespace

TEST(Derivatives, ClassicalHandEvaluation) {
    const auto d = derivatives_classical({0.0, 800.0, 100.0, 100.0}, demo_params());
    EXPECT_NEAR(d.ds, -16.0, 1e-12);
    EXPECT_NEAR(d.di, 16.0 - 100.0 / 14.0, 1e-12);
    EXPECT_NEAR(d.di, 8.857143, 1e-6);
    EXPECT_NEAR(d.dr, 7.142857, 1e-6);
    EXPECT_NEAR(d.ds + d.di + d.dr, 0.0, 1e-12);
}

TEST(Derivatives, NoInfectedMeansNoDynamics) {
    const auto d = derivatives_classical({0.0, 700.0, 0.0, 300.0}, demo_params());
    EXPECT_EQ(d.ds, 0.0);
    EXPECT_EQ(d.di, 0.0);
    EXPECT_EQ(d.dr, 0.0);
}

TEST(Derivatives, NoSusceptiblesIsPureRecovery) {
    const auto d = derivatives_classical({0.0, 0.0, 100.0, 900.0}, demo_params());
    EXPECT_EQ(d.ds, 0.0);
    EXPECT_DOUBLE_EQ(d.di, -100.0 / 14.0);
    EXPECT_DOUBLE_EQ(d.dr, 100.0 / 14.0);
}

TEST(Derivatives, ClassicalIgnoresRho) {
    const CompartmentState x{0.0, 800.0, 100.0, 100.0};
    const auto a = derivatives_classical(x, demo_params(0.0));
    const auto b = derivatives_classical(x, demo_params(0.7));
    EXPECT_EQ(a.ds, b.ds);
    EXPECT_EQ(a.di, b.di);
}

TEST(Derivatives, InterventionHalfRho) {
    const auto d = derivatives_intervention({0.0, 800.0, 100.0, 100.0}, demo_params(0.5));
    EXPECT_NEAR(d.ds, -8.0, 1e-12);
    EXPECT_NEAR(d.di, 0.857143, 1e-6);
    EXPECT_NEAR(d.dr, 7.142857, 1e-6);
}

TEST(Derivatives, FullInterventionFreezesSusceptibles) {
    const auto d = derivatives_intervention({0.0, 995.0, 5.0, 0.0}, demo_params(1.0));
    EXPECT_EQ(d.ds, 0.0);
    EXPECT_DOUBLE_EQ(d.di, -5.0 / 14.0);
}

TEST(Derivatives, RhoZeroIsBitwiseClassical) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 500; ++k) {
        const double n = 1.0 + 1e6 * u(rng);
        const double s = n * u(rng);
        const double i = (n - s) * u(rng);
        const CompartmentState x{0.0, s, i, n - s - i};
        const ModelParams p{u(rng), 0.01 + u(rng), 0.0, n};
        const auto a = derivatives_classical(x, p);
        const auto b = derivatives_intervention(x, p);
        ASSERT_EQ(a.ds, b.ds);
        ASSERT_EQ(a.di, b.di);
        ASSERT_EQ(a.dr, b.dr);
    }
}

TEST(Derivatives, RejectsBadInputs) {
    const CompartmentState x{0.0, 800.0, 100.0, 100.0};
    EXPECT_THROW(derivatives_intervention(x, demo_params(1.5)), InvalidArgument);
    EXPECT_THROW(derivatives_intervention(x, demo_params(-0.1)), InvalidArgument);
    EXPECT_THROW(derivatives_classical({0.0, NAN, 1.0, 1.0}, demo_params()), InvalidArgument);
    auto p = demo_params();
    p.beta = std::numeric_limits<double>::infinity();
    EXPECT_THROW(derivatives_classical(x, p), InvalidArgument);
}

TEST(ReproductionNumber, Values) {
    EXPECT_NEAR(reproduction_number(demo_params()), 2.8, 1e-12);
    ModelParams zero{0.0, 0.3, 0.0, 10.0};
    EXPECT_EQ(reproduction_number(zero), 0.0);
    EXPECT_NEAR(effective_reproduction_number(demo_params(0.5)), 1.4, 1e-12);
    ModelParams bad{0.2, 0.0, 0.0, 10.0};
    EXPECT_THROW(reproduction_number(bad), InvalidArgument);
    bad.gamma = -1.0;
    EXPECT_THROW(effective_reproduction_number(bad), InvalidArgument);
}

TEST(Integrate, RejectsBadArguments) {
    EXPECT_THROW(integrate(demo_initial(), demo_params(), 0), InvalidArgument);
    EXPECT_THROW(integrate(demo_initial(), demo_params(), -3), InvalidArgument);
    EXPECT_THROW(integrate(demo_initial(), demo_params(), 10, 0.0), InvalidArgument);
    EXPECT_THROW(integrate(demo_initial(), demo_params(), 10, -0.1), InvalidArgument);
    EXPECT_THROW(integrate({0.0, 990.0, 5.0, 0.0}, demo_params(), 10), InvalidArgument);
    EXPECT_THROW(integrate({0.0, 1000.0, 5.0, -5.0}, demo_params(), 10), InvalidArgument);
}

TEST(Integrate, ReportsBlowUp) {
    // A huge step on a fast epidemic overshoots S far below zero.
    const ModelParams p{50.0, 1.0 / 14.0, 0.0, 1000.0};
    EXPECT_THROW(integrate({0.0, 500.0, 500.0, 0.0}, p, 10, 1.0), NumericalError);
}

TEST(Integrate, DailySamplesUniformlySpaced) {
    const auto traj = integrate({3.0, 995.0, 5.0, 0.0}, demo_params(), 30);
    ASSERT_EQ(traj.size(), 31u);
    for (std::size_t k = 0; k < traj.size(); ++k) EXPECT_DOUBLE_EQ(traj.states[k].t, 3.0 + k);
}

TEST(Integrate, DemoScenarioPeak) {
    const auto traj = integrate(demo_initial(), demo_params(), 200);
    const auto peak = peak_infected(traj);
    EXPECT_GT(peak.infected, 275.0);
    EXPECT_LE(peak.infected, 285.0);
    EXPECT_NEAR(peak.day, 48, 3);
}

TEST(Integrate, ModerateInterventionPeak) {
    const auto traj = integrate(demo_initial(), demo_params(0.2), 300);
    const auto peak = peak_infected(traj);
    EXPECT_NEAR(peak.infected, 195.0, 5.0);
    EXPECT_NEAR(peak.day, 62, 3);
}

TEST(Integrate, FullInterventionFreezesAndDecays) {
    const auto traj = integrate(demo_initial(), demo_params(1.0), 100);
    for (const auto& s : traj.states) {
        ASSERT_EQ(s.s, 995.0);
        const double expected = 5.0 * std::exp(-s.t / 14.0);
        ASSERT_NEAR(s.i, expected, 1e-6 * expected);
    }
    const auto gone = die_out_day(traj);
    ASSERT_TRUE(gone.has_value());
    EXPECT_NEAR(*gone, 25, 3);
}

TEST(Integrate, ConservationAndMonotonicityProperty) {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 200; ++k) {
        const double n = std::pow(10.0, 2.0 + 7.0 * u(rng));
        const double i0 = std::max(1.0, n * 1e-3 * u(rng));
        const double r0 = (n - i0) * 0.3 * u(rng);
        const ModelParams p{0.6 * u(rng), 0.02 + 0.3 * u(rng), u(rng), n};
        const auto traj = integrate({0.0, n - i0 - r0, i0, r0}, p, 150);
        for (std::size_t d = 0; d < traj.size(); ++d) {
            const auto& s = traj.states[d];
            ASSERT_LE(std::abs(s.total() - n), 1e-9 * n);
            ASSERT_GE(s.s, 0.0);
            ASSERT_GE(s.i, 0.0);
            if (d > 0) {
                ASSERT_GE(s.r, traj.states[d - 1].r);
                ASSERT_LE(s.s, traj.states[d - 1].s);
            }
        }
    }
}

TEST(Integrate, StepRefinementConverges) {
    const auto coarse = integrate(demo_initial(), demo_params(), 200, 0.1);
    const auto fine = integrate(demo_initial(), demo_params(), 200, 0.05);
    for (std::size_t d = 0; d < coarse.size(); ++d)
        ASSERT_LT(std::abs(coarse.states[d].i - fine.states[d].i), 1e-3 * fine.states[d].i) << d;
}

TEST(Integrate, PeakNonIncreasingInRho) {
    double last = std::numeric_limits<double>::infinity();
    for (double rho : {0.0, 0.2, 0.4, 0.5, 0.8, 1.0}) {
        const auto peak = peak_infected(integrate(demo_initial(), demo_params(rho), 400));
        EXPECT_LE(peak.infected, last) << rho;
        last = peak.infected;
    }
}

TEST(Integrate, NonDivisorStepIsRefinedToWholeDays) {
    // 0.3 days becomes 1/4 day; samples still land on whole days.
    const auto traj = integrate(demo_initial(), demo_params(), 20, 0.3);
    const auto ref = integrate(demo_initial(), demo_params(), 20, 0.25);
    ASSERT_EQ(traj.size(), ref.size());
    for (std::size_t d = 0; d < traj.size(); ++d) EXPECT_EQ(traj.states[d].i, ref.states[d].i);
}

TEST(Peak, FirstMaximumWinsAndDieOut) {
    Trajectory t;
    for (double i : {3.0, 7.0, 7.0, 2.0, 0.5}) t.states.push_back({0.0, 0.0, i, 0.0});
    const auto p = peak_infected(t);
    EXPECT_EQ(p.day, 1);
    EXPECT_EQ(p.infected, 7.0);
    EXPECT_EQ(die_out_day(t), 4);
    t.states.pop_back();
    EXPECT_FALSE(die_out_day(t).has_value());
}
