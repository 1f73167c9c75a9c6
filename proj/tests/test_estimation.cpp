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
#include "epifit/estimation.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace epifit;
using epifit::test::series_from;

namespace {

EpiSeries two_day(double i0, double i1, double c0, double c1) {
    EpiSeries s;
    s.region = "X";
    s.dates = {Date{2020, 6, 5}, Date{2020, 6, 6}};
    s.active = {i0, i1};
    s.removed = {0.0, 0.0};
    s.confirmed = {c0, c1};
    return s;
}

std::vector<BetaSample> line_samples(int n, double a, double b) {
    std::vector<BetaSample> out;
    for (int d = 0; d < n; ++d) out.push_back({d, a + b * d});
    return out;
}

}  // namespace

TEST(BetaSamples, HandEvaluation) {
    // N = 1000, S(t) = N - confirmed(t) = 800
    const auto set = beta_samples(two_day(100, 110, 200, 215), 1.0 / 14.0, 1000.0);
    ASSERT_EQ(set.samples.size(), 1u);
    EXPECT_EQ(set.samples[0].day_index, 0);
    EXPECT_NEAR(set.samples[0].beta, (10.0 / 100.0 + 1.0 / 14.0) * (1000.0 / 800.0), 1e-15);
    EXPECT_NEAR(set.samples[0].beta, 0.2142857, 1e-7);
}

TEST(BetaSamples, FlatCurveFullySusceptibleGivesGamma) {
    const auto set = beta_samples(two_day(50, 50, 0, 0), 1.0 / 14.0, 1e6);
    EXPECT_DOUBLE_EQ(set.samples[0].beta, 1.0 / 14.0);
}

TEST(BetaSamples, ExplicitSusceptibleInit) {
    const auto set = beta_samples(two_day(100, 110, 200, 215), 1.0 / 14.0, 1000.0, 500.0);
    EXPECT_NEAR(set.samples[0].beta, (0.1 + 1.0 / 14.0) * 2.0, 1e-15);
}

TEST(BetaSamples, FallingActiveGivesNegativeSample) {
    const auto set = beta_samples(two_day(100, 80, 0, 0), 1.0 / 14.0, 1000.0);
    EXPECT_LT(set.samples[0].beta, 0.0);
}

TEST(BetaSamples, ZeroActiveDaysAreSkippedKeepingCalendarIndex) {
    EpiSeries s;
    s.region = "X";
    for (int d = 0; d < 4; ++d) s.dates.push_back(Date{2020, 6, 5} + d);
    s.active = {10, 0, 5, 6};
    s.removed = {0, 0, 0, 0};
    s.confirmed = {10, 10, 15, 16};
    const auto set = beta_samples(s, 0.1, 1000.0);
    ASSERT_EQ(set.samples.size(), 2u);
    EXPECT_EQ(set.samples[0].day_index, 0);
    EXPECT_EQ(set.samples[1].day_index, 2);
    ASSERT_EQ(set.skipped.size(), 1u);
    EXPECT_NE(set.skipped[0].find("2020-06-06"), std::string::npos);
}

TEST(BetaSamples, Rejections) {
    EpiSeries one = two_day(1, 1, 0, 0);
    one.dates.pop_back();
    one.active.pop_back();
    one.removed.pop_back();
    one.confirmed.pop_back();
    EXPECT_THROW(beta_samples(one, 0.1, 100.0), InvalidArgument);
    EXPECT_THROW(beta_samples(two_day(10, 11, 100, 101), 0.1, 100.0), DataError);
    EXPECT_THROW(beta_samples(two_day(10, 11, 0, 1), 0.0, 100.0), InvalidArgument);
}

TEST(BetaSamples, RecoversEffectiveRateOnModelData) {
    // S ~ N, so the inverted rate is (1 - rho) * beta up to the forward
    // difference bias.
    const double beta = 0.2, gamma = 1.0 / 14.0, rho = 0.4, n = 1e9;
    const ModelParams p{beta, gamma, rho, n};
    const auto traj = integrate({0.0, n - 1000.0, 1000.0, 0.0}, p, 30);
    const auto set = beta_samples(series_from(traj, Date{2020, 1, 1}), gamma, n);
    ASSERT_EQ(set.samples.size(), 30u);
    for (const auto& s : set.samples) EXPECT_NEAR(s.beta, (1 - rho) * beta, 0.02 * (1 - rho) * beta);
}

TEST(CrossValidatedBeta, ConstantResponse) {
    const auto r = cross_validated_beta(line_samples(50, 0.17, 0.0));
    EXPECT_NEAR(r.beta_hat, 0.17, 1e-15);
    EXPECT_NEAR(r.cv_error, 0.0, 1e-28);
}

TEST(CrossValidatedBeta, LinearTrendEvaluatedAtMidpoint) {
    const auto r = cross_validated_beta(line_samples(50, 0.1, 0.002));
    EXPECT_NEAR(r.beta_hat, 0.149, 1e-14);
    EXPECT_NEAR(r.fit.alpha1, 0.002, 1e-15);
    EXPECT_NEAR(r.cv_error, 0.0, 1e-26);
}

TEST(CrossValidatedBeta, LeaveOneOutOnCollinearData) {
    const auto s = line_samples(12, -0.3, 0.05);
    const auto r = cross_validated_beta(s, static_cast<int>(s.size()));
    EXPECT_NEAR(r.cv_error, 0.0, 1e-26);
}

TEST(CrossValidatedBeta, ContiguousFoldsMatchBruteForce) {
    // 7 samples, 3 folds -> blocks {0,1,2}, {3,4}, {5,6}.
    std::vector<BetaSample> s{{0, 0.2}, {1, 0.25}, {2, 0.19}, {3, 0.3},
                              {4, 0.22}, {5, 0.18}, {6, 0.27}};
    const std::vector<std::vector<int>> blocks{{0, 1, 2}, {3, 4}, {5, 6}};
    double sq = 0.0;
    for (const auto& held : blocks) {
        std::vector<Point> train;
        for (int j = 0; j < 7; ++j)
            if (std::find(held.begin(), held.end(), j) == held.end())
                train.push_back({double(s[j].day_index), s[j].beta});
        const auto fit = fit_linear(train);
        for (int j : held) sq += std::pow(s[j].beta - fit.predict(s[j].day_index), 2);
    }
    const auto r = cross_validated_beta(s, 3);
    EXPECT_NEAR(r.cv_error, sq / 7.0, 1e-15);
    EXPECT_NEAR(r.beta_hat, r.fit.predict(3.0), 1e-15);
}

TEST(CrossValidatedBeta, Rejections) {
    EXPECT_THROW(cross_validated_beta(line_samples(5, 0.1, 0.0), 10), InvalidArgument);
    EXPECT_THROW(cross_validated_beta(line_samples(20, 0.1, 0.0), 1), InvalidArgument);
    EXPECT_THROW(cross_validated_beta(line_samples(2, 0.1, 0.0), 2), InvalidArgument);
    try {
        cross_validated_beta(line_samples(1, 0.1, 0.0), 10);
        FAIL();
    } catch (const InvalidArgument& e) {
        EXPECT_NE(std::string(e.what()).find("too few samples"), std::string::npos);
    }
}

TEST(RhoGrid, CoversUnitInterval) {
    const auto g = rho_grid(0.001);
    ASSERT_EQ(g.size(), 1001u);
    EXPECT_EQ(g.front(), 0.0);
    EXPECT_EQ(g.back(), 1.0);
    const auto coarse = rho_grid(0.3);
    ASSERT_EQ(coarse.size(), 5u);
    EXPECT_EQ(coarse.back(), 1.0);
    EXPECT_THROW(rho_grid(0.0), InvalidArgument);
    EXPECT_THROW(rho_grid(1.5), InvalidArgument);
}

namespace {

EpiSeries synthesize(double rho, double n = 1e8, int days = 51) {
    const ModelParams p{0.1738, 1.0 / 14.0, rho, n};
    return series_from(integrate({0.0, n - 3e4 - 5e4, 3e4, 5e4}, p, days - 1), Date{2020, 6, 5});
}

}  // namespace

TEST(CalibrateRho, RecoversGeneratingRho) {
    const auto obs = synthesize(0.4);
    const ModelParams base{0.1738, 1.0 / 14.0, 0.0, 1e8};
    const auto r = calibrate_rho(obs, base);
    EXPECT_NEAR(r.rho, 0.4, 1e-12);
    EXPECT_EQ(r.grid_step, 0.001);
}

TEST(CalibrateRho, IdenticalToNoInterventionRun) {
    const auto obs = synthesize(0.0);
    const auto r = calibrate_rho(obs, {0.1738, 1.0 / 14.0, 0.0, 1e8});
    EXPECT_EQ(r.rho, 0.0);
    EXPECT_EQ(r.objective, 0.0);
}

TEST(CalibrateRho, TiesGoToSmallerRho) {
    // beta = 0 makes rho irrelevant: every grid point has the same SSE.
    const ModelParams flat{0.0, 1.0 / 14.0, 0.0, 1e6};
    const auto obs = series_from(integrate({0.0, 1e6 - 100, 100, 0}, flat, 10), Date{2020, 6, 5});
    const auto r = calibrate_rho(obs, flat, 0.01);
    EXPECT_EQ(r.rho, 0.0);
}

TEST(CalibrateRho, DeterministicObjective) {
    const auto obs = synthesize(0.27);
    const ModelParams base{0.1738, 1.0 / 14.0, 0.0, 1e8};
    const auto a = calibrate_rho(obs, base, 0.01);
    const auto b = calibrate_rho(obs, base, 0.01);
    EXPECT_EQ(a.rho, b.rho);
    EXPECT_EQ(a.objective, b.objective);
    EXPECT_NEAR(a.rho, 0.27, 0.01);
}

TEST(CalibrateRho, RejectsEmptyWindow) {
    EpiSeries empty;
    EXPECT_THROW(calibrate_rho(empty, {0.2, 0.1, 0.0, 100.0}), InvalidArgument);
}
