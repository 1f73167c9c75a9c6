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
#pragma once

#include "epifit/core_model.hpp"
#include "epifit/data_ingest.hpp"
#include "epifit/error.hpp"
#include "epifit/regression.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace epifit {

/// Per-day transmission rate backed out of consecutive active counts.
/// May be negative on days when active cases fall faster than gamma * I.
struct BetaSample {
    int day_index = 0;
    double beta = 0.0;
};

struct BetaSampleSet {
    std::vector<BetaSample> samples;
    /// Days excluded from the set (I(t) == 0), one message per day.
    std::vector<std::string> skipped;
};

/// Initial model state on day `index` of an observed series.
inline CompartmentState observed_state(const EpiSeries& series, std::size_t index,
                                       double population) {
    const double i = series.active.at(index);
    const double r = series.removed.at(index);
    return {0.0, population - i - r, i, r};
}

/// Inverts the I-equation with a forward difference over one day:
///
///   beta = ((I(t+1) - I(t)) / I(t) + gamma) * N / S(t)
///
/// S(t) starts at `susceptible_init` (default N - confirmed(t0)) and is
/// depleted by new confirmed cases, i.e. S(t) = N - confirmed(t) by default.
inline BetaSampleSet beta_samples(const EpiSeries& series, double gamma, double population,
                                  std::optional<double> susceptible_init = std::nullopt) {
    if (series.size() < 2) throw InvalidArgument("too few samples: need at least 2 days");
    if (!(gamma > 0.0)) throw InvalidArgument("gamma must be > 0");
    if (!(population > 0.0)) throw InvalidArgument("population must be > 0");
    const bool has_confirmed = series.confirmed.size() == series.size();
    const double c0 = has_confirmed ? series.confirmed.front() : 0.0;
    const double s0 = susceptible_init.value_or(population - c0);

    constexpr double dt = 1.0;
    BetaSampleSet out;
    for (std::size_t t = 0; t + 1 < series.size(); ++t) {
        const double i_t = series.active[t];
        if (!(i_t > 0.0)) {
            const std::string label =
                series.dates.size() > t ? series.dates[t].iso() : "day " + std::to_string(t);
            out.skipped.push_back(label + ": I(t) = 0");
            continue;
        }
        const double s_t = s0 - (has_confirmed ? series.confirmed[t] - c0 : 0.0);
        if (!(s_t > 0.0))
            throw DataError("susceptible count non-positive on day " + std::to_string(t));
        const double delta_i = series.active[t + 1] - i_t;
        const double beta = (delta_i / dt * (1.0 / i_t) + gamma) * (population / s_t);
        if (!std::isfinite(beta))
            throw NumericalError("non-finite beta sample on day " + std::to_string(t));
        out.samples.push_back({static_cast<int>(t), beta});
    }
    return out;
}

struct CrossValidatedBeta {
    double beta_hat = 0.0;
    RegressionFit fit;    // all samples
    double cv_error = 0.0;  // mean held-out squared error
};

/// k-fold cross-validation of a beta-versus-day regression. Folds are
/// contiguous blocks in day order. The final line is refit on all samples and
/// evaluated at the midpoint of the observed day range to give beta_hat.
inline CrossValidatedBeta cross_validated_beta(const std::vector<BetaSample>& samples,
                                               int folds = 10) {
    if (folds < 2) throw InvalidArgument("folds must be >= 2");
    const std::size_t n = samples.size();
    if (n < static_cast<std::size_t>(folds) || n < 3)
        throw InvalidArgument("too few samples: " + std::to_string(n) + " for " +
                              std::to_string(folds) + " folds");

    std::vector<Point> all;
    all.reserve(n);
    for (const auto& s : samples) all.push_back({static_cast<double>(s.day_index), s.beta});

    const std::size_t k = static_cast<std::size_t>(folds);
    const std::size_t base = n / k;
    const std::size_t extra = n % k;
    double sq_sum = 0.0;
    std::size_t begin = 0;
    std::vector<Point> train;
    for (std::size_t f = 0; f < k; ++f) {
        const std::size_t len = base + (f < extra ? 1 : 0);
        const std::size_t end = begin + len;
        train.clear();
        for (std::size_t j = 0; j < n; ++j)
            if (j < begin || j >= end) train.push_back(all[j]);
        RegressionFit fit;
        try {
            fit = fit_linear(train);
        } catch (const InvalidArgument&) {
            throw InvalidArgument("too few samples: fold " + std::to_string(f) +
                                  " leaves fewer than 2 distinct training days");
        }
        for (std::size_t j = begin; j < end; ++j) {
            const double e = all[j].y - fit.predict(all[j].x);
            sq_sum += e * e;
        }
        begin = end;
    }

    CrossValidatedBeta out;
    out.fit = fit_linear(all);
    out.cv_error = sq_sum / static_cast<double>(n);
    const double mid = 0.5 * (all.front().x + all.back().x);
    out.beta_hat = out.fit.predict(mid);
    return out;
}

struct CalibrationResult {
    double rho = 0.0;
    double objective = 0.0;  // SSE of predicted vs observed active cases
    double grid_step = 0.0;
};

/// Candidate rho values {0, step, 2 step, ..., 1}.
inline std::vector<double> rho_grid(double grid_step) {
    if (!(grid_step > 0.0) || grid_step > 1.0 || !std::isfinite(grid_step))
        throw InvalidArgument("rho grid step must lie in (0, 1]");
    const auto count = static_cast<std::size_t>(std::floor(1.0 / grid_step + 1e-9));
    std::vector<double> grid;
    grid.reserve(count + 2);
    for (std::size_t k = 0; k <= count; ++k) grid.push_back(std::min(1.0, k * grid_step));
    if (grid.back() < 1.0 - 1e-12) grid.push_back(1.0);
    return grid;
}

/// Sum of squared differences between model-predicted and observed active
/// cases, integrating from the window's first observed day.
inline double active_sse(const EpiSeries& observed, const ModelParams& params,
                         double step_days = kDefaultStepDays) {
    const auto traj = integrate(observed_state(observed, 0, params.population), params,
                                static_cast<int>(observed.size()) - 1, step_days);
    double sse = 0.0;
    for (std::size_t d = 0; d < observed.size(); ++d) {
        const double e = traj.states[d].i - observed.active[d];
        sse += e * e;
    }
    return sse;
}

/// Grid search over rho. Ties go to the smaller rho.
inline CalibrationResult calibrate_rho(const EpiSeries& observed,
                                       const ModelParams& params_without_rho,
                                       double grid_step = 0.001,
                                       double step_days = kDefaultStepDays) {
    if (observed.size() == 0) throw InvalidArgument("calibration window is empty");
    if (observed.size() < 2) throw InvalidArgument("calibration window needs at least 2 days");
    const auto grid = rho_grid(grid_step);

    CalibrationResult best;
    best.grid_step = grid_step;
    best.objective = std::numeric_limits<double>::infinity();
    for (double rho : grid) {
        ModelParams p = params_without_rho;
        p.rho = rho;
        const double sse = active_sse(observed, p, step_days);
        if (sse < best.objective) {
            best.objective = sse;
            best.rho = rho;
        }
    }
    return best;
}

}  // namespace epifit
