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
#include "epifit/date.hpp"
#include "epifit/error.hpp"
#include "epifit/estimation.hpp"

#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace epifit {

struct Interval {
    double low = 0.0;
    double high = 0.0;

    double midpoint() const { return 0.5 * (low + high); }
    bool contains(const Interval& other) const {
        return low <= other.low && other.high <= high;
    }
};

inline double z_score(int level) {
    switch (level) {
        case 95: return 1.96;
        case 99: return 2.576;
        default: throw InvalidArgument("confidence level must be 95 or 99");
    }
}

/// Normal-approximation interval for the mean of a daily series:
/// mean +/- z * sd / sqrt(n), with the sample (n - 1) standard deviation.
inline Interval confidence_interval(std::span<const double> daily_values, int level) {
    const double z = z_score(level);
    const std::size_t n = daily_values.size();
    if (n < 2) throw InvalidArgument("confidence interval needs at least 2 values");
    double mean = 0.0;
    for (double v : daily_values) {
        if (!std::isfinite(v)) throw InvalidArgument("confidence interval: non-finite value");
        mean += v;
    }
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (double v : daily_values) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / static_cast<double>(n - 1));
    const double half = z * sd / std::sqrt(static_cast<double>(n));
    return {mean - half, mean + half};
}

inline Interval confidence_interval(const std::vector<double>& daily_values, int level) {
    return confidence_interval(std::span<const double>(daily_values), level);
}

struct ForecastResult {
    std::string region;
    ModelParams params;
    Date start_date;
    Trajectory trajectory;
    Interval active_ci95;
    Interval active_ci99;
    Interval recovered_ci95;
    Interval recovered_ci99;
    double endpoint_active = 0.0;
    double endpoint_recovered = 0.0;  // includes deceased

    Date end_date() const { return start_date + static_cast<int>(trajectory.size()) - 1; }
};

/// Projects the intervention model from `start` (default: last day of the
/// series) to `end_date`, both inclusive. N comes from `demographics`.
/// Recovered counts include the deceased, as in the observed removed series.
inline ForecastResult forecast_region(const EpiSeries& series, const RegionRecord& demographics,
                                      const ModelParams& params, Date end_date,
                                      std::optional<Date> start = std::nullopt,
                                      double step_days = kDefaultStepDays) {
    if (series.size() == 0) throw InvalidArgument("empty series");
    const Date start_date = start.value_or(series.end());
    const auto idx = series.index_of(start_date);
    if (idx < 0) throw InvalidArgument("series does not contain start date " + start_date.iso());
    if (!(start_date < end_date)) throw InvalidArgument("forecast end date must be after start");

    ModelParams p = params;
    p.population = static_cast<double>(demographics.population);
    const auto initial = observed_state(series, static_cast<std::size_t>(idx), p.population);

    ForecastResult out;
    out.region = series.region;
    out.params = p;
    out.start_date = start_date;
    out.trajectory = integrate(initial, p, end_date - start_date, step_days);

    std::vector<double> active, recovered;
    active.reserve(out.trajectory.size());
    recovered.reserve(out.trajectory.size());
    for (const auto& s : out.trajectory.states) {
        active.push_back(s.i);
        recovered.push_back(s.r);
    }
    out.active_ci95 = confidence_interval(active, 95);
    out.active_ci99 = confidence_interval(active, 99);
    out.recovered_ci95 = confidence_interval(recovered, 95);
    out.recovered_ci99 = confidence_interval(recovered, 99);
    out.endpoint_active = active.back();
    out.endpoint_recovered = recovered.back();
    return out;
}

struct ValidationReport {
    std::string region;
    Date start;
    Date end;
    double mae_active = 0.0;
    double rmse_active = 0.0;
    double mae_removed = 0.0;
    double rmse_removed = 0.0;
    std::vector<double> predicted_active;
    std::vector<double> observed_active;
    std::vector<double> predicted_removed;
    std::vector<double> observed_removed;
};

namespace detail {

struct ErrorPair {
    double mae = 0.0;
    double rmse = 0.0;
};

inline ErrorPair error_metrics(const std::vector<double>& predicted,
                               const std::vector<double>& observed) {
    double abs_sum = 0.0, sq_sum = 0.0;
    for (std::size_t k = 0; k < predicted.size(); ++k) {
        const double e = predicted[k] - observed[k];
        abs_sum += std::abs(e);
        sq_sum += e * e;
    }
    const auto n = static_cast<double>(predicted.size());
    return {abs_sum / n, std::sqrt(sq_sum / n)};
}

}  // namespace detail

/// Replays the window from its first observed day (no re-anchoring) and
/// scores the daily predictions against the observations.
inline ValidationReport validate(const EpiSeries& series, const ModelParams& params,
                                 const RegionRecord& demographics,
                                 double step_days = kDefaultStepDays) {
    if (series.size() < 2) throw InvalidArgument("validation window shorter than 2 days");
    ModelParams p = params;
    p.population = static_cast<double>(demographics.population);
    const auto traj = integrate(observed_state(series, 0, p.population), p,
                                static_cast<int>(series.size()) - 1, step_days);

    ValidationReport rep;
    rep.region = series.region;
    rep.start = series.start();
    rep.end = series.end();
    rep.observed_active = series.active;
    rep.observed_removed = series.removed;
    for (const auto& s : traj.states) {
        rep.predicted_active.push_back(s.i);
        rep.predicted_removed.push_back(s.r);
    }
    const auto a = detail::error_metrics(rep.predicted_active, rep.observed_active);
    const auto r = detail::error_metrics(rep.predicted_removed, rep.observed_removed);
    rep.mae_active = a.mae;
    rep.rmse_active = a.rmse;
    rep.mae_removed = r.mae;
    rep.rmse_removed = r.rmse;
    return rep;
}

struct SweepRow {
    double rho = 0.0;
    double peak_infected = 0.0;
    int peak_day = 0;
    std::optional<int> die_out_day;  // nullopt if I >= 1 through the horizon
};

/// One summary row per rho, in input order.
inline std::vector<SweepRow> intervention_sweep(const ModelParams& base,
                                                const CompartmentState& initial,
                                                int horizon_days,
                                                const std::vector<double>& rho_values,
                                                double step_days = kDefaultStepDays) {
    for (double rho : rho_values)
        if (!(rho >= 0.0 && rho <= 1.0)) throw InvalidArgument("sweep rho outside [0, 1]");
    std::vector<SweepRow> rows;
    rows.reserve(rho_values.size());
    for (double rho : rho_values) {
        ModelParams p = base;
        p.rho = rho;
        const auto traj = integrate(initial, p, horizon_days, step_days);
        const auto peak = peak_infected(traj);
        rows.push_back({rho, peak.infected, peak.day, die_out_day(traj)});
    }
    return rows;
}

}  // namespace epifit
