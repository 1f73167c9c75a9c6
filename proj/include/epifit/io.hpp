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

#include "epifit/forecast.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <cstdio>
#include <string>
#include <vector>

namespace epifit::io {

using nlohmann::json;

/// Shortest decimal string that round-trips to the same double.
inline std::string fmt_full(double v) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, p);
}

/// Six significant digits, for human-readable tables.
inline std::string fmt6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

inline json to_json(const ModelParams& p) {
    return {{"beta", p.beta}, {"gamma", p.gamma}, {"rho", p.rho}, {"population", p.population}};
}

inline json to_json(const Interval& i) { return json::array({i.low, i.high}); }

inline json to_json(const RegressionFit& f) {
    return {{"alpha0", f.alpha0},
            {"alpha1", f.alpha1},
            {"residual_variance", f.residual_variance},
            {"n", f.n}};
}

inline json to_json(const ForecastResult& f) {
    json days = json::array();
    for (std::size_t k = 0; k < f.trajectory.size(); ++k) {
        const auto& s = f.trajectory.states[k];
        days.push_back({{"date", (f.start_date + static_cast<int>(k)).iso()},
                        {"susceptible", s.s},
                        {"active", s.i},
                        {"recovered", s.r}});
    }
    return {{"region", f.region},
            {"params", to_json(f.params)},
            {"start_date", f.start_date.iso()},
            {"end_date", f.end_date().iso()},
            {"days", std::move(days)},
            {"endpoint", {{"active", f.endpoint_active}, {"recovered", f.endpoint_recovered}}},
            {"ci95", {{"active", to_json(f.active_ci95)}, {"recovered", to_json(f.recovered_ci95)}}},
            {"ci99", {{"active", to_json(f.active_ci99)}, {"recovered", to_json(f.recovered_ci99)}}}};
}

inline std::string forecast_csv(const ForecastResult& f) {
    std::string out = "date,susceptible,active,recovered\n";
    for (std::size_t k = 0; k < f.trajectory.size(); ++k) {
        const auto& s = f.trajectory.states[k];
        out += (f.start_date + static_cast<int>(k)).iso() + ',' + fmt_full(s.s) + ',' +
               fmt_full(s.i) + ',' + fmt_full(s.r) + '\n';
    }
    return out;
}

inline json to_json(const ValidationReport& r) {
    json days = json::array();
    for (std::size_t k = 0; k < r.observed_active.size(); ++k) {
        days.push_back({{"date", (r.start + static_cast<int>(k)).iso()},
                        {"observed_active", r.observed_active[k]},
                        {"predicted_active", r.predicted_active[k]},
                        {"observed_removed", r.observed_removed[k]},
                        {"predicted_removed", r.predicted_removed[k]}});
    }
    return {{"region", r.region},
            {"window", {r.start.iso(), r.end.iso()}},
            {"mae_active", r.mae_active},
            {"rmse_active", r.rmse_active},
            {"mae_removed", r.mae_removed},
            {"rmse_removed", r.rmse_removed},
            {"days", std::move(days)}};
}

inline std::string validation_csv(const ValidationReport& r) {
    std::string out = "date,observed_active,predicted_active,observed_removed,predicted_removed\n";
    for (std::size_t k = 0; k < r.observed_active.size(); ++k) {
        out += (r.start + static_cast<int>(k)).iso() + ',' + fmt_full(r.observed_active[k]) +
               ',' + fmt_full(r.predicted_active[k]) + ',' + fmt_full(r.observed_removed[k]) +
               ',' + fmt_full(r.predicted_removed[k]) + '\n';
    }
    return out;
}

inline json to_json(const std::vector<SweepRow>& rows) {
    json out = json::array();
    for (const auto& r : rows) {
        out.push_back({{"rho", r.rho},
                       {"peak_infected", r.peak_infected},
                       {"peak_day", r.peak_day},
                       {"die_out_day", r.die_out_day ? json(*r.die_out_day) : json(nullptr)}});
    }
    return out;
}

inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "rho,peak_infected,peak_day,die_out_day\n";
    for (const auto& r : rows) {
        out += fmt_full(r.rho) + ',' + fmt_full(r.peak_infected) + ',' +
               std::to_string(r.peak_day) + ',' +
               (r.die_out_day ? std::to_string(*r.die_out_day) : std::string()) + '\n';
    }
    return out;
}

inline std::string sweep_table(const std::vector<SweepRow>& rows) {
    char line[128];
    std::string out;
    std::snprintf(line, sizeof line, "%8s %14s %9s %12s\n", "rho", "peak_infected", "peak_day",
                  "die_out_day");
    out += line;
    for (const auto& r : rows) {
        std::snprintf(line, sizeof line, "%8s %14s %9d %12s\n", fmt6(r.rho).c_str(),
                      fmt6(r.peak_infected).c_str(), r.peak_day,
                      r.die_out_day ? std::to_string(*r.die_out_day).c_str() : "none");
        out += line;
    }
    return out;
}

}  // namespace epifit::io
