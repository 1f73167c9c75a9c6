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

#include "epifit/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace epifit {

/// Susceptible / infected / removed counts at time `t` (days). Real-valued;
/// rounding happens only when values are displayed.
struct CompartmentState {
    double t = 0.0;
    double s = 0.0;
    double i = 0.0;
    double r = 0.0;

    double total() const { return s + i + r; }
};

/// Parameters of the intervention-modified SIR system. `rho` scales the
/// transmission rate by (1 - rho); rho = 0 is the classical model.
struct ModelParams {
    double beta = 0.0;
    double gamma = 1.0 / 14.0;
    double rho = 0.0;
    double population = 0.0;

    void validate() const {
        if (!std::isfinite(beta) || !std::isfinite(gamma) || !std::isfinite(rho) ||
            !std::isfinite(population))
            throw InvalidArgument("model parameters must be finite");
        if (beta < 0.0) throw InvalidArgument("beta must be >= 0");
        if (gamma <= 0.0) throw InvalidArgument("gamma must be > 0");
        if (rho < 0.0 || rho > 1.0) throw InvalidArgument("rho must lie in [0, 1]");
        if (population <= 0.0) throw InvalidArgument("population must be > 0");
    }
};

struct Derivatives {
    double ds = 0.0;
    double di = 0.0;
    double dr = 0.0;
};

/// Daily samples of one integration run.
struct Trajectory {
    std::vector<CompartmentState> states;
    ModelParams params;

    std::size_t size() const { return states.size(); }
    const CompartmentState& back() const { return states.back(); }
};

namespace detail {

inline void require_finite(const CompartmentState& x) {
    if (!std::isfinite(x.t) || !std::isfinite(x.s) || !std::isfinite(x.i) || !std::isfinite(x.r))
        throw InvalidArgument("compartment state must be finite");
}

// Shared by both right-hand sides so that rho = 0 reproduces the classical
// system bit for bit: (1 - 0) * beta == beta exactly.
inline Derivatives sir_rates(double transmission, double gamma, double population,
                             const CompartmentState& x) {
    const double infection = transmission * x.s * x.i / population;
    const double recovery = gamma * x.i;
    return {-infection, infection - recovery, recovery};
}

}  // namespace detail

/// Right-hand side of the classical SIR system. `params.rho` is ignored.
inline Derivatives derivatives_classical(const CompartmentState& state, const ModelParams& params) {
    detail::require_finite(state);
    ModelParams p = params;
    p.rho = 0.0;
    p.validate();
    return detail::sir_rates(params.beta, params.gamma, params.population, state);
}

/// Right-hand side of the SIR system with transmission scaled by (1 - rho).
inline Derivatives derivatives_intervention(const CompartmentState& state,
                                            const ModelParams& params) {
    detail::require_finite(state);
    params.validate();
    return detail::sir_rates((1.0 - params.rho) * params.beta, params.gamma, params.population,
                             state);
}

/// beta / gamma.
inline double reproduction_number(const ModelParams& params) {
    if (!(params.gamma > 0.0)) throw InvalidArgument("gamma must be > 0");
    return params.beta / params.gamma;
}

/// (1 - rho) * beta / gamma, the reproduction number under intervention.
inline double effective_reproduction_number(const ModelParams& params) {
    if (!(params.gamma > 0.0)) throw InvalidArgument("gamma must be > 0");
    if (params.rho < 0.0 || params.rho > 1.0) throw InvalidArgument("rho must lie in [0, 1]");
    return (1.0 - params.rho) * params.beta / params.gamma;
}

/// Relative tolerance for S + I + R == N and the negative-compartment guard.
inline constexpr double kConservationTolerance = 1e-9;
inline constexpr double kDefaultStepDays = 0.1;

/// Fixed-step RK4 integration of the intervention system, sampled once per
/// day over [t0, t0 + horizon_days]. The internal step is 1/ceil(1/step_days)
/// so each day is covered by a whole number of steps.
///
/// Values that dip below zero by no more than 1e-9 * N are clamped to zero;
/// anything further below is reported as a NumericalError.
inline Trajectory integrate(const CompartmentState& initial, const ModelParams& params,
                            int horizon_days, double step_days = kDefaultStepDays) {
    params.validate();
    detail::require_finite(initial);
    if (horizon_days <= 0) throw InvalidArgument("horizon_days must be positive");
    if (!(step_days > 0.0) || !std::isfinite(step_days))
        throw InvalidArgument("step_days must be positive");

    const double n = params.population;
    const double slack = kConservationTolerance * n;
    if (initial.t < 0.0) throw InvalidArgument("initial time must be non-negative");
    if (initial.s < -slack || initial.i < -slack || initial.r < -slack)
        throw InvalidArgument("initial compartments must be non-negative");
    if (std::abs(initial.total() - n) > slack)
        throw InvalidArgument("initial S + I + R must equal the population");

    const int steps_per_day =
        std::max(1, static_cast<int>(std::ceil(1.0 / step_days - 1e-12)));
    const double h = 1.0 / steps_per_day;

    const double transmission = (1.0 - params.rho) * params.beta;
    auto rhs = [&](double s, double i, double r) {
        return detail::sir_rates(transmission, params.gamma, n, {0.0, s, i, r});
    };
    auto guard = [&](double& v, const char* name, double t) {
        if (!std::isfinite(v) || v < -slack)
            throw NumericalError(std::string("integrator failure: ") + name +
                                 " went negative at t=" + std::to_string(t));
        if (v < 0.0) v = 0.0;
    };

    Trajectory out;
    out.params = params;
    out.states.reserve(static_cast<std::size_t>(horizon_days) + 1);

    CompartmentState x = initial;
    guard(x.s, "S", x.t);
    guard(x.i, "I", x.t);
    guard(x.r, "R", x.t);
    out.states.push_back(x);

    for (int day = 1; day <= horizon_days; ++day) {
        for (int k = 0; k < steps_per_day; ++k) {
            const Derivatives k1 = rhs(x.s, x.i, x.r);
            const Derivatives k2 =
                rhs(x.s + 0.5 * h * k1.ds, x.i + 0.5 * h * k1.di, x.r + 0.5 * h * k1.dr);
            const Derivatives k3 =
                rhs(x.s + 0.5 * h * k2.ds, x.i + 0.5 * h * k2.di, x.r + 0.5 * h * k2.dr);
            const Derivatives k4 = rhs(x.s + h * k3.ds, x.i + h * k3.di, x.r + h * k3.dr);
            x.s += h / 6.0 * (k1.ds + 2.0 * k2.ds + 2.0 * k3.ds + k4.ds);
            x.i += h / 6.0 * (k1.di + 2.0 * k2.di + 2.0 * k3.di + k4.di);
            x.r += h / 6.0 * (k1.dr + 2.0 * k2.dr + 2.0 * k3.dr + k4.dr);
            const double t = initial.t + (day - 1) + (k + 1) * h;
            guard(x.s, "S", t);
            guard(x.i, "I", t);
            guard(x.r, "R", t);
        }
        x.t = initial.t + day;
        out.states.push_back(x);
    }
    return out;
}

struct Peak {
    double infected = 0.0;
    int day = 0;  // offset from the first sample
};

/// First daily sample attaining the maximum of I.
inline Peak peak_infected(const Trajectory& traj) {
    if (traj.states.empty()) throw InvalidArgument("empty trajectory");
    Peak p{traj.states.front().i, 0};
    for (std::size_t k = 1; k < traj.states.size(); ++k) {
        if (traj.states[k].i > p.infected) p = {traj.states[k].i, static_cast<int>(k)};
    }
    return p;
}

inline constexpr double kDieOutThreshold = 1.0;

/// First day on which fewer than one person is infected, if any.
inline std::optional<int> die_out_day(const Trajectory& traj) {
    for (std::size_t k = 0; k < traj.states.size(); ++k)
        if (traj.states[k].i < kDieOutThreshold) return static_cast<int>(k);
    return std::nullopt;
}

}  // namespace epifit
