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

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace epifit {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// Ordinary least-squares line y = alpha0 + alpha1 * x.
struct RegressionFit {
    double alpha0 = 0.0;
    double alpha1 = 0.0;
    /// Sum of squared residuals / (n - 2); zero when n == 2.
    double residual_variance = 0.0;
    std::size_t n = 0;

    double predict(double x) const { return alpha0 + alpha1 * x; }
};

/// Least-squares fit computed from centered sums (two passes), which keeps
/// the slope accurate when x is far from the origin.
inline RegressionFit fit_linear(std::span<const Point> points) {
    const std::size_t n = points.size();
    if (n < 2) throw InvalidArgument("fit_linear needs at least 2 points");

    double mx = 0.0, my = 0.0;
    for (const auto& p : points) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw InvalidArgument("fit_linear: non-finite point");
        mx += p.x;
        my += p.y;
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);

    double sxx = 0.0, sxy = 0.0;
    for (const auto& p : points) {
        const double dx = p.x - mx;
        sxx += dx * dx;
        sxy += dx * (p.y - my);
    }
    if (sxx == 0.0) throw InvalidArgument("fit_linear: all x values identical, slope undefined");

    RegressionFit fit;
    fit.n = n;
    fit.alpha1 = sxy / sxx;
    fit.alpha0 = my - fit.alpha1 * mx;

    double sse = 0.0;
    for (const auto& p : points) {
        const double e = p.y - fit.predict(p.x);
        sse += e * e;
    }
    fit.residual_variance = n > 2 ? sse / static_cast<double>(n - 2) : 0.0;
    return fit;
}

inline RegressionFit fit_linear(const std::vector<Point>& points) {
    return fit_linear(std::span<const Point>(points));
}

}  // namespace epifit
