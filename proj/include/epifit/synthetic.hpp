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

// Deterministic generator for the bundled synthetic case fixture. The output
// is NOT observed data: it exists to exercise ingestion, estimation and the
// CLI pipeline with realistic-looking cumulative counts.

#include "epifit/data_ingest.hpp"
#include "epifit/date.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

namespace epifit::synthetic {

struct RegionSeed {
    std::string region;
    std::int64_t population = 0;
};

namespace detail {

// Fixed bit-to-double mapping; std distributions are not portable across
// standard libraries, the raw mt19937_64 stream is.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

}  // namespace detail

/// Daily cumulative records for each region over [start, end]. A discrete
/// SIR-like process with weekly reporting modulation and multiplicative
/// noise; cumulative counts are non-decreasing by construction.
inline std::vector<CaseRecord> generate_cases(const std::vector<RegionSeed>& regions,
                                              Date start, Date end, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<CaseRecord> out;
    const int days = (end - start) + 1;
    for (const auto& reg : regions) {
        const double n = static_cast<double>(reg.population);
        const double confirmed0 = n * detail::uniform(rng, 1.5e-5, 1.2e-4);
        const double active_share = detail::uniform(rng, 0.35, 0.55);
        const double rate = detail::uniform(rng, 0.085, 0.13);
        const double recovery = detail::uniform(rng, 0.055, 0.085);
        const double fatality = detail::uniform(rng, 0.01, 0.035);
        const double phase = detail::uniform(rng, 0.0, 7.0);

        double active = confirmed0 * active_share;
        const double removed = confirmed0 - active;
        double confirmed = confirmed0;
        double deceased = removed * fatality;
        double recovered = removed - deceased;
        for (int d = 0; d < days; ++d) {
            CaseRecord rec;
            rec.date = start + d;
            rec.region = reg.region;
            rec.confirmed = static_cast<std::int64_t>(std::floor(confirmed));
            rec.deceased = static_cast<std::int64_t>(std::floor(deceased));
            rec.recovered = static_cast<std::int64_t>(std::floor(recovered));
            out.push_back(rec);

            const double susceptible = n - confirmed;
            const double weekly =
                1.0 + 0.08 * std::sin(2.0 * std::numbers::pi * (d + phase) / 7.0);
            const double noise = detail::uniform(rng, 0.9, 1.1);
            const double new_cases = rate * weekly * noise * active * susceptible / n;
            const double new_removed = recovery * detail::uniform(rng, 0.85, 1.15) * active;
            active += new_cases - new_removed;
            confirmed += new_cases;
            deceased += new_removed * fatality;
            recovered += new_removed * (1.0 - fatality);
        }
    }
    return out;
}

inline const std::vector<RegionSeed>& default_regions() {
    static const std::vector<RegionSeed> regions = {
        {"India", 1210569573},        {"Uttar Pradesh", 199812341}, {"Maharashtra", 112374333},
        {"Tamil Nadu", 72147030},     {"West Bengal", 91276115},    {"Telangana", 35003674},
        {"Gujarat", 60439692},        {"Bihar", 104099452},         {"Arunachal Pradesh", 1383727},
        {"Assam", 31205576},
    };
    return regions;
}

inline constexpr std::uint64_t kDefaultSeed = 20200605;

inline std::vector<CaseRecord> default_fixture() {
    return generate_cases(default_regions(), Date{2020, 6, 5}, Date{2020, 7, 25}, kDefaultSeed);
}

}  // namespace epifit::synthetic
