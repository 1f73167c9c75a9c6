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

#include "epifit/date.hpp"
#include "epifit/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace epifit {

/// One row of the normalized case CSV. All counts are cumulative.
struct CaseRecord {
    Date date;
    std::string region;
    std::int64_t confirmed = 0;
    std::int64_t recovered = 0;
    std::int64_t deceased = 0;

    bool operator==(const CaseRecord&) const = default;
};

struct ParsedCases {
    std::vector<CaseRecord> records;
    /// Non-fatal findings, e.g. cumulative counts that decrease between days.
    std::vector<std::string> warnings;
};

/// Observed series for one region over a gap-free daily window.
struct EpiSeries {
    std::string region;
    std::vector<Date> dates;
    std::vector<double> confirmed;  // cumulative
    std::vector<double> active;     // confirmed - recovered - deceased
    std::vector<double> removed;    // recovered + deceased

    std::size_t size() const { return dates.size(); }
    Date start() const { return dates.front(); }
    Date end() const { return dates.back(); }

    std::ptrdiff_t index_of(Date d) const {
        if (dates.empty()) return -1;
        const int off = d - dates.front();
        if (off < 0 || off >= static_cast<int>(dates.size())) return -1;
        return off;
    }
};

struct RegionRecord {
    std::string region;
    std::int64_t population = 0;
    double rural_pct = 0.0;        // informational
    double density_per_km2 = 0.0;  // informational
};

inline constexpr std::string_view kCaseCsvHeader = "date,region,confirmed,recovered,deceased";
inline constexpr std::string_view kDemographicsCsvHeader = "region,population,rural_pct,density";

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
    if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        if (line.ends_with('\r')) line.remove_suffix(1);
        lines.push_back(line);
        pos = nl + 1;
    }
    // Trailing blank lines are tolerated; interior ones are not.
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

inline std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = line.find(',', pos);
        if (comma == std::string_view::npos) {
            out.push_back(line.substr(pos));
            return out;
        }
        out.push_back(line.substr(pos, comma - pos));
        pos = comma + 1;
    }
}

inline std::string row_label(std::size_t row) { return "row " + std::to_string(row); }

inline std::int64_t parse_count(std::string_view field, std::size_t row, const char* name) {
    if (field.starts_with('-'))
        throw DataError(row_label(row) + ": negative " + name + " '" + std::string(field) + "'");
    if (field.empty() || !std::all_of(field.begin(), field.end(),
                                      [](char c) { return c >= '0' && c <= '9'; }))
        throw DataError(row_label(row) + ": unparseable " + name + " '" + std::string(field) +
                        "'");
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || p != field.data() + field.size())
        throw DataError(row_label(row) + ": unparseable " + name + " '" + std::string(field) +
                        "'");
    return v;
}

inline double parse_real(std::string_view field, std::size_t row, const char* name) {
    double v = 0.0;
    auto [p, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc{} || p != field.data() + field.size() ||
        !std::isfinite(v))
        throw DataError(row_label(row) + ": unparseable " + name + " '" + std::string(field) +
                        "'");
    return v;
}

}  // namespace detail

/// Parses the normalized case CSV. Rows are numbered from 1, starting with
/// the first line after the header. Numbers must be plain digit strings, so
/// grouped values such as "1,336,861" fail the field-count check instead of
/// being misread.
inline ParsedCases parse_case_csv(std::string_view text) {
    const auto lines = detail::split_lines(text);
    if (lines.empty() || lines.front() != kCaseCsvHeader)
        throw DataError("malformed header: expected '" + std::string(kCaseCsvHeader) + "'");

    ParsedCases out;
    std::set<std::pair<std::string, Date>> seen;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const std::size_t row = k;
        const auto fields = detail::split_fields(lines[k]);
        if (fields.size() != 5)
            throw DataError(detail::row_label(row) + ": expected 5 fields, found " +
                            std::to_string(fields.size()));
        CaseRecord rec;
        auto date = Date::parse(fields[0]);
        if (!date)
            throw DataError(detail::row_label(row) + ": unparseable date '" +
                            std::string(fields[0]) + "'");
        rec.date = *date;
        if (fields[1].empty()) throw DataError(detail::row_label(row) + ": empty region");
        rec.region = std::string(fields[1]);
        rec.confirmed = detail::parse_count(fields[2], row, "confirmed");
        rec.recovered = detail::parse_count(fields[3], row, "recovered");
        rec.deceased = detail::parse_count(fields[4], row, "deceased");
        if (rec.confirmed < rec.recovered + rec.deceased)
            throw DataError(detail::row_label(row) +
                            ": confirmed < recovered + deceased for " + rec.region + " on " +
                            rec.date.iso());
        if (!seen.emplace(rec.region, rec.date).second)
            throw DataError(detail::row_label(row) + ": duplicate record for " + rec.region +
                            " on " + rec.date.iso());
        out.records.push_back(std::move(rec));
    }

    // Cumulative fields must not decrease per region; reported, not fixed.
    std::map<std::string, std::vector<std::size_t>> by_region;
    for (std::size_t k = 0; k < out.records.size(); ++k)
        by_region[out.records[k].region].push_back(k);
    for (auto& [region, idx] : by_region) {
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            return out.records[a].date < out.records[b].date;
        });
        for (std::size_t j = 1; j < idx.size(); ++j) {
            const auto& prev = out.records[idx[j - 1]];
            const auto& cur = out.records[idx[j]];
            auto check = [&](std::int64_t a, std::int64_t b, const char* field) {
                if (b < a)
                    out.warnings.push_back(detail::row_label(idx[j] + 1) + ": cumulative " +
                                           field + " decreases for " + region + " on " +
                                           cur.date.iso() + " (" + std::to_string(a) + " -> " +
                                           std::to_string(b) + ")");
            };
            check(prev.confirmed, cur.confirmed, "confirmed");
            check(prev.recovered, cur.recovered, "recovered");
            check(prev.deceased, cur.deceased, "deceased");
        }
    }
    return out;
}

/// Inverse of parse_case_csv: header plus one line per record, in order.
inline std::string serialize_case_csv(const std::vector<CaseRecord>& records) {
    std::string out(kCaseCsvHeader);
    out += '\n';
    for (const auto& r : records) {
        out += r.date.iso();
        out += ',';
        out += r.region;
        out += ',' + std::to_string(r.confirmed) + ',' + std::to_string(r.recovered) + ',' +
               std::to_string(r.deceased) + '\n';
    }
    return out;
}

/// Builds the daily series for `region` over [start, end] inclusive.
/// Missing days are an error (never interpolated), as is any decrease in
/// removed = recovered + deceased.
inline EpiSeries derive_epi_series(const std::vector<CaseRecord>& records,
                                   const std::string& region, Date start, Date end) {
    if (end < start) throw InvalidArgument("window end precedes start");
    const int len = (end - start) + 1;
    std::vector<const CaseRecord*> slot(static_cast<std::size_t>(len), nullptr);
    for (const auto& r : records) {
        if (r.region != region || r.date < start || end < r.date) continue;
        slot[static_cast<std::size_t>(r.date - start)] = &r;
    }
    std::vector<std::string> gaps;
    for (int k = 0; k < len; ++k)
        if (!slot[static_cast<std::size_t>(k)]) gaps.push_back((start + k).iso());
    if (static_cast<int>(gaps.size()) == len)
        throw DataError("no records for region '" + region + "' in window " + start.iso() +
                        ".." + end.iso());
    if (!gaps.empty()) {
        std::string msg = "missing days for " + region + ":";
        for (const auto& g : gaps) msg += " " + g;
        throw DataError(msg);
    }

    EpiSeries s;
    s.region = region;
    std::vector<std::string> violations;
    for (int k = 0; k < len; ++k) {
        const CaseRecord& r = *slot[static_cast<std::size_t>(k)];
        const std::int64_t active = r.confirmed - r.recovered - r.deceased;
        const std::int64_t removed = r.recovered + r.deceased;
        if (active < 0) violations.push_back(r.date.iso() + " (negative active)");
        if (!s.removed.empty() && static_cast<double>(removed) < s.removed.back())
            violations.push_back(r.date.iso() + " (removed decreases)");
        s.dates.push_back(r.date);
        s.confirmed.push_back(static_cast<double>(r.confirmed));
        s.active.push_back(static_cast<double>(active));
        s.removed.push_back(static_cast<double>(removed));
    }
    if (!violations.empty()) {
        std::string msg = "series invariant violated for " + region + ":";
        for (const auto& v : violations) msg += " " + v;
        throw DataError(msg);
    }
    return s;
}

/// Reads `region,population,rural_pct,density`.
inline std::vector<RegionRecord> load_demographics(std::string_view text) {
    const auto lines = detail::split_lines(text);
    if (lines.empty() || lines.front() != kDemographicsCsvHeader)
        throw DataError("malformed header: expected '" + std::string(kDemographicsCsvHeader) +
                        "'");
    std::vector<RegionRecord> out;
    std::set<std::string> names;
    for (std::size_t row = 1; row < lines.size(); ++row) {
        const auto fields = detail::split_fields(lines[row]);
        if (fields.size() != 4)
            throw DataError(detail::row_label(row) + ": expected 4 fields, found " +
                            std::to_string(fields.size()));
        RegionRecord r;
        r.region = std::string(fields[0]);
        if (r.region.empty()) throw DataError(detail::row_label(row) + ": empty region");
        if (fields[1].starts_with('-') || fields[1] == "0")
            throw DataError(detail::row_label(row) + ": population must be positive");
        r.population = detail::parse_count(fields[1], row, "population");
        if (r.population <= 0)
            throw DataError(detail::row_label(row) + ": population must be positive");
        r.rural_pct = detail::parse_real(fields[2], row, "rural_pct");
        if (r.rural_pct < 0.0 || r.rural_pct > 100.0)
            throw DataError(detail::row_label(row) + ": rural_pct outside [0, 100]");
        r.density_per_km2 = detail::parse_real(fields[3], row, "density");
        if (r.density_per_km2 <= 0.0)
            throw DataError(detail::row_label(row) + ": density must be positive");
        if (!names.insert(r.region).second)
            throw DataError(detail::row_label(row) + ": duplicate region '" + r.region + "'");
        out.push_back(std::move(r));
    }
    return out;
}

inline const RegionRecord& find_region(const std::vector<RegionRecord>& regions,
                                       const std::string& name) {
    for (const auto& r : regions)
        if (r.region == name) return r;
    throw DataError("region '" + name + "' not found in demographics");
}

}  // namespace epifit
