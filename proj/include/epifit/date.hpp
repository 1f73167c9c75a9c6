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

#include <charconv>
#include <chrono>
#include <compare>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

namespace epifit {

/// Calendar day. Thin wrapper over sys_days so day arithmetic is integral.
class Date {
public:
    constexpr Date() = default;
    constexpr explicit Date(std::chrono::sys_days days) : days_(days) {}
    constexpr Date(int year, unsigned month, unsigned day)
        : days_(std::chrono::year{year} / std::chrono::month{month} / std::chrono::day{day}) {}

    constexpr std::chrono::sys_days days() const { return days_; }

    constexpr Date operator+(int n) const { return Date{days_ + std::chrono::days{n}}; }
    constexpr Date operator-(int n) const { return Date{days_ - std::chrono::days{n}}; }
    constexpr int operator-(Date other) const {
        return static_cast<int>((days_ - other.days_).count());
    }

    constexpr auto operator<=>(const Date&) const = default;

    /// Strict `YYYY-MM-DD`. Returns nullopt for anything else, including
    /// impossible calendar dates such as 2020-02-30.
    static std::optional<Date> parse(std::string_view text) {
        if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
        int y = 0;
        unsigned m = 0, d = 0;
        auto digits = [](std::string_view s, auto& out) {
            for (char c : s)
                if (c < '0' || c > '9') return false;
            auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
            return ec == std::errc{} && p == s.data() + s.size();
        };
        if (!digits(text.substr(0, 4), y) || !digits(text.substr(5, 2), m) ||
            !digits(text.substr(8, 2), d))
            return std::nullopt;
        std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{m},
                                        std::chrono::day{d}};
        if (!ymd.ok()) return std::nullopt;
        return Date{std::chrono::sys_days{ymd}};
    }

    static Date parse_or_throw(std::string_view text) {
        auto d = parse(text);
        if (!d) throw InvalidArgument("invalid date '" + std::string(text) + "' (expected YYYY-MM-DD)");
        return *d;
    }

    std::string iso() const {
        std::chrono::year_month_day ymd{days_};
        char buf[16];
        std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                      static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
        return buf;
    }

private:
    std::chrono::sys_days days_{};
};

}  // namespace epifit
