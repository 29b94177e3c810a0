// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 techlens contributors

#pragma once

#include <chrono>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

#include "techlens/errors.hpp"

namespace techlens {

// Publication dates are timezone-free calendar dates throughout.
using Date = std::chrono::year_month_day;

inline std::chrono::sys_days to_days(const Date& d) { return std::chrono::sys_days{d}; }

/// Parses strict ISO `YYYY-MM-DD`. Returns nullopt for anything else,
/// including syntactically valid but non-existent dates (2020-02-30).
inline std::optional<Date> parse_date(std::string_view s) {
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
    auto digits = [&](std::size_t pos, std::size_t n) -> std::optional<int> {
        int v = 0;
        for (std::size_t i = pos; i < pos + n; ++i) {
            if (s[i] < '0' || s[i] > '9') return std::nullopt;
            v = v * 10 + (s[i] - '0');
        }
        return v;
    };
    auto y = digits(0, 4), m = digits(5, 2), d = digits(8, 2);
    if (!y || !m || !d) return std::nullopt;
    Date date{std::chrono::year{*y}, std::chrono::month{static_cast<unsigned>(*m)},
              std::chrono::day{static_cast<unsigned>(*d)}};
    if (!date.ok()) return std::nullopt;
    return date;
}

inline std::string format_date(const Date& d) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", int(d.year()), unsigned(d.month()),
                  unsigned(d.day()));
    return buf;
}

/// Inclusive calendar interval [from, to].
struct DateRange {
    Date from{std::chrono::year{1970}, std::chrono::January, std::chrono::day{1}};
    Date to{std::chrono::year{1970}, std::chrono::January, std::chrono::day{1}};

    bool contains(const Date& d) const { return from <= d && d <= to; }
    bool valid() const { return from <= to; }

    friend bool operator==(const DateRange&, const DateRange&) = default;
};

enum class Granularity { day, week, month };

inline std::optional<Granularity> parse_granularity(std::string_view s) {
    if (s == "day") return Granularity::day;
    if (s == "week") return Granularity::week;
    if (s == "month") return Granularity::month;
    return std::nullopt;
}

inline std::string_view granularity_name(Granularity g) {
    switch (g) {
        case Granularity::day: return "day";
        case Granularity::week: return "week";
        default: return "month";
    }
}

/// First day of the bucket containing `d`. Weeks start on Monday.
inline Date bucket_start(const Date& d, Granularity g) {
    using namespace std::chrono;
    switch (g) {
        case Granularity::day:
            return d;
        case Granularity::week: {
            sys_days sd{d};
            weekday wd{sd};
            return Date{sd - days{wd.iso_encoding() - 1}};
        }
        default:
            return Date{d.year(), d.month(), day{1}};
    }
}

inline Date next_bucket(const Date& d, Granularity g) {
    using namespace std::chrono;
    switch (g) {
        case Granularity::day:
            return Date{sys_days{d} + days{1}};
        case Granularity::week:
            return Date{sys_days{d} + days{7}};
        default: {
            year_month ym{d.year(), d.month()};
            ym += months{1};
            return Date{ym.year(), ym.month(), day{1}};
        }
    }
}

}  // namespace techlens
