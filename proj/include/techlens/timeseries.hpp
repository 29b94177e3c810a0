// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 techlens contributors

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "techlens/article.hpp"
#include "techlens/extract.hpp"

namespace techlens {

struct TimePoint {
    Date bucket{};
    std::int64_t count = 0;

    friend bool operator==(const TimePoint&, const TimePoint&) = default;
};

struct Trend {
    double slope = 0.0;      // per bucket index
    double intercept = 0.0;  // count at bucket 0
};

/// Per-bucket article counts. Buckets are strictly increasing with no gaps
/// (zero-filled between the first and last nonzero bucket).
struct TimeSeries {
    Granularity granularity = Granularity::month;
    std::vector<TimePoint> points;
    std::optional<Trend> trend;
};

namespace detail {

template <typename Pred>
TimeSeries bucketed_series(const Corpus& corpus, Granularity g, Pred&& include) {
    std::map<Date, std::int64_t> counts;
    for (const auto& article : corpus)
        if (include(article)) ++counts[bucket_start(article.published, g)];
    TimeSeries series;
    series.granularity = g;
    if (counts.empty()) return series;
    Date cursor = counts.begin()->first;
    Date last = counts.rbegin()->first;
    while (cursor <= last) {
        auto it = counts.find(cursor);
        series.points.push_back({cursor, it == counts.end() ? 0 : it->second});
        cursor = next_bucket(cursor, g);
    }
    return series;
}

}  // namespace detail

/// Articles carrying `tag`, bucketed by granularity.
inline TimeSeries tag_timeseries(const Corpus& corpus, std::string_view tag, Granularity g) {
    return detail::bucketed_series(corpus, g,
                                   [&](const Article& a) { return a.has_tag(tag); });
}

/// Articles whose document tech set is non-empty, bucketed by granularity.
inline TimeSeries tech_stats_series(const Corpus& corpus, const TechDictionary& dict,
                                    Granularity g) {
    return detail::bucketed_series(corpus, g, [&](const Article& a) {
        return !document_tech_set(a, dict).empty();
    });
}

/// Ordinary least-squares fit of count against bucket index 0..n-1.
inline Trend linear_trend(const TimeSeries& series) {
    const auto& pts = series.points;
    if (pts.size() < 2) throw DomainError("linear_trend needs at least 2 points");
    const double n = static_cast<double>(pts.size());
    double mean_x = (n - 1.0) / 2.0;
    double mean_y = 0.0;
    for (const auto& p : pts) mean_y += static_cast<double>(p.count);
    mean_y /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        double dx = static_cast<double>(i) - mean_x;
        sxx += dx * dx;
        sxy += dx * (static_cast<double>(pts[i].count) - mean_y);
    }
    Trend t;
    t.slope = sxy / sxx;
    t.intercept = mean_y - t.slope * mean_x;
    return t;
}

}  // namespace techlens
