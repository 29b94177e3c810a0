// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 techlens contributors

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "json.hpp"
#include "techlens/dates.hpp"
#include "techlens/errors.hpp"
#include "techlens/text.hpp"

namespace techlens {

/// One retrieved document. `url` is the unique id; `body` is markup-stripped
/// plain text; `tags` are normalized, duplicate-free, in source order.
/// `extra` holds unknown fields from the corpus file so saves preserve them.
struct Article {
    std::string url;
    std::string title;
    std::string body;
    std::vector<std::string> tags;
    Date published{};
    std::optional<std::string> fetched_at;
    nlohmann::json extra = nlohmann::json::object();

    bool has_tag(std::string_view tag) const {
        return std::find(tags.begin(), tags.end(), tag) != tags.end();
    }

    friend bool operator==(const Article& a, const Article& b) {
        return a.url == b.url && a.title == b.title && a.body == b.body && a.tags == b.tags &&
               a.published == b.published && a.fetched_at == b.fetched_at && a.extra == b.extra;
    }
};

/// Normalizes and dedups a raw tag list, dropping empties, keeping order.
inline std::vector<std::string> normalize_tags(const std::vector<std::string>& raw) {
    std::vector<std::string> out;
    std::unordered_set<std::string> seen;
    for (const auto& r : raw) {
        std::string t = normalize_tag(r);
        if (t.empty()) continue;
        if (seen.insert(t).second) out.push_back(std::move(t));
    }
    return out;
}

/// Immutable, date-bounded article collection. Iteration order is stable:
/// sorted by (published, url). Safe to share read-only across threads.
class Corpus {
public:
    Corpus() = default;

    /// Sorts the articles and enforces the invariants: unique non-empty URLs,
    /// every published date inside `range`.
    Corpus(std::vector<Article> articles, std::string source_tag, DateRange range)
        : articles_(std::move(articles)), source_tag_(std::move(source_tag)), range_(range) {
        if (!range_.valid()) throw DomainError("corpus date range has from > to");
        std::sort(articles_.begin(), articles_.end(), [](const Article& a, const Article& b) {
            if (a.published != b.published) return a.published < b.published;
            return a.url < b.url;
        });
        std::unordered_set<std::string> urls;
        for (const auto& a : articles_) {
            if (a.url.empty()) throw DomainError("article with empty url");
            if (!urls.insert(a.url).second)
                throw DomainError("duplicate article url in corpus: " + a.url);
            if (!range_.contains(a.published))
                throw DomainError("article published outside corpus date range: " + a.url);
        }
    }

    /// Builds a corpus whose range is the observed [min, max] published date.
    static Corpus from_articles(std::vector<Article> articles, std::string source_tag = "") {
        DateRange range;
        if (!articles.empty()) {
            auto [lo, hi] = std::minmax_element(
                articles.begin(), articles.end(),
                [](const Article& a, const Article& b) { return a.published < b.published; });
            range = DateRange{lo->published, hi->published};
        }
        return Corpus(std::move(articles), std::move(source_tag), range);
    }

    const std::vector<Article>& articles() const noexcept { return articles_; }
    const std::string& source_tag() const noexcept { return source_tag_; }
    const DateRange& date_range() const noexcept { return range_; }

    std::size_t size() const noexcept { return articles_.size(); }
    bool empty() const noexcept { return articles_.empty(); }

    auto begin() const noexcept { return articles_.begin(); }
    auto end() const noexcept { return articles_.end(); }

private:
    std::vector<Article> articles_;
    std::string source_tag_;
    DateRange range_;
};

/// Keeps exactly the articles with published in [range.from, range.to] and
/// stamps the result with `range`. Idempotent for a fixed range.
inline Corpus filter_by_date(const Corpus& corpus, DateRange range) {
    if (!range.valid()) throw DomainError("filter_by_date: from > to");
    std::vector<Article> kept;
    for (const auto& a : corpus)
        if (range.contains(a.published)) kept.push_back(a);
    return Corpus(std::move(kept), corpus.source_tag(), range);
}

}  // namespace techlens
