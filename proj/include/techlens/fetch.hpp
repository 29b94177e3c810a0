// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 techlens contributors

#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#ifdef TECHLENS_HAS_OPENSSL
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>

#include <nlohmann/json.hpp>

#include "techlens/article.hpp"
#include "techlens/dates.hpp"
#include "techlens/errors.hpp"
#include "techlens/html.hpp"
#include "techlens/text.hpp"

// Retrieval of tag archives and related-tag lists. All network access goes
// through the Transport interface so runs can be replayed from recorded
// fixtures: FixtureTransport maps each URL to a file named by its
// percent-encoding, HttpTransport does real requests with per-host
// throttling and bounded retries. Setting TECHLENS_OFFLINE (to anything but
// "0") forbids constructing an HttpTransport at all.

namespace techlens {

struct FetchPolicy {
    std::string endpoint = "https://medium.com";
    int page_cap = 10000;       // hard stop on archive pagination
    int retries = 2;            // extra attempts on connect failure / 5xx
    int min_interval_ms = 1000; // per-host politeness delay
    bool skip_parse_errors = false;
};

struct FetchReport {
    std::int64_t pages_fetched = 0;
    std::int64_t articles_fetched = 0;
    std::int64_t duplicates_skipped = 0;
    std::int64_t bad_dates_skipped = 0;
    std::int64_t out_of_range_skipped = 0;
    std::int64_t parse_errors_skipped = 0;
    std::string stop_reason;  // "exhausted" | "older-than-range" | "page-cap"
};

inline nlohmann::json to_json(const FetchReport& r) {
    return nlohmann::json{{"pages_fetched", r.pages_fetched},
                          {"articles_fetched", r.articles_fetched},
                          {"duplicates_skipped", r.duplicates_skipped},
                          {"bad_dates_skipped", r.bad_dates_skipped},
                          {"out_of_range_skipped", r.out_of_range_skipped},
                          {"parse_errors_skipped", r.parse_errors_skipped},
                          {"stop_reason", r.stop_reason}};
}

class Transport {
public:
    virtual ~Transport() = default;
    virtual std::string get(const std::string& url) = 0;
};

/// Replays recorded responses from a directory. The file for a URL is the
/// URL percent-encoded with no safe characters beyond the RFC 3986
/// unreserved set, which keeps the mapping bijective and filesystem-safe.
class FixtureTransport final : public Transport {
public:
    explicit FixtureTransport(std::filesystem::path dir) : dir_(std::move(dir)) {}

    std::string get(const std::string& url) override {
        auto path = dir_ / percent_encode(url);
        std::ifstream in(path, std::ios::binary);
        if (!in) throw TransportError(url, "no fixture at " + path.string());
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }

    static std::filesystem::path fixture_path(const std::filesystem::path& dir,
                                              const std::string& url) {
        return dir / percent_encode(url);
    }

private:
    std::filesystem::path dir_;
};

inline bool offline_mode() {
    const char* v = std::getenv("TECHLENS_OFFLINE");
    return v != nullptr && *v != '\0' && std::string_view(v) != "0";
}

namespace detail {

struct UrlParts {
    std::string base;  // scheme://host[:port]
    std::string host;
    std::string target;  // path + query, at least "/"
};

inline UrlParts split_url(const std::string& url) {
    auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos)
        throw TransportError(url, "URL must be absolute");
    auto path_begin = url.find('/', scheme_end + 3);
    if (path_begin == std::string::npos)
        return {url, url.substr(scheme_end + 3), "/"};
    return {url.substr(0, path_begin),
            url.substr(scheme_end + 3, path_begin - scheme_end - 3),
            url.substr(path_begin)};
}

}  // namespace detail

/// Live HTTP transport. Every attempted request bumps a process-wide
/// counter, which lets tests assert that offline runs touched the network
/// exactly zero times.
class HttpTransport final : public Transport {
public:
    explicit HttpTransport(FetchPolicy policy = {}) : policy_(std::move(policy)) {
        if (offline_mode())
            throw DomainError(
                "TECHLENS_OFFLINE is set: live HTTP transport is not allowed");
    }

    std::string get(const std::string& url) override {
        auto parts = detail::split_url(url);
        std::string last_error;
        for (int attempt = 0; attempt <= policy_.retries; ++attempt) {
            throttle(parts.host);
            ++request_counter();
            httplib::Client client(parts.base);
            if (!client.is_valid())
                throw TransportError(url, "unsupported URL scheme in this build");
            client.set_follow_location(true);
            auto res = client.Get(parts.target);
            if (res && res->status >= 200 && res->status < 300) return res->body;
            if (res) {
                last_error = "HTTP status " + std::to_string(res->status);
                if (res->status < 500) break;  // only 5xx is worth retrying
            } else {
                last_error = "connection failed (" + httplib::to_string(res.error()) + ")";
            }
        }
        throw TransportError(url, last_error);
    }

    static std::uint64_t request_count() { return request_counter().load(); }

private:
    static std::atomic<std::uint64_t>& request_counter() {
        static std::atomic<std::uint64_t> counter{0};
        return counter;
    }

    void throttle(const std::string& host) {
        if (policy_.min_interval_ms <= 0) return;
        std::unique_lock lock(mutex_);
        auto now = std::chrono::steady_clock::now();
        auto it = last_request_.find(host);
        if (it != last_request_.end()) {
            auto ready = it->second + std::chrono::milliseconds(policy_.min_interval_ms);
            if (ready > now) {
                lock.unlock();
                std::this_thread::sleep_until(ready);
                lock.lock();
                now = std::chrono::steady_clock::now();
            }
        }
        last_request_[host] = now;
    }

    FetchPolicy policy_;
    std::mutex mutex_;
    std::map<std::string, std::chrono::steady_clock::time_point> last_request_;
};

/// Fixture transport when a directory is given; otherwise live HTTP, unless
/// TECHLENS_OFFLINE forbids it.
inline std::unique_ptr<Transport> make_transport(const std::string& fixture_dir,
                                                 const FetchPolicy& policy = {}) {
    if (!fixture_dir.empty())
        return std::make_unique<FixtureTransport>(fixture_dir);
    if (offline_mode())
        throw DomainError(
            "TECHLENS_OFFLINE is set but no fixture directory was provided");
    return std::make_unique<HttpTransport>(policy);
}

namespace detail {

inline std::string strip_trailing_slash(std::string s) {
    while (!s.empty() && s.back() == '/') s.pop_back();
    return s;
}

}  // namespace detail

inline std::string archive_url(const std::string& endpoint, const std::string& tag,
                               int page) {
    return detail::strip_trailing_slash(endpoint) + "/tag/" + normalize_tag(tag) +
           "/archive?page=" + std::to_string(page);
}

inline std::string tag_page_url(const std::string& endpoint, const std::string& tag) {
    return detail::strip_trailing_slash(endpoint) + "/tag/" + normalize_tag(tag);
}

inline std::string resolve_url(const std::string& endpoint, const std::string& href) {
    if (href.rfind("http://", 0) == 0 || href.rfind("https://", 0) == 0) return href;
    std::string base = detail::strip_trailing_slash(endpoint);
    if (!href.empty() && href[0] == '/') return base + href;
    return base + "/" + href;
}

struct ArchiveEntry {
    std::string url;
    std::optional<Date> published;  // nullopt when datetime is missing or bad
};

/// Archive pages list posts as <li class="archive-item"> blocks, each with
/// an <a class="post-link" href=...> and a <time datetime="YYYY-MM-DD">.
inline std::vector<ArchiveEntry> parse_archive_page(std::string_view html,
                                                    const std::string& endpoint) {
    std::vector<ArchiveEntry> entries;
    for (const auto& item : find_elements(html, "li", "archive-item")) {
        auto links = find_elements(item.inner_html, "a", "post-link");
        if (links.empty() || !links.front().attr("href")) continue;
        ArchiveEntry entry;
        entry.url = resolve_url(endpoint, *links.front().attr("href"));
        auto times = find_elements(item.inner_html, "time");
        if (!times.empty())
            if (const std::string* dt = times.front().attr("datetime"))
                entry.published = parse_date(*dt);
        entries.push_back(std::move(entry));
    }
    return entries;
}

/// Article pages carry <h1 class="post-title">, <time class="published"
/// datetime=...>, <section class="post-body">, and <ul class="post-tags">
/// whose <a> children are the tags.
inline Article parse_article_page(std::string_view html, const std::string& url) {
    Article article;
    article.url = url;

    auto titles = find_elements(html, "h1", "post-title");
    if (titles.empty()) throw ParseError(url, 0, "no post title found");
    article.title = strip_markup(titles.front().inner_html);

    auto times = find_elements(html, "time", "published");
    const std::string* dt =
        times.empty() ? nullptr : times.front().attr("datetime");
    if (!dt) throw ParseError(url, 0, "no publication date found");
    auto published = parse_date(*dt);
    if (!published) throw ParseError(url, 0, "invalid publication date '" + *dt + "'");
    article.published = *published;

    auto bodies = find_elements(html, "section", "post-body");
    if (bodies.empty()) throw ParseError(url, 0, "no post body found");
    article.body = strip_markup(bodies.front().inner_html);

    std::vector<std::string> raw_tags;
    auto tag_lists = find_elements(html, "ul", "post-tags");
    if (!tag_lists.empty())
        for (const auto& a : find_elements(tag_lists.front().inner_html, "a"))
            raw_tags.push_back(strip_markup(a.inner_html));
    article.tags = normalize_tags(raw_tags);
    return article;
}

/// The related-technology list on a tag page: <ul class="related-tags">
/// whose <a> children name the tags. Missing list means no related tags.
inline std::vector<std::string> parse_related_tags(std::string_view html) {
    auto lists = find_elements(html, "ul", "related-tags");
    if (lists.empty()) return {};
    std::vector<std::string> raw;
    for (const auto& a : find_elements(lists.front().inner_html, "a"))
        raw.push_back(strip_markup(a.inner_html));
    return normalize_tags(raw);
}

struct FetchResult {
    Corpus corpus;
    FetchReport report;
};

/// Walks the paginated archive of a tag, newest first, fetching every post
/// published inside `range`. Pagination stops on an empty page, on a page
/// whose dated entries all precede the range, or at the page cap. Repeated
/// URLs keep their first occurrence; entries with unusable dates are
/// counted and skipped, as are posts that fail to parse when the policy
/// allows it.
inline FetchResult fetch_tag_archive(Transport& transport, const std::string& tag,
                                     const DateRange& range,
                                     const FetchPolicy& policy = {}) {
    if (!range.valid()) throw DomainError("date range is empty");
    const std::string norm_tag = normalize_tag(tag);
    FetchReport report;
    std::vector<Article> articles;
    std::set<std::string> seen;

    for (int page = 1;; ++page) {
        if (page > policy.page_cap) {
            report.stop_reason = "page-cap";
            break;
        }
        std::string html = transport.get(archive_url(policy.endpoint, norm_tag, page));
        ++report.pages_fetched;
        auto entries = parse_archive_page(html, policy.endpoint);
        if (entries.empty()) {
            report.stop_reason = "exhausted";
            break;
        }

        bool any_dated = false;
        bool all_older = true;
        for (const auto& entry : entries) {
            if (!entry.published) {
                ++report.bad_dates_skipped;
                continue;
            }
            any_dated = true;
            if (!(*entry.published < range.from)) all_older = false;
            if (!seen.insert(entry.url).second) {
                ++report.duplicates_skipped;
                continue;
            }
            if (!range.contains(*entry.published)) {
                ++report.out_of_range_skipped;
                continue;
            }
            try {
                Article article =
                    parse_article_page(transport.get(entry.url), entry.url);
                if (!range.contains(article.published)) {
                    ++report.out_of_range_skipped;
                    continue;
                }
                articles.push_back(std::move(article));
                ++report.articles_fetched;
            } catch (const ParseError&) {
                if (!policy.skip_parse_errors) throw;
                ++report.parse_errors_skipped;
            }
        }
        if (any_dated && all_older) {
            report.stop_reason = "older-than-range";
            break;
        }
    }

    return {Corpus(std::move(articles), norm_tag, range), std::move(report)};
}

inline std::vector<std::string> fetch_related_tags(Transport& transport,
                                                   const std::string& tag,
                                                   const FetchPolicy& policy = {}) {
    return parse_related_tags(transport.get(tag_page_url(policy.endpoint, tag)));
}

}  // namespace techlens
