// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 techlens contributors

#pragma once

// Independent re-implementations used to cross-check the library. These are
// deliberately written the slow, obvious way — straight loops, raw-sum
// formulas — and share no scanning or counting code with the headers under
// test.

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <techlens/article.hpp>
#include <techlens/cooc.hpp>
#include <techlens/techdict.hpp>
#include <techlens/timeseries.hpp>

namespace oracle {

struct Match {
    std::size_t entry;
    std::size_t begin;
    std::size_t end;
};

namespace detail {

inline bool word_char(unsigned char c) {
    return std::isalnum(c) || c >= 0x80;
}

inline bool space_char(unsigned char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

inline char lower(char c) {
    return c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c;
}

// Splits a normalized surface on single spaces and hyphens.
inline std::vector<std::string> surface_tokens(std::string_view surface) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char c : surface) {
        if (c == ' ' || c == '-') {
            if (!cur.empty()) tokens.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(lower(c));
        }
    }
    if (!cur.empty()) tokens.push_back(cur);
    return tokens;
}

// Attempts to match one token sequence at text[pos]; returns one past the
// match on success. Final token may carry an "es" or "s" suffix (longest
// attempted first). The match must sit on word boundaries.
inline std::optional<std::size_t> try_here(std::string_view text, std::size_t pos,
                                           const std::vector<std::string>& tokens) {
    if (pos > 0 && word_char(static_cast<unsigned char>(text[pos - 1]))) return std::nullopt;
    std::size_t i = pos;
    for (std::size_t t = 0; t < tokens.size(); ++t) {
        if (t > 0) {
            if (i < text.size() && space_char(static_cast<unsigned char>(text[i]))) {
                while (i < text.size() && space_char(static_cast<unsigned char>(text[i]))) ++i;
            } else if (i < text.size() && text[i] == '-') {
                ++i;
            } else {
                return std::nullopt;
            }
        }
        const std::string& tok = tokens[t];
        if (i + tok.size() > text.size()) return std::nullopt;
        for (std::size_t k = 0; k < tok.size(); ++k)
            if (lower(text[i + k]) != tok[k]) return std::nullopt;
        i += tok.size();
        if (t + 1 == tokens.size()) {
            for (std::string_view suffix : {"es", "s", ""}) {
                std::size_t j = i;
                bool ok = j + suffix.size() <= text.size();
                for (std::size_t k = 0; ok && k < suffix.size(); ++k)
                    if (lower(text[j + k]) != suffix[k]) ok = false;
                if (!ok) continue;
                j += suffix.size();
                if (j < text.size() && word_char(static_cast<unsigned char>(text[j]))) continue;
                return j;
            }
            return std::nullopt;
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Quadratic scan over every position and every surface: leftmost match
/// wins, longest (then lowest entry index) breaks ties, scanning resumes
/// after each match.
inline std::vector<Match> scan_text(std::string_view text,
                                    const techlens::TechDictionary& dict) {
    // Expand every entry into its token sequences once.
    struct Surface {
        std::size_t entry;
        std::vector<std::string> tokens;
    };
    std::vector<Surface> surfaces;
    for (std::size_t e = 0; e < dict.entries().size(); ++e) {
        const auto& entry = dict.entries()[e];
        surfaces.push_back({e, detail::surface_tokens(entry.canonical)});
        for (const auto& alias : entry.aliases)
            surfaces.push_back({e, detail::surface_tokens(alias)});
    }

    std::vector<Match> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::optional<Match> best;
        for (const auto& s : surfaces) {
            auto end = detail::try_here(text, pos, s.tokens);
            if (!end) continue;
            if (!best || *end > best->end ||
                (*end == best->end && s.entry < best->entry))
                best = Match{s.entry, pos, *end};
        }
        if (best) {
            out.push_back(*best);
            pos = best->end;
        } else {
            ++pos;
        }
    }
    return out;
}

/// Document-level co-occurrence recount: double loop over label pairs and
/// documents, counting membership with std::set.
inline std::int64_t count_pair(const std::vector<std::set<std::string>>& docs,
                               const std::string& a, const std::string& b) {
    std::int64_t n = 0;
    for (const auto& d : docs)
        if (d.count(a) && d.count(b)) ++n;
    return n;
}

inline std::vector<std::set<std::string>> item_sets(const techlens::Corpus& corpus,
                                                    const techlens::ItemSetFn& items) {
    std::vector<std::set<std::string>> out;
    for (const auto& article : corpus) {
        auto v = items(article);
        out.emplace_back(v.begin(), v.end());
    }
    return out;
}

/// Ordinary least squares through the raw-sum normal equations, a different
/// route than the centered computation in the library.
struct Fit {
    double slope;
    double intercept;
};

inline Fit least_squares_raw(const std::vector<double>& y) {
    const double n = static_cast<double>(y.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        double x = static_cast<double>(i);
        sx += x;
        sy += y[i];
        sxx += x * x;
        sxy += x * y[i];
    }
    double denom = n * sxx - sx * sx;
    double slope = (n * sxy - sx * sy) / denom;
    double intercept = (sy - slope * sx) / n;
    return {slope, intercept};
}

/// Month-bucket recount using plain year/month arithmetic (no library date
/// helpers): returns bucket -> count including zero-filled gaps.
inline std::map<std::string, std::int64_t> month_recount(
    const std::vector<std::string>& iso_dates) {
    std::map<int, std::int64_t> by_index;  // year*12 + (month-1)
    for (const auto& d : iso_dates) {
        int year = std::stoi(d.substr(0, 4));
        int month = std::stoi(d.substr(5, 2));
        ++by_index[year * 12 + (month - 1)];
    }
    std::map<std::string, std::int64_t> out;
    if (by_index.empty()) return out;
    for (int i = by_index.begin()->first; i <= by_index.rbegin()->first; ++i) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%04d-%02d-01", i / 12, i % 12 + 1);
        out[buf] = by_index.count(i) ? by_index[i] : 0;
    }
    return out;
}

}  // namespace oracle
