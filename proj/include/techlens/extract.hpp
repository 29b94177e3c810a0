// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 techlens contributors

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "techlens/article.hpp"
#include "techlens/parallel.hpp"
#include "techlens/techdict.hpp"

namespace techlens {

enum class Field { title, body, tag };

inline std::string_view field_name(Field f) {
    switch (f) {
        case Field::title: return "title";
        case Field::body: return "body";
        default: return "tag";
    }
}

/// One technology mention in an article. Title/body mentions carry a
/// [begin, end) character span into their field; tag mentions do not.
struct Mention {
    std::size_t entry_index;
    std::string article_url;
    Field field;
    std::optional<std::pair<std::size_t, std::size_t>> span;
    std::string surface;

    friend bool operator==(const Mention&, const Mention&) = default;
};

/// All technology mentions in one article: non-overlapping title and body
/// matches (longest-at-start wins), plus one tag mention per Tech tag.
/// Output order is (title, body, tag), by start offset within a field.
inline std::vector<Mention> extract_mentions(const Article& article,
                                             const TechDictionary& dict) {
    std::vector<Mention> out;
    auto scan_field = [&](Field field, const std::string& text) {
        for (const auto& m : dict.scan(text))
            out.push_back({m.entry_index,
                           article.url,
                           field,
                           std::make_pair(m.begin, m.end),
                           text.substr(m.begin, m.end - m.begin)});
    };
    scan_field(Field::title, article.title);
    scan_field(Field::body, article.body);
    for (const auto& tag : article.tags)
        if (const TechEntry* entry = dict.classify(tag)) {
            std::size_t index = static_cast<std::size_t>(entry - dict.entries().data());
            out.push_back({index, article.url, Field::tag, std::nullopt, tag});
        }
    return out;
}

/// Canonical terms with at least one mention in any field of the article.
/// Presence is binary per document; result is sorted and duplicate-free.
inline std::vector<std::string> document_tech_set(const Article& article,
                                                  const TechDictionary& dict) {
    std::set<std::string> canon;
    for (const auto& m : extract_mentions(article, dict))
        canon.insert(dict.entry(m.entry_index).canonical);
    return {canon.begin(), canon.end()};
}

/// Corpus-level extraction summary.
struct CorpusTechStats {
    std::int64_t total_articles = 0;
    std::int64_t articles_with_tech = 0;
    std::map<std::string, std::int64_t> per_entry_doc_freq;
};

inline CorpusTechStats corpus_tech_stats(const Corpus& corpus, const TechDictionary& dict,
                                         unsigned jobs = 1) {
    std::vector<std::vector<std::string>> sets(corpus.size());
    parallel_for(corpus.size(), jobs, [&](std::size_t i) {
        sets[i] = document_tech_set(corpus.articles()[i], dict);
    });
    CorpusTechStats stats;
    stats.total_articles = static_cast<std::int64_t>(corpus.size());
    for (const auto& set : sets) {
        if (!set.empty()) ++stats.articles_with_tech;
        for (const auto& canon : set) ++stats.per_entry_doc_freq[canon];
    }
    return stats;
}

/// Line-delimited mentions export:
/// {url, field, start, end, surface, canonical, cluster}; start/end absent
/// for tag mentions.
inline void save_mentions(const Corpus& corpus, const TechDictionary& dict, std::ostream& out,
                          unsigned jobs = 1) {
    std::vector<std::vector<Mention>> per_article(corpus.size());
    parallel_for(corpus.size(), jobs, [&](std::size_t i) {
        per_article[i] = extract_mentions(corpus.articles()[i], dict);
    });
    for (const auto& mentions : per_article)
        for (const auto& m : mentions) {
            nlohmann::ordered_json j;
            j["url"] = m.article_url;
            j["field"] = std::string(field_name(m.field));
            if (m.span) {
                j["start"] = m.span->first;
                j["end"] = m.span->second;
            }
            j["surface"] = m.surface;
            j["canonical"] = dict.entry(m.entry_index).canonical;
            j["cluster"] = dict.entry(m.entry_index).cluster;
            out << j.dump() << '\n';
        }
}

inline nlohmann::ordered_json stats_to_json(const CorpusTechStats& stats) {
    nlohmann::ordered_json j;
    j["total_articles"] = stats.total_articles;
    j["articles_with_tech"] = stats.articles_with_tech;
    j["per_entry_doc_freq"] = stats.per_entry_doc_freq;
    return j;
}

}  // namespace techlens
