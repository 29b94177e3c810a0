// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 techlens contributors

#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <unordered_map>

#include "json.hpp"
#include "techlens/article.hpp"

// Corpus file format: UTF-8, one JSON object per line.
// Required: url, title, body (strings), tags (array of strings),
// published (YYYY-MM-DD). Optional: fetched_at (ISO timestamp string).
// Unknown fields are ignored on load but preserved on save.

namespace techlens {

namespace detail {

inline Article article_from_json(const nlohmann::json& j, const std::string& source,
                                 std::size_t line) {
    if (!j.is_object()) throw SchemaError("record", line, "expected a JSON object in " + source);

    auto require_string = [&](const char* field) -> std::string {
        auto it = j.find(field);
        if (it == j.end())
            throw SchemaError(field, line, std::string("missing required field \"") + field +
                                               "\" in " + source);
        if (!it->is_string())
            throw SchemaError(field, line,
                              std::string("field \"") + field + "\" must be a string");
        return it->get<std::string>();
    };

    Article a;
    a.url = require_string("url");
    if (a.url.empty()) throw SchemaError("url", line, "url must be non-empty");
    a.title = require_string("title");
    a.body = require_string("body");

    auto tags_it = j.find("tags");
    if (tags_it == j.end())
        throw SchemaError("tags", line, "missing required field \"tags\" in " + source);
    if (!tags_it->is_array())
        throw SchemaError("tags", line, "field \"tags\" must be an array of strings");
    std::vector<std::string> raw_tags;
    for (const auto& t : *tags_it) {
        if (!t.is_string())
            throw SchemaError("tags", line, "field \"tags\" must be an array of strings");
        raw_tags.push_back(t.get<std::string>());
    }
    a.tags = normalize_tags(raw_tags);

    std::string published = require_string("published");
    auto date = parse_date(published);
    if (!date)
        throw SchemaError("published", line, "invalid date \"" + published + "\" (want YYYY-MM-DD)");
    a.published = *date;

    if (auto it = j.find("fetched_at"); it != j.end()) {
        if (!it->is_string())
            throw SchemaError("fetched_at", line, "field \"fetched_at\" must be a string");
        a.fetched_at = it->get<std::string>();
    }

    for (auto it = j.begin(); it != j.end(); ++it) {
        const auto& key = it.key();
        if (key == "url" || key == "title" || key == "body" || key == "tags" ||
            key == "published" || key == "fetched_at")
            continue;
        a.extra[key] = it.value();
    }
    return a;
}

inline nlohmann::ordered_json article_to_json(const Article& a) {
    nlohmann::ordered_json j;
    j["url"] = a.url;
    j["title"] = a.title;
    j["body"] = a.body;
    j["tags"] = a.tags;
    j["published"] = format_date(a.published);
    if (a.fetched_at) j["fetched_at"] = *a.fetched_at;
    for (auto it = a.extra.begin(); it != a.extra.end(); ++it) j[it.key()] = it.value();
    return j;
}

}  // namespace detail

inline Corpus load_corpus(std::istream& in, const std::string& source) {
    std::vector<Article> articles;
    std::unordered_map<std::string, std::size_t> first_seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        bool blank = line.find_first_not_of(" \t") == std::string::npos;
        if (blank) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded())
            throw ParseError(source, lineno, "malformed JSON record");
        Article a = detail::article_from_json(j, source, lineno);
        auto [it, inserted] = first_seen.emplace(a.url, lineno);
        if (!inserted)
            throw SchemaError("url", lineno,
                              "duplicate url \"" + a.url + "\" (first seen at line " +
                                  std::to_string(it->second) + ")");
        articles.push_back(std::move(a));
    }
    return Corpus::from_articles(std::move(articles));
}

inline Corpus load_corpus(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(path, "cannot open corpus file");
    return load_corpus(in, path);
}

inline void save_corpus(const Corpus& corpus, std::ostream& out) {
    for (const auto& a : corpus) out << detail::article_to_json(a).dump() << '\n';
}

inline void save_corpus(const Corpus& corpus, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError(path, "cannot open corpus file for writing");
    save_corpus(corpus, out);
    if (!out) throw IoError(path, "write failed");
}

}  // namespace techlens
