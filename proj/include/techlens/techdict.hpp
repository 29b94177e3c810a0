// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 techlens contributors

#pragma once

#include <fstream>
#include <istream>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "techlens/errors.hpp"
#include "techlens/text.hpp"

namespace techlens {

/// One gazetteer entry: a canonical technology term, its cluster label, and
/// alias surface forms. All surfaces are stored space-normalized lowercase.
struct TechEntry {
    std::string canonical;
    std::string cluster;
    std::vector<std::string> aliases;
};

/// Compiled matcher for one surface form.
///
/// Match rules: case-insensitive, anchored at word boundaries on both ends.
/// The surface splits into tokens on whitespace and hyphens; between tokens
/// the text may carry a single whitespace run or a bare hyphen. The final
/// token additionally admits an "s" or "es" suffix, longest variant first.
class TermPattern {
public:
    explicit TermPattern(std::string_view surface) {
        std::string norm = normalize_phrase(surface);
        std::string tok;
        for (char c : norm) {
            if (c == ' ' || c == '-') {
                if (!tok.empty()) tokens_.push_back(std::exchange(tok, {}));
            } else {
                tok.push_back(c);
            }
        }
        if (!tok.empty()) tokens_.push_back(std::move(tok));
        if (tokens_.empty()) throw DomainError("empty surface form");
    }

    const std::vector<std::string>& tokens() const noexcept { return tokens_; }

    /// Attempts a match starting exactly at text offset `pos` (which callers
    /// ensure is a word-boundary start). Returns the end offset on success.
    std::optional<std::size_t> match_at(std::string_view text, std::size_t pos) const {
        std::size_t q = pos;
        for (std::size_t ti = 0; ti < tokens_.size(); ++ti) {
            if (ti > 0) {
                // Separator: one whitespace run, or one bare hyphen.
                if (q < text.size() && text[q] == '-') {
                    ++q;
                } else if (q < text.size() && is_space_char(text[q])) {
                    while (q < text.size() && is_space_char(text[q])) ++q;
                } else {
                    return std::nullopt;
                }
            }
            const std::string& tok = tokens_[ti];
            if (q + tok.size() > text.size()) return std::nullopt;
            for (std::size_t k = 0; k < tok.size(); ++k)
                if (ascii_lower(text[q + k]) != tok[k]) return std::nullopt;
            q += tok.size();
            if (ti + 1 == tokens_.size()) {
                auto boundary = [&](std::size_t p) {
                    return p == text.size() ||
                           !is_word_char(static_cast<unsigned char>(text[p]));
                };
                if (q + 2 <= text.size() && ascii_lower(text[q]) == 'e' &&
                    ascii_lower(text[q + 1]) == 's' && boundary(q + 2))
                    return q + 2;
                if (q + 1 <= text.size() && ascii_lower(text[q]) == 's' && boundary(q + 1))
                    return q + 1;
                if (boundary(q)) return q;
                return std::nullopt;
            }
        }
        return std::nullopt;
    }

    /// True when the pattern occurs anywhere in `text`.
    bool matches_in(std::string_view text) const {
        for (std::size_t p = 0; p < text.size(); ++p) {
            if (!is_word_char(static_cast<unsigned char>(text[p]))) continue;
            if (p > 0 && is_word_char(static_cast<unsigned char>(text[p - 1]))) continue;
            if (match_at(text, p)) return true;
        }
        return false;
    }

    /// True when the pattern consumes the whole string (tag classification).
    bool matches_tag(std::string_view tag) const {
        if (tag.empty()) return false;
        if (!is_word_char(static_cast<unsigned char>(tag[0]))) return false;
        auto end = match_at(tag, 0);
        return end && *end == tag.size();
    }

private:
    std::vector<std::string> tokens_;
};

/// A compiled surface pattern is owned by this op per the module contract.
inline TermPattern compile_pattern(std::string_view surface) { return TermPattern(surface); }

/// One resolved match inside a text field.
struct TextMatch {
    std::size_t entry_index;
    std::size_t begin;
    std::size_t end;
};

/// The loaded gazetteer: entries in file order, a surface index rejecting
/// collisions, and compiled patterns bucketed by first character for scans.
class TechDictionary {
public:
    TechDictionary() = default;

    const std::vector<TechEntry>& entries() const noexcept { return entries_; }
    std::size_t surface_count() const noexcept { return patterns_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    const TechEntry& entry(std::size_t i) const { return entries_.at(i); }

    void add_entry(TechEntry entry) {
        std::size_t index = entries_.size();
        std::vector<std::string> surfaces;
        surfaces.push_back(entry.canonical);
        for (const auto& a : entry.aliases) surfaces.push_back(a);
        for (const auto& s : surfaces) add_surface(s, index, entry.canonical);
        entries_.push_back(std::move(entry));
    }

    /// Tech classification for a normalized tag. Returns the matching entry,
    /// or nullptr for Other. Hyphens in the tag act as token separators, so
    /// plural and hyphenated tag variants classify too.
    const TechEntry* classify(std::string_view tag) const {
        for (std::size_t pi : candidates(first_alpha(tag)))
            if (patterns_[pi].matches_tag(tag)) return &entries_[pattern_entry_[pi]];
        return nullptr;
    }

    /// Scans free text; returns non-overlapping matches, leftmost first.
    /// At equal start the longest match wins, ties resolved by dictionary
    /// order; scanning resumes at the end of each accepted match.
    std::vector<TextMatch> scan(std::string_view text) const {
        std::vector<TextMatch> out;
        std::size_t p = 0;
        while (p < text.size()) {
            if (!is_word_char(static_cast<unsigned char>(text[p])) ||
                (p > 0 && is_word_char(static_cast<unsigned char>(text[p - 1])))) {
                ++p;
                continue;
            }
            std::size_t best_end = 0;
            std::size_t best_pattern = 0;
            bool found = false;
            for (std::size_t pi : candidates(ascii_lower(text[p]))) {
                auto end = patterns_[pi].match_at(text, p);
                if (end && (!found || *end > best_end)) {
                    best_end = *end;
                    best_pattern = pi;
                    found = true;
                }
            }
            if (found) {
                out.push_back({pattern_entry_[best_pattern], p, best_end});
                p = best_end;
            } else {
                ++p;
            }
        }
        return out;
    }

private:
    static char first_alpha(std::string_view s) { return s.empty() ? '\0' : ascii_lower(s[0]); }

    std::span<const std::size_t> candidates(char first) const {
        auto it = by_first_char_.find(first);
        if (it == by_first_char_.end()) return {};
        return it->second;
    }

    void add_surface(const std::string& surface, std::size_t index,
                     const std::string& canonical) {
        TermPattern pattern(surface);
        std::string key;
        for (const auto& t : pattern.tokens()) {
            if (!key.empty()) key.push_back(' ');
            key += t;
        }
        auto [it, inserted] = surface_index_.emplace(key, index);
        if (!inserted && it->second != index)
            throw SchemaError("surface", 0,
                              "surface \"" + key + "\" claimed by both \"" +
                                  entries_[it->second].canonical + "\" and \"" + canonical +
                                  "\"");
        if (!inserted) return;  // same entry listing an equivalent surface twice
        by_first_char_[pattern.tokens().front()[0]].push_back(patterns_.size());
        pattern_entry_.push_back(index);
        patterns_.push_back(std::move(pattern));
    }

    std::vector<TechEntry> entries_;
    std::vector<TermPattern> patterns_;
    std::vector<std::size_t> pattern_entry_;
    std::unordered_map<std::string, std::size_t> surface_index_;
    std::unordered_map<char, std::vector<std::size_t>> by_first_char_;
};

// Dictionary file format: UTF-8 CSV with header `canonical,cluster,aliases`;
// `aliases` is a |-separated list, possibly empty. Lines starting with `#`
// are comments; a `# clusters: a|b|c` comment, when present, declares the
// admissible cluster set and membership is enforced.

namespace detail {

inline std::vector<std::string> parse_csv_record(const std::string& line,
                                                 const std::string& source, std::size_t lineno) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur.push_back(c);
            }
        } else if (c == '"') {
            if (!cur.empty()) throw ParseError(source, lineno, "stray quote inside CSV field");
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::exchange(cur, {}));
        } else {
            cur.push_back(c);
        }
    }
    if (quoted) throw ParseError(source, lineno, "unterminated quoted CSV field");
    fields.push_back(std::move(cur));
    return fields;
}

inline std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(std::exchange(cur, {}));
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(std::move(cur));
    return out;
}

inline std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && is_space_char(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && is_space_char(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

}  // namespace detail

inline TechDictionary load_dictionary(std::istream& in, const std::string& source) {
    TechDictionary dict;
    std::set<std::string> declared_clusters;
    std::string line;
    std::size_t lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string trimmed = detail::trim(line);
        if (trimmed.empty()) continue;
        if (trimmed[0] == '#') {
            std::string body = detail::trim(trimmed.substr(1));
            if (body.rfind("clusters:", 0) == 0) {
                for (auto& c : detail::split_on(body.substr(9), '|')) {
                    std::string name = detail::trim(c);
                    if (!name.empty()) declared_clusters.insert(name);
                }
            }
            continue;
        }
        if (!header_seen) {
            if (trimmed != "canonical,cluster,aliases")
                throw ParseError(source, lineno,
                                 "expected header \"canonical,cluster,aliases\"");
            header_seen = true;
            continue;
        }
        auto fields = detail::parse_csv_record(line, source, lineno);
        if (fields.size() != 3)
            throw ParseError(source, lineno, "expected 3 CSV fields, got " +
                                                 std::to_string(fields.size()));
        TechEntry entry;
        entry.canonical = normalize_phrase(fields[0]);
        if (entry.canonical.empty())
            throw SchemaError("canonical", lineno, "empty canonical term");
        entry.cluster = detail::trim(fields[1]);
        if (entry.cluster.empty()) throw SchemaError("cluster", lineno, "empty cluster label");
        if (!declared_clusters.empty() && !declared_clusters.count(entry.cluster))
            throw SchemaError("cluster", lineno,
                              "cluster \"" + entry.cluster + "\" is not in the declared set");
        if (!fields[2].empty()) {
            std::set<std::string> seen;
            for (auto& raw : detail::split_on(fields[2], '|')) {
                std::string alias = normalize_phrase(raw);
                if (alias.empty())
                    throw SchemaError("aliases", lineno, "empty alias for \"" +
                                                             entry.canonical + "\"");
                if (alias == entry.canonical)
                    throw SchemaError("aliases", lineno,
                                      "alias repeats the canonical term \"" + alias + "\"");
                if (!seen.insert(alias).second)
                    throw SchemaError("aliases", lineno, "duplicate alias \"" + alias + "\"");
                entry.aliases.push_back(std::move(alias));
            }
        }
        try {
            dict.add_entry(std::move(entry));
        } catch (const SchemaError& e) {
            throw SchemaError(e.field(), lineno, e.what());
        }
    }
    if (!header_seen)
        throw ParseError(source, 0, "dictionary file is missing its header line");
    return dict;
}

inline TechDictionary load_dictionary(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(path, "cannot open dictionary file");
    return load_dictionary(in, path);
}

}  // namespace techlens
