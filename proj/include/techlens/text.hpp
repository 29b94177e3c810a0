// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 techlens contributors

#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace techlens {

inline bool is_space_char(unsigned char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

/// Word characters are ASCII alphanumerics; non-ASCII bytes are treated as
/// letters so UTF-8 words stay intact. Apostrophes and punctuation break words.
inline bool is_word_char(unsigned char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           c >= 0x80;
}

inline char ascii_lower(char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

inline std::string lowercase_ascii(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) out.push_back(ascii_lower(c));
    return out;
}

inline bool iequals_ascii(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (ascii_lower(a[i]) != ascii_lower(b[i])) return false;
    return true;
}

namespace detail {

// Shared core of normalize_tag / normalize_phrase: lowercase, trim,
// collapse runs of whitespace and underscores into `joiner`.
inline std::string normalize_folding(std::string_view raw, char joiner) {
    auto is_sep = [](unsigned char c) { return is_space_char(c) || c == '_'; };
    std::size_t b = 0, e = raw.size();
    while (b < e && is_sep(static_cast<unsigned char>(raw[b]))) ++b;
    while (e > b && is_sep(static_cast<unsigned char>(raw[e - 1]))) --e;
    std::string out;
    out.reserve(e - b);
    bool pending = false;
    for (std::size_t i = b; i < e; ++i) {
        unsigned char c = static_cast<unsigned char>(raw[i]);
        if (is_sep(c)) {
            pending = true;
            continue;
        }
        if (pending) {
            out.push_back(joiner);
            pending = false;
        }
        out.push_back(ascii_lower(static_cast<char>(c)));
    }
    return out;
}

}  // namespace detail

/// Canonical tag form: lowercase, trimmed, whitespace/underscore runs become
/// a single hyphen. Idempotent; may return "" (callers discard empties).
inline std::string normalize_tag(std::string_view raw) {
    return detail::normalize_folding(raw, '-');
}

/// Dictionary-surface form: same folding, but internal separators become
/// single spaces so multiword surfaces keep their token structure.
inline std::string normalize_phrase(std::string_view raw) {
    return detail::normalize_folding(raw, ' ');
}

/// Half-open [begin, end) span of one word within a text.
struct Word {
    std::size_t begin = 0;
    std::size_t end = 0;
};

inline std::vector<Word> split_words(std::string_view text) {
    std::vector<Word> words;
    std::size_t i = 0;
    while (i < text.size()) {
        if (!is_word_char(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t b = i;
        while (i < text.size() && is_word_char(static_cast<unsigned char>(text[i]))) ++i;
        words.push_back({b, i});
    }
    return words;
}

/// RFC 3986 percent-encoding with an empty safe set; used to key fixture
/// replay files by URL. Unreserved characters (A-Z a-z 0-9 - _ . ~) pass.
inline std::string percent_encode(std::string_view s) {
    static const char* hex = "0123456789ABCDEF";
    std::string out;
    out.reserve(s.size());
    for (unsigned char c : s) {
        bool unreserved = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                          (c >= '0' && c <= '9') || c == '-' || c == '_' || c == '.' ||
                          c == '~';
        if (unreserved) {
            out.push_back(static_cast<char>(c));
        } else {
            out.push_back('%');
            out.push_back(hex[c >> 4]);
            out.push_back(hex[c & 0xF]);
        }
    }
    return out;
}

/// Locale-independent fixed-point formatting for deterministic exports.
inline std::string format_fixed(double v, int precision) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, precision);
    return std::string(buf, res.ptr);
}

inline std::string format_int(std::int64_t v) {
    char buf[24];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace techlens
