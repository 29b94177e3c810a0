// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 techlens contributors

#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "techlens/text.hpp"

// Tolerant HTML scraping helpers. This is not a DOM: pages are scanned for
// the handful of shapes the fetcher needs (elements located by tag name and
// class token, plus markup stripping for body text). Unknown constructs are
// skipped rather than rejected, since real pages are rarely well-formed.

namespace techlens {

namespace detail {

// Lenient entity decoding: the named entities seen in practice plus numeric
// references; anything unrecognized is passed through untouched.
inline std::string decode_html_entities(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    std::size_t i = 0;
    while (i < raw.size()) {
        if (raw[i] != '&') {
            out.push_back(raw[i++]);
            continue;
        }
        auto semi = raw.find(';', i);
        if (semi == std::string_view::npos || semi - i > 12) {
            out.push_back(raw[i++]);
            continue;
        }
        std::string_view ent = raw.substr(i + 1, semi - i - 1);
        if (ent == "amp") out.push_back('&');
        else if (ent == "lt") out.push_back('<');
        else if (ent == "gt") out.push_back('>');
        else if (ent == "quot") out.push_back('"');
        else if (ent == "apos" || ent == "#39") out.push_back('\'');
        else if (ent == "nbsp") out.push_back(' ');
        else if (ent == "mdash") out += "\xE2\x80\x94";
        else if (ent == "ndash") out += "\xE2\x80\x93";
        else if (!ent.empty() && ent[0] == '#') {
            long code = 0;
            bool hex = ent.size() > 1 && (ent[1] == 'x' || ent[1] == 'X');
            bool ok = ent.size() > (hex ? 2u : 1u);
            for (std::size_t k = hex ? 2 : 1; ok && k < ent.size(); ++k) {
                char c = ascii_lower(ent[k]);
                int digit;
                if (c >= '0' && c <= '9') digit = c - '0';
                else if (hex && c >= 'a' && c <= 'f') digit = c - 'a' + 10;
                else { ok = false; break; }
                code = code * (hex ? 16 : 10) + digit;
            }
            if (!ok || code <= 0 || code > 0x10FFFF) {
                out.push_back(raw[i++]);
                continue;
            }
            if (code < 0x80) {
                out.push_back(static_cast<char>(code));
            } else if (code < 0x800) {
                out.push_back(static_cast<char>(0xC0 | (code >> 6)));
                out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
            } else if (code < 0x10000) {
                out.push_back(static_cast<char>(0xE0 | (code >> 12)));
                out.push_back(static_cast<char>(0x80 | ((code >> 6) & 0x3F)));
                out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
            } else {
                out.push_back(static_cast<char>(0xF0 | (code >> 18)));
                out.push_back(static_cast<char>(0x80 | ((code >> 12) & 0x3F)));
                out.push_back(static_cast<char>(0x80 | ((code >> 6) & 0x3F)));
                out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
            }
        } else {
            out.push_back(raw[i++]);
            continue;
        }
        i = semi + 1;
    }
    return out;
}

struct HtmlTagToken {
    std::string name;  // lowercased
    std::map<std::string, std::string> attrs;
    bool closing = false;
    bool self_closing = false;
    std::size_t end = 0;  // offset just past '>'
};

// Parses the tag starting at html[pos] (html[pos] == '<'). Returns false for
// comments/doctype/bogus tags, with *skip_to set past them.
inline bool parse_tag(std::string_view html, std::size_t pos, HtmlTagToken& tag,
                      std::size_t* skip_to) {
    if (html.compare(pos, 4, "<!--") == 0) {
        auto end = html.find("-->", pos + 4);
        *skip_to = end == std::string_view::npos ? html.size() : end + 3;
        return false;
    }
    if (pos + 1 < html.size() && (html[pos + 1] == '!' || html[pos + 1] == '?')) {
        auto end = html.find('>', pos);
        *skip_to = end == std::string_view::npos ? html.size() : end + 1;
        return false;
    }
    std::size_t i = pos + 1;
    tag = HtmlTagToken{};
    if (i < html.size() && html[i] == '/') {
        tag.closing = true;
        ++i;
    }
    std::size_t name_begin = i;
    while (i < html.size() && (std::isalnum(static_cast<unsigned char>(html[i])) || html[i] == '-'))
        ++i;
    if (i == name_begin) {  // stray '<'
        *skip_to = pos + 1;
        return false;
    }
    tag.name = lowercase_ascii(html.substr(name_begin, i - name_begin));
    while (i < html.size() && html[i] != '>') {
        if (is_space_char(static_cast<unsigned char>(html[i]))) {
            ++i;
            continue;
        }
        if (html[i] == '/') {
            tag.self_closing = true;
            ++i;
            continue;
        }
        std::size_t kb = i;
        while (i < html.size() && html[i] != '=' && html[i] != '>' && html[i] != '/' &&
               !is_space_char(static_cast<unsigned char>(html[i])))
            ++i;
        std::string key = lowercase_ascii(html.substr(kb, i - kb));
        while (i < html.size() && is_space_char(static_cast<unsigned char>(html[i]))) ++i;
        std::string value;
        if (i < html.size() && html[i] == '=') {
            ++i;
            while (i < html.size() && is_space_char(static_cast<unsigned char>(html[i]))) ++i;
            if (i < html.size() && (html[i] == '"' || html[i] == '\'')) {
                char quote = html[i];
                std::size_t vb = ++i;
                while (i < html.size() && html[i] != quote) ++i;
                value = decode_html_entities(html.substr(vb, i - vb));
                if (i < html.size()) ++i;
            } else {
                std::size_t vb = i;
                while (i < html.size() && html[i] != '>' &&
                       !is_space_char(static_cast<unsigned char>(html[i])))
                    ++i;
                value = decode_html_entities(html.substr(vb, i - vb));
            }
        }
        if (!key.empty()) tag.attrs.emplace(std::move(key), std::move(value));
    }
    tag.end = i < html.size() ? i + 1 : html.size();
    *skip_to = tag.end;
    return true;
}

inline bool has_class_token(const HtmlTagToken& tag, std::string_view cls) {
    auto it = tag.attrs.find("class");
    if (it == tag.attrs.end()) return false;
    std::string_view s = it->second;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && is_space_char(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t b = i;
        while (i < s.size() && !is_space_char(static_cast<unsigned char>(s[i]))) ++i;
        if (s.substr(b, i - b) == cls) return true;
    }
    return false;
}

inline bool is_void_element(std::string_view name) {
    static constexpr std::string_view kVoid[] = {"area", "base",  "br",    "col",
                                                 "embed", "hr",   "img",   "input",
                                                 "link", "meta",  "param", "source",
                                                 "track", "wbr"};
    return std::find(std::begin(kVoid), std::end(kVoid), name) != std::end(kVoid);
}

inline bool is_block_element(std::string_view name) {
    static constexpr std::string_view kBlock[] = {
        "address", "article", "aside",  "blockquote", "br",     "div",     "dl",
        "dt",      "dd",      "figure", "figcaption", "footer", "form",    "h1",
        "h2",      "h3",      "h4",     "h5",         "h6",     "header",  "hr",
        "li",      "main",    "nav",    "ol",         "p",      "pre",     "section",
        "table",   "tr",      "td",     "th",         "ul"};
    return std::find(std::begin(kBlock), std::end(kBlock), name) != std::end(kBlock);
}

// Skips past raw-text content (script/style) including the end tag.
inline std::size_t skip_raw_text(std::string_view html, std::size_t pos,
                                 const std::string& name) {
    std::string close = "</" + name;
    std::size_t i = pos;
    while (i < html.size()) {
        auto hit = html.find('<', i);
        if (hit == std::string_view::npos) return html.size();
        if (hit + close.size() <= html.size() &&
            iequals_ascii(html.substr(hit, close.size()), close)) {
            auto end = html.find('>', hit);
            return end == std::string_view::npos ? html.size() : end + 1;
        }
        i = hit + 1;
    }
    return html.size();
}

}  // namespace detail

struct HtmlElement {
    std::map<std::string, std::string> attrs;
    std::string inner_html;

    const std::string* attr(const std::string& key) const {
        auto it = attrs.find(key);
        return it == attrs.end() ? nullptr : &it->second;
    }
};

/// Returns every element with the given tag name carrying `cls` as a class
/// token (any element of that name when `cls` is empty), in document order.
/// Nested matches inside a match are reported too.
inline std::vector<HtmlElement> find_elements(std::string_view html,
                                              std::string_view tag_name,
                                              std::string_view cls = "") {
    std::vector<HtmlElement> out;
    struct Open {
        std::size_t out_index;
        int depth;  // nesting depth of same-named tags at open time
    };
    std::vector<Open> open;
    std::vector<std::size_t> content_begin;
    int depth = 0;  // current nesting of tag_name elements

    std::size_t i = 0;
    while (i < html.size()) {
        auto lt = html.find('<', i);
        if (lt == std::string_view::npos) break;
        detail::HtmlTagToken tag;
        std::size_t next = lt + 1;
        if (!detail::parse_tag(html, lt, tag, &next)) {
            i = next;
            continue;
        }
        i = next;
        if (!tag.closing && (tag.name == "script" || tag.name == "style")) {
            i = detail::skip_raw_text(html, i, tag.name);
            continue;
        }
        if (tag.name != tag_name) continue;
        if (tag.closing) {
            if (depth > 0) --depth;
            if (!open.empty() && open.back().depth == depth) {
                out[open.back().out_index].inner_html =
                    std::string(html.substr(content_begin.back(), lt - content_begin.back()));
                open.pop_back();
                content_begin.pop_back();
            }
            continue;
        }
        bool matches = cls.empty() || detail::has_class_token(tag, cls);
        if (tag.self_closing || detail::is_void_element(tag.name)) {
            if (matches) out.push_back({tag.attrs, ""});
            continue;
        }
        if (matches) {
            open.push_back({out.size(), depth});
            content_begin.push_back(tag.end);
            out.push_back({tag.attrs, ""});
        }
        ++depth;
    }
    // Unclosed matches run to end of input.
    while (!open.empty()) {
        out[open.back().out_index].inner_html =
            std::string(html.substr(content_begin.back()));
        open.pop_back();
        content_begin.pop_back();
    }
    return out;
}

/// First matching element, if any.
inline const HtmlElement* first_element(const std::vector<HtmlElement>& elements) {
    return elements.empty() ? nullptr : &elements.front();
}

/// Reduces markup to readable text: tags removed, script/style content
/// dropped, block boundaries become single newlines, entities decoded, and
/// runs of spaces collapsed. Lines and the whole result are trimmed.
inline std::string strip_markup(std::string_view html) {
    std::string raw;
    raw.reserve(html.size());
    std::size_t i = 0;
    while (i < html.size()) {
        auto lt = html.find('<', i);
        if (lt == std::string_view::npos) {
            raw += detail::decode_html_entities(html.substr(i));
            break;
        }
        raw += detail::decode_html_entities(html.substr(i, lt - i));
        detail::HtmlTagToken tag;
        std::size_t next = lt + 1;
        if (!detail::parse_tag(html, lt, tag, &next)) {
            i = next;
            continue;
        }
        i = next;
        if (!tag.closing && (tag.name == "script" || tag.name == "style")) {
            i = detail::skip_raw_text(html, i, tag.name);
            continue;
        }
        if (detail::is_block_element(tag.name)) raw.push_back('\n');
    }

    // Collapse whitespace: spaces within lines, blank lines between them.
    std::string out;
    out.reserve(raw.size());
    bool pending_space = false;
    bool pending_newline = false;
    bool at_start = true;
    for (char c : raw) {
        if (c == '\n') {
            pending_newline = true;
            pending_space = false;
        } else if (is_space_char(static_cast<unsigned char>(c))) {
            pending_space = true;
        } else {
            if (!at_start) {
                if (pending_newline) out.push_back('\n');
                else if (pending_space) out.push_back(' ');
            }
            pending_newline = pending_space = false;
            at_start = false;
            out.push_back(c);
        }
    }
    return out;
}

}  // namespace techlens
