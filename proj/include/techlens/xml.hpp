// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 techlens contributors

#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "techlens/errors.hpp"
#include "techlens/text.hpp"

// Minimal XML support: enough to write and read back the documents this
// library emits (GEXF, SVG). Handles declarations, comments, attributes in
// any order, self-closing tags, and the five predefined entities plus
// numeric character references. Not a general-purpose XML parser.

namespace techlens {

inline std::string xml_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

struct XmlElement {
    std::string name;
    std::map<std::string, std::string> attrs;
    std::vector<XmlElement> children;
    std::string text;  // concatenated character data

    const std::string* attr(const std::string& key) const {
        auto it = attrs.find(key);
        return it == attrs.end() ? nullptr : &it->second;
    }

    const XmlElement* child(std::string_view child_name) const {
        for (const auto& c : children)
            if (c.name == child_name) return &c;
        return nullptr;
    }

    std::vector<const XmlElement*> children_named(std::string_view child_name) const {
        std::vector<const XmlElement*> out;
        for (const auto& c : children)
            if (c.name == child_name) out.push_back(&c);
        return out;
    }
};

namespace detail {

class XmlParser {
public:
    XmlParser(std::string_view input, std::string source)
        : in_(input), source_(std::move(source)) {}

    XmlElement parse_document() {
        skip_prolog();
        XmlElement root = parse_element();
        skip_misc();
        if (pos_ != in_.size()) fail("trailing content after root element");
        return root;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(source_, 0, "XML: " + what);
    }

    bool starts_with(std::string_view prefix) const {
        return in_.substr(pos_, prefix.size()) == prefix;
    }

    void skip_ws() {
        while (pos_ < in_.size() && is_space_char(static_cast<unsigned char>(in_[pos_]))) ++pos_;
    }

    void skip_comment() {
        auto end = in_.find("-->", pos_ + 4);
        if (end == std::string_view::npos) fail("unterminated comment");
        pos_ = end + 3;
    }

    void skip_prolog() {
        skip_ws();
        if (starts_with("<?xml")) {
            auto end = in_.find("?>", pos_);
            if (end == std::string_view::npos) fail("unterminated XML declaration");
            pos_ = end + 2;
        }
        skip_misc();
        if (starts_with("<!DOCTYPE")) {
            auto end = in_.find('>', pos_);
            if (end == std::string_view::npos) fail("unterminated DOCTYPE");
            pos_ = end + 1;
            skip_misc();
        }
    }

    void skip_misc() {
        while (true) {
            skip_ws();
            if (starts_with("<!--")) {
                skip_comment();
            } else {
                return;
            }
        }
    }

    std::string parse_name() {
        std::size_t b = pos_;
        while (pos_ < in_.size()) {
            char c = in_[pos_];
            if (is_word_char(static_cast<unsigned char>(c)) || c == ':' || c == '-' ||
                c == '_' || c == '.') {
                ++pos_;
            } else {
                break;
            }
        }
        if (pos_ == b) fail("expected a name");
        return std::string(in_.substr(b, pos_ - b));
    }

    std::string decode_entities(std::string_view raw) {
        std::string out;
        out.reserve(raw.size());
        std::size_t i = 0;
        while (i < raw.size()) {
            if (raw[i] != '&') {
                out.push_back(raw[i++]);
                continue;
            }
            auto semi = raw.find(';', i);
            if (semi == std::string_view::npos) fail("unterminated entity reference");
            std::string_view ent = raw.substr(i + 1, semi - i - 1);
            if (ent == "amp") out.push_back('&');
            else if (ent == "lt") out.push_back('<');
            else if (ent == "gt") out.push_back('>');
            else if (ent == "quot") out.push_back('"');
            else if (ent == "apos") out.push_back('\'');
            else if (!ent.empty() && ent[0] == '#') {
                long code = 0;
                bool hex = ent.size() > 1 && (ent[1] == 'x' || ent[1] == 'X');
                for (std::size_t k = hex ? 2 : 1; k < ent.size(); ++k) {
                    char c = ent[k];
                    int digit;
                    if (c >= '0' && c <= '9') digit = c - '0';
                    else if (hex && ascii_lower(c) >= 'a' && ascii_lower(c) <= 'f')
                        digit = ascii_lower(c) - 'a' + 10;
                    else
                        fail("bad character reference");
                    code = code * (hex ? 16 : 10) + digit;
                }
                append_utf8(out, code);
            } else {
                fail("unknown entity &" + std::string(ent) + ";");
            }
            i = semi + 1;
        }
        return out;
    }

    static void append_utf8(std::string& out, long code) {
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
    }

    XmlElement parse_element() {
        if (pos_ >= in_.size() || in_[pos_] != '<') fail("expected an element");
        ++pos_;
        XmlElement el;
        el.name = parse_name();
        while (true) {
            skip_ws();
            if (pos_ >= in_.size()) fail("unterminated start tag for <" + el.name + ">");
            if (in_[pos_] == '/') {
                if (!starts_with("/>")) fail("malformed self-closing tag");
                pos_ += 2;
                return el;
            }
            if (in_[pos_] == '>') {
                ++pos_;
                break;
            }
            std::string key = parse_name();
            skip_ws();
            if (pos_ >= in_.size() || in_[pos_] != '=') fail("expected = after attribute name");
            ++pos_;
            skip_ws();
            if (pos_ >= in_.size() || (in_[pos_] != '"' && in_[pos_] != '\''))
                fail("attribute value must be quoted");
            char quote = in_[pos_++];
            std::size_t b = pos_;
            while (pos_ < in_.size() && in_[pos_] != quote) ++pos_;
            if (pos_ >= in_.size()) fail("unterminated attribute value");
            if (!el.attrs.emplace(key, decode_entities(in_.substr(b, pos_ - b))).second)
                fail("duplicate attribute " + key);
            ++pos_;
        }
        // Content until the matching end tag.
        while (true) {
            if (pos_ >= in_.size()) fail("missing end tag for <" + el.name + ">");
            if (in_[pos_] == '<') {
                if (starts_with("<!--")) {
                    pos_ += 0;
                    skip_comment();
                    continue;
                }
                if (starts_with("</")) {
                    pos_ += 2;
                    std::string closing = parse_name();
                    if (closing != el.name)
                        fail("mismatched end tag </" + closing + "> for <" + el.name + ">");
                    skip_ws();
                    if (pos_ >= in_.size() || in_[pos_] != '>') fail("malformed end tag");
                    ++pos_;
                    return el;
                }
                el.children.push_back(parse_element());
            } else {
                std::size_t b = pos_;
                while (pos_ < in_.size() && in_[pos_] != '<') ++pos_;
                el.text += decode_entities(in_.substr(b, pos_ - b));
            }
        }
    }

    std::string_view in_;
    std::string source_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a document and returns its root element. Throws ParseError on
/// malformed input, which doubles as a well-formedness check in tests.
inline XmlElement parse_xml(std::string_view input, const std::string& source = "<xml>") {
    return detail::XmlParser(input, source).parse_document();
}

}  // namespace techlens
