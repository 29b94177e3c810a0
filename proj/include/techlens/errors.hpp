// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 techlens contributors

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace techlens {

/// Base class for every failure thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Network or replay failure after retries were exhausted. Carries the URL.
class TransportError : public Error {
public:
    TransportError(std::string url, const std::string& what)
        : Error("transport error [" + url + "]: " + what), url_(std::move(url)) {}

    const std::string& url() const noexcept { return url_; }

private:
    std::string url_;
};

/// Content that could not be parsed (HTML page, JSONL record, CSV row, XML).
/// `source` is a URL or file path; `line` is 0 when not applicable.
class ParseError : public Error {
public:
    ParseError(std::string source, std::size_t line, const std::string& what)
        : Error(describe(source, line, what)), source_(std::move(source)), line_(line) {}

    const std::string& source() const noexcept { return source_; }
    std::size_t line() const noexcept { return line_; }

private:
    static std::string describe(const std::string& source, std::size_t line,
                                const std::string& what) {
        std::string msg = "parse error [" + source;
        if (line > 0) msg += ":" + std::to_string(line);
        return msg + "]: " + what;
    }

    std::string source_;
    std::size_t line_;
};

/// Structurally valid input whose content violates the schema
/// (missing field, collision, bad value). Names the offending field.
class SchemaError : public Error {
public:
    SchemaError(std::string field, std::size_t line, const std::string& what)
        : Error(describe(field, line, what)), field_(std::move(field)), line_(line) {}

    const std::string& field() const noexcept { return field_; }
    std::size_t line() const noexcept { return line_; }

private:
    static std::string describe(const std::string& field, std::size_t line,
                                const std::string& what) {
        std::string msg = "schema error [" + field;
        if (line > 0) msg += " at line " + std::to_string(line);
        return msg + "]: " + what;
    }

    std::string field_;
    std::size_t line_;
};

/// Operation called with arguments outside its domain.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error("domain error: " + what) {}
};

/// Filesystem failure. Carries the path.
class IoError : public Error {
public:
    IoError(std::string path, const std::string& what)
        : Error("io error [" + path + "]: " + what), path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

}  // namespace techlens
