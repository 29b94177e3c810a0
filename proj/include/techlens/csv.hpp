// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 techlens contributors

#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "techlens/cooc.hpp"
#include "techlens/dates.hpp"
#include "techlens/errors.hpp"
#include "techlens/graph.hpp"
#include "techlens/text.hpp"
#include "techlens/timeseries.hpp"

// CSV writers for the analysis artifacts plus a reader for the matrix
// format, so the graph stage can be fed from a previously written matrix.
// Quoting follows RFC 4180: fields containing comma, quote, or newline are
// wrapped in double quotes with embedded quotes doubled.

namespace techlens {

inline std::string csv_field(std::string_view s) {
    bool needs_quote = s.find_first_of(",\"\r\n") != std::string_view::npos;
    if (!needs_quote) return std::string(s);
    std::string out;
    out.reserve(s.size() + 2);
    out.push_back('"');
    for (char c : s) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

inline std::string to_csv(const CoocMatrix& m) {
    std::ostringstream out;
    for (const auto& label : m.col_labels()) out << ',' << csv_field(label);
    out << '\n';
    for (std::size_t i = 0; i < m.row_count(); ++i) {
        out << csv_field(m.row_labels()[i]);
        for (std::size_t j = 0; j < m.col_count(); ++j) out << ',' << format_int(m.at(i, j));
        out << '\n';
    }
    return out.str();
}

inline std::string to_csv(const NormalizedMatrix& m) {
    std::ostringstream out;
    for (const auto& label : m.col_labels) out << ',' << csv_field(label);
    out << '\n';
    for (std::size_t i = 0; i < m.row_labels.size(); ++i) {
        out << csv_field(m.row_labels[i]);
        for (std::size_t j = 0; j < m.col_labels.size(); ++j)
            out << ',' << format_fixed(m.at(i, j), 6);
        out << '\n';
    }
    return out.str();
}

inline std::string to_csv(const TimeSeries& series) {
    std::ostringstream out;
    out << "bucket,count\n";
    for (const auto& p : series.points)
        out << format_date(p.bucket) << ',' << format_int(p.count) << '\n';
    return out.str();
}

inline std::string edges_to_csv(const TagGraph& graph) {
    std::ostringstream out;
    out << "a,b,weight\n";
    for (const auto& e : graph.edges)
        out << csv_field(e.a) << ',' << csv_field(e.b) << ',' << format_int(e.weight)
            << '\n';
    return out.str();
}

namespace detail {

inline std::vector<std::string> parse_csv_line(std::string_view line,
                                               const std::string& source,
                                               std::size_t lineno) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur.push_back('"');
                    i += 2;
                } else {
                    quoted = false;
                    ++i;
                }
            } else {
                cur.push_back(c);
                ++i;
            }
        } else if (c == '"' && cur.empty()) {
            quoted = true;
            ++i;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
            ++i;
        } else {
            cur.push_back(c);
            ++i;
        }
    }
    if (quoted) throw ParseError(source, lineno, "unterminated quoted field");
    fields.push_back(std::move(cur));
    return fields;
}

}  // namespace detail

/// Reads a matrix in the layout to_csv(CoocMatrix) writes. The symmetric
/// flag is set when row and column labels coincide; values must be integers.
inline CoocMatrix matrix_from_csv(std::string_view content,
                                  const std::string& source = "<csv>") {
    std::vector<std::string> col_labels, row_labels;
    std::vector<std::int64_t> values;
    std::istringstream in{std::string(content)};
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = detail::parse_csv_line(line, source, lineno);
        if (!have_header) {
            if (!fields[0].empty())
                throw SchemaError("header", lineno, "matrix header must start with an empty cell");
            col_labels.assign(fields.begin() + 1, fields.end());
            have_header = true;
            continue;
        }
        if (fields.size() != col_labels.size() + 1)
            throw SchemaError("row", lineno,
                              "expected " + std::to_string(col_labels.size() + 1) +
                                  " fields, got " + std::to_string(fields.size()));
        row_labels.push_back(fields[0]);
        for (std::size_t j = 1; j < fields.size(); ++j) {
            try {
                std::size_t used = 0;
                long long v = std::stoll(fields[j], &used);
                if (used != fields[j].size()) throw std::invalid_argument(fields[j]);
                values.push_back(static_cast<std::int64_t>(v));
            } catch (const std::exception&) {
                throw SchemaError("cell", lineno, "not an integer: '" + fields[j] + "'");
            }
        }
    }
    if (!have_header) throw ParseError(source, 0, "missing matrix header row");
    bool symmetric = row_labels == col_labels;
    CoocMatrix m(std::move(row_labels), std::move(col_labels), symmetric);
    for (std::size_t i = 0; i < m.row_count(); ++i)
        for (std::size_t j = 0; j < m.col_count(); ++j)
            m.cell(i, j) = values[i * m.col_count() + j];
    return m;
}

inline void write_text_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError(path, "cannot open for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError(path, "write failed");
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(path, "cannot open for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline CoocMatrix load_matrix_csv(const std::string& path) {
    return matrix_from_csv(read_text_file(path), path);
}

}  // namespace techlens
