// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 techlens contributors

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>

#include "techlens/cooc.hpp"
#include "techlens/graph.hpp"
#include "techlens/layout.hpp"
#include "techlens/text.hpp"
#include "techlens/xml.hpp"

// Static SVG renderers: an annotated heatmap for co-occurrence matrices and
// a node-link drawing for tag graphs. Output is plain SVG 1.1 with no
// scripts and no external references, and formatting goes through
// format_fixed so identical inputs produce identical bytes.

namespace techlens {

namespace detail {

// Single-hue blue ramp, light to dark; t in [0,1].
inline std::string ramp_color(double t) {
    t = std::clamp(t, 0.0, 1.0);
    constexpr std::array<int, 3> lo{0xf7, 0xfb, 0xff};
    constexpr std::array<int, 3> hi{0x08, 0x30, 0x6b};
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x",
                  static_cast<int>(std::lround(lo[0] + t * (hi[0] - lo[0]))),
                  static_cast<int>(std::lround(lo[1] + t * (hi[1] - lo[1]))),
                  static_cast<int>(std::lround(lo[2] + t * (hi[2] - lo[2]))));
    return buf;
}

inline std::string svg_text(double x, double y, const std::string& content,
                            const std::string& anchor, double size,
                            const std::string& fill = "#000000",
                            const std::string& transform = "") {
    std::ostringstream out;
    out << "<text x=\"" << format_fixed(x, 2) << "\" y=\"" << format_fixed(y, 2)
        << "\" font-family=\"sans-serif\" font-size=\"" << format_fixed(size, 1)
        << "\" text-anchor=\"" << anchor << "\" fill=\"" << fill << "\"";
    if (!transform.empty()) out << " transform=\"" << transform << "\"";
    out << ">" << xml_escape(content) << "</text>\n";
    return out.str();
}

struct HeatmapCells {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    std::vector<double> shade;       // [0,1] fill intensity, row-major
    std::vector<std::string> value;  // annotation text, row-major
};

inline std::string render_heatmap(const HeatmapCells& cells, const std::string& title) {
    const std::size_t rows = cells.row_labels.size();
    const std::size_t cols = cells.col_labels.size();
    const double cell = 46.0;
    const double left = 170.0, top = 120.0;
    const double width = left + cols * cell + 20.0;
    const double height = top + rows * cell + 20.0;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_fixed(width, 0)
        << "\" height=\"" << format_fixed(height, 0) << "\" viewBox=\"0 0 "
        << format_fixed(width, 0) << ' ' << format_fixed(height, 0) << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    if (!title.empty()) out << svg_text(width / 2.0, 24.0, title, "middle", 16.0);

    for (std::size_t j = 0; j < cols; ++j) {
        double cx = left + j * cell + cell / 2.0;
        out << svg_text(cx, top - 8.0, cells.col_labels[j], "start", 10.0, "#000000",
                        "rotate(-45 " + format_fixed(cx, 2) + " " +
                            format_fixed(top - 8.0, 2) + ")");
    }
    for (std::size_t i = 0; i < rows; ++i) {
        out << svg_text(left - 8.0, top + i * cell + cell / 2.0 + 3.5,
                        cells.row_labels[i], "end", 10.0);
    }
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            double t = cells.shade[i * cols + j];
            double x = left + j * cell;
            double y = top + i * cell;
            out << "<rect x=\"" << format_fixed(x, 2) << "\" y=\"" << format_fixed(y, 2)
                << "\" width=\"" << format_fixed(cell, 2) << "\" height=\""
                << format_fixed(cell, 2) << "\" fill=\"" << ramp_color(t)
                << "\" stroke=\"#dddddd\" stroke-width=\"0.5\"/>\n";
            // flip annotation color on dark cells
            out << svg_text(x + cell / 2.0, y + cell / 2.0 + 3.5,
                            cells.value[i * cols + j], "middle", 9.0,
                            t > 0.55 ? "#ffffff" : "#000000");
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace detail

inline std::string heatmap_svg(const CoocMatrix& m, const std::string& title = "") {
    detail::HeatmapCells cells;
    cells.row_labels = m.row_labels();
    cells.col_labels = m.col_labels();
    std::int64_t max = 0;
    for (std::size_t i = 0; i < m.row_count(); ++i)
        for (std::size_t j = 0; j < m.col_count(); ++j) max = std::max(max, m.at(i, j));
    for (std::size_t i = 0; i < m.row_count(); ++i) {
        for (std::size_t j = 0; j < m.col_count(); ++j) {
            std::int64_t v = m.at(i, j);
            cells.shade.push_back(
                max > 0 ? static_cast<double>(v) / static_cast<double>(max) : 0.0);
            cells.value.push_back(format_int(v));
        }
    }
    return detail::render_heatmap(cells, title);
}

inline std::string heatmap_svg(const NormalizedMatrix& m, const std::string& title = "") {
    detail::HeatmapCells cells;
    cells.row_labels = m.row_labels;
    cells.col_labels = m.col_labels;
    for (auto v : m.values) {
        cells.shade.push_back(v);
        cells.value.push_back(format_fixed(v, 2));
    }
    return detail::render_heatmap(cells, title);
}

/// Node-link rendering of a laid-out graph. Edge stroke scales with weight,
/// node radius with sqrt(weight); technology nodes are blue, others green.
inline std::string graph_svg(const TagGraph& graph, const Layout& layout,
                             const std::string& title = "") {
    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    bool first = true;
    for (const auto& node : graph.nodes) {
        auto it = layout.positions.find(node.label);
        if (it == layout.positions.end())
            throw DomainError("layout has no position for node '" + node.label + "'");
        const auto& p = it->second;
        if (first) {
            min_x = max_x = p[0];
            min_y = max_y = p[1];
            first = false;
        } else {
            min_x = std::min(min_x, p[0]);
            max_x = std::max(max_x, p[0]);
            min_y = std::min(min_y, p[1]);
            max_y = std::max(max_y, p[1]);
        }
    }

    const double margin = 80.0;
    const double span_x = std::max(max_x - min_x, 1.0);
    const double span_y = std::max(max_y - min_y, 1.0);
    const double scale = 640.0 / std::max(span_x, span_y);
    const double width = span_x * scale + 2 * margin;
    const double height = span_y * scale + 2 * margin + (title.empty() ? 0.0 : 30.0);
    const double top = title.empty() ? margin : margin + 30.0;

    auto sx = [&](double x) { return margin + (x - min_x) * scale; };
    auto sy = [&](double y) { return top + (y - min_y) * scale; };

    std::int64_t max_edge = 1, max_node = 1;
    for (const auto& e : graph.edges) max_edge = std::max(max_edge, e.weight);
    for (const auto& n : graph.nodes) max_node = std::max(max_node, n.weight);

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_fixed(width, 0)
        << "\" height=\"" << format_fixed(height, 0) << "\" viewBox=\"0 0 "
        << format_fixed(width, 0) << ' ' << format_fixed(height, 0) << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    if (!title.empty()) out << detail::svg_text(width / 2.0, 24.0, title, "middle", 16.0);

    // edges first so nodes draw on top
    for (const auto& e : graph.edges) {
        const auto& pa = layout.positions.at(e.a);
        const auto& pb = layout.positions.at(e.b);
        double w = 0.8 + 3.2 * static_cast<double>(e.weight) / static_cast<double>(max_edge);
        out << "<line x1=\"" << format_fixed(sx(pa[0]), 2) << "\" y1=\""
            << format_fixed(sy(pa[1]), 2) << "\" x2=\"" << format_fixed(sx(pb[0]), 2)
            << "\" y2=\"" << format_fixed(sy(pb[1]), 2) << "\" stroke=\"#9ecae1\""
            << " stroke-opacity=\"0.7\" stroke-width=\"" << format_fixed(w, 2)
            << "\"/>\n";
    }
    for (const auto& node : graph.nodes) {
        const auto& p = layout.positions.at(node.label);
        double r = 4.0 + 14.0 * std::sqrt(static_cast<double>(std::max<std::int64_t>(node.weight, 0)) /
                                          static_cast<double>(max_node));
        const char* fill = node.kind == NodeKind::tech ? "#1f77b4" : "#2ca02c";
        out << "<circle cx=\"" << format_fixed(sx(p[0]), 2) << "\" cy=\""
            << format_fixed(sy(p[1]), 2) << "\" r=\"" << format_fixed(r, 2)
            << "\" fill=\"" << fill << "\" stroke=\"#ffffff\" stroke-width=\"1\"/>\n";
        out << detail::svg_text(sx(p[0]), sy(p[1]) - r - 4.0, node.label, "middle", 10.0);
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace techlens
