// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 techlens contributors

#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "techlens/errors.hpp"
#include "techlens/graph.hpp"
#include "techlens/layout.hpp"
#include "techlens/text.hpp"
#include "techlens/xml.hpp"

// GEXF 1.2 serialization for tag graphs. The emitted files open in Gephi;
// node kind, cluster, and weight ride along as attvalues so imports can
// reconstruct the graph exactly. No timestamps or other run-varying fields
// are written: equal graphs serialize to equal bytes.

namespace techlens {

inline std::string to_gexf(const TagGraph& graph, const Layout* layout = nullptr) {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<gexf xmlns=\"http://www.gexf.net/1.2draft\""
           " xmlns:viz=\"http://www.gexf.net/1.2draft/viz\""
           " version=\"1.2\">\n";
    out << "  <graph mode=\"static\" defaultedgetype=\""
        << (graph.directed ? "directed" : "undirected") << "\">\n";
    out << "    <attributes class=\"node\">\n";
    out << "      <attribute id=\"0\" title=\"kind\" type=\"string\"/>\n";
    out << "      <attribute id=\"1\" title=\"cluster\" type=\"string\"/>\n";
    out << "      <attribute id=\"2\" title=\"weight\" type=\"long\"/>\n";
    out << "    </attributes>\n";
    out << "    <nodes>\n";
    for (const auto& node : graph.nodes) {
        out << "      <node id=\"" << xml_escape(node.label) << "\" label=\""
            << xml_escape(node.label) << "\">\n";
        out << "        <attvalues>\n";
        out << "          <attvalue for=\"0\" value=\"" << node_kind_name(node.kind)
            << "\"/>\n";
        if (node.cluster)
            out << "          <attvalue for=\"1\" value=\"" << xml_escape(*node.cluster)
                << "\"/>\n";
        out << "          <attvalue for=\"2\" value=\"" << format_int(node.weight)
            << "\"/>\n";
        out << "        </attvalues>\n";
        if (layout) {
            auto it = layout->positions.find(node.label);
            if (it != layout->positions.end()) {
                out << "        <viz:position x=\"" << format_fixed(it->second[0], 3)
                    << "\" y=\"" << format_fixed(it->second[1], 3) << "\" z=\"0\"/>\n";
            }
        }
        out << "      </node>\n";
    }
    out << "    </nodes>\n";
    out << "    <edges>\n";
    std::size_t edge_id = 0;
    for (const auto& edge : graph.edges) {
        out << "      <edge id=\"" << edge_id++ << "\" source=\"" << xml_escape(edge.a)
            << "\" target=\"" << xml_escape(edge.b) << "\" weight=\""
            << format_int(edge.weight) << "\"/>\n";
    }
    out << "    </edges>\n";
    out << "  </graph>\n";
    out << "</gexf>\n";
    return out.str();
}

namespace detail {

inline std::int64_t parse_int64(const std::string& s, const std::string& field) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return static_cast<std::int64_t>(v);
    } catch (const std::exception&) {
        throw SchemaError(field, 0, "not an integer: '" + s + "'");
    }
}

}  // namespace detail

/// Reconstructs a TagGraph from GEXF produced by to_gexf. Throws ParseError
/// for malformed XML and SchemaError when the document is well-formed XML
/// but does not carry the expected graph structure.
inline TagGraph graph_from_gexf(std::string_view content,
                                const std::string& source = "<gexf>") {
    XmlElement root = parse_xml(content, source);
    if (root.name != "gexf") throw SchemaError("gexf", 0, "root element is <" + root.name + ">");
    const XmlElement* g = root.child("graph");
    if (!g) throw SchemaError("graph", 0, "missing <graph> element");

    TagGraph graph;
    const std::string* edgetype = g->attr("defaultedgetype");
    graph.directed = edgetype && *edgetype == "directed";

    const XmlElement* nodes = g->child("nodes");
    if (!nodes) throw SchemaError("nodes", 0, "missing <nodes> element");
    for (const XmlElement* n : nodes->children_named("node")) {
        const std::string* label = n->attr("label");
        if (!label) label = n->attr("id");
        if (!label) throw SchemaError("node", 0, "node without label or id");
        GraphNode node;
        node.label = *label;
        node.kind = NodeKind::other;
        if (const XmlElement* attvalues = n->child("attvalues")) {
            for (const XmlElement* av : attvalues->children_named("attvalue")) {
                const std::string* key = av->attr("for");
                const std::string* value = av->attr("value");
                if (!key || !value) continue;
                if (*key == "0") {
                    if (*value == "tech") node.kind = NodeKind::tech;
                    else if (*value == "other") node.kind = NodeKind::other;
                    else throw SchemaError("kind", 0, "unknown node kind '" + *value + "'");
                } else if (*key == "1") {
                    node.cluster = *value;
                } else if (*key == "2") {
                    node.weight = detail::parse_int64(*value, "node weight");
                }
            }
        }
        graph.nodes.push_back(std::move(node));
    }

    const XmlElement* edges = g->child("edges");
    if (!edges) throw SchemaError("edges", 0, "missing <edges> element");
    for (const XmlElement* e : edges->children_named("edge")) {
        const std::string* src = e->attr("source");
        const std::string* dst = e->attr("target");
        if (!src || !dst) throw SchemaError("edge", 0, "edge without source/target");
        GraphEdge edge;
        edge.a = *src;
        edge.b = *dst;
        edge.weight = e->attr("weight") ? detail::parse_int64(*e->attr("weight"), "edge weight") : 1;
        graph.edges.push_back(std::move(edge));
    }

    detail::sort_graph(graph);
    return graph;
}

inline void save_gexf(const TagGraph& graph, const std::string& path,
                      const Layout* layout = nullptr) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError(path, "cannot open for writing");
    out << to_gexf(graph, layout);
    if (!out) throw IoError(path, "write failed");
}

inline TagGraph load_gexf(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(path, "cannot open for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return graph_from_gexf(buf.str(), path);
}

}  // namespace techlens
