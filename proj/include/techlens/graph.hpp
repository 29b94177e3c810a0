// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 techlens contributors

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "techlens/cooc.hpp"
#include "techlens/techdict.hpp"

namespace techlens {

enum class NodeKind { tech, other };

inline std::string_view node_kind_name(NodeKind k) {
    return k == NodeKind::tech ? "tech" : "other";
}

struct GraphNode {
    std::string label;
    NodeKind kind = NodeKind::other;
    std::int64_t weight = 0;
    std::optional<std::string> cluster;

    friend bool operator==(const GraphNode&, const GraphNode&) = default;
};

struct GraphEdge {
    std::string a;
    std::string b;
    std::int64_t weight = 1;

    friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

/// Weighted tag graph. No self-loops; endpoints always exist among nodes.
/// Undirected graphs store each pair once with a < b lexicographically.
/// Nodes are sorted by label and edges by (a, b) for deterministic output.
struct TagGraph {
    std::vector<GraphNode> nodes;
    std::vector<GraphEdge> edges;
    bool directed = false;

    const GraphNode* find_node(std::string_view label) const {
        for (const auto& n : nodes)
            if (n.label == label) return &n;
        return nullptr;
    }

    friend bool operator==(const TagGraph&, const TagGraph&) = default;
};

namespace detail {

inline void sort_graph(TagGraph& g) {
    std::sort(g.nodes.begin(), g.nodes.end(),
              [](const GraphNode& x, const GraphNode& y) { return x.label < y.label; });
    std::sort(g.edges.begin(), g.edges.end(), [](const GraphEdge& x, const GraphEdge& y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    });
}

inline GraphNode make_node(const std::string& label, std::int64_t weight,
                           const TechDictionary* dict) {
    GraphNode n{label, NodeKind::other, weight, std::nullopt};
    if (dict)
        if (const TechEntry* e = dict->classify(label)) {
            n.kind = NodeKind::tech;
            n.cluster = e->cluster;
        }
    return n;
}

}  // namespace detail

/// Projects a co-occurrence matrix into an undirected graph. Edges are the
/// off-diagonal entries >= min_edge_weight whose endpoints survive the
/// stoplist; nodes are the labels owning at least one surviving edge.
/// Node weights come from `node_weights`, falling back to the diagonal
/// (document frequency) for symmetric matrices, else 0.
inline TagGraph graph_from_matrix(const CoocMatrix& matrix,
                                  const std::map<std::string, std::int64_t>& node_weights = {},
                                  const std::set<std::string>& stoplist = {},
                                  std::int64_t min_edge_weight = 1,
                                  const TechDictionary* dict = nullptr) {
    if (min_edge_weight < 1) throw DomainError("min_edge_weight must be >= 1");
    std::map<std::pair<std::string, std::string>, std::int64_t> edges;
    auto consider = [&](const std::string& ra, const std::string& cb, std::int64_t count) {
        if (count < min_edge_weight) return;
        if (ra == cb) return;
        if (stoplist.count(ra) || stoplist.count(cb)) return;
        auto key = ra < cb ? std::make_pair(ra, cb) : std::make_pair(cb, ra);
        auto [it, inserted] = edges.emplace(key, count);
        if (!inserted) it->second = std::max(it->second, count);
    };
    if (matrix.symmetric()) {
        for (std::size_t i = 0; i < matrix.row_count(); ++i)
            for (std::size_t j = i + 1; j < matrix.col_count(); ++j)
                consider(matrix.row_labels()[i], matrix.col_labels()[j], matrix.at(i, j));
    } else {
        for (std::size_t i = 0; i < matrix.row_count(); ++i)
            for (std::size_t j = 0; j < matrix.col_count(); ++j)
                consider(matrix.row_labels()[i], matrix.col_labels()[j], matrix.at(i, j));
    }

    auto weight_of = [&](const std::string& label) -> std::int64_t {
        if (auto it = node_weights.find(label); it != node_weights.end()) return it->second;
        if (matrix.symmetric()) {
            const auto& labels = matrix.row_labels();
            auto it = std::lower_bound(labels.begin(), labels.end(), label);
            if (it != labels.end() && *it == label) {
                std::size_t i = static_cast<std::size_t>(it - labels.begin());
                return matrix.at(i, i);
            }
        }
        return 0;
    };

    TagGraph g;
    g.directed = false;
    std::set<std::string> labels;
    for (const auto& [key, w] : edges) {
        labels.insert(key.first);
        labels.insert(key.second);
        g.edges.push_back({key.first, key.second, w});
    }
    for (const auto& label : labels)
        g.nodes.push_back(detail::make_node(label, weight_of(label), dict));
    detail::sort_graph(g);
    return g;
}

/// Second-order expansion graph over platform relatedness lists.
///
/// Directed: one edge seed -> related tag per listed relation. Each
/// relatedness list also acts as a pseudo-document; every pair of seed
/// technologies co-occurring in at least one list gains a reciprocal edge
/// pair weighted by the co-occurrence count (merged additively into any
/// existing relation edge). Node weight is total degree (in + out).
inline TagGraph expanded_tech_graph(
    const std::vector<std::string>& seed_techs,
    const std::map<std::string, std::vector<std::string>>& related,
    const TechDictionary* dict = nullptr) {
    for (const auto& seed : seed_techs)
        if (!related.count(seed))
            throw DomainError("relatedness map does not cover seed tech: " + seed);

    std::set<std::string> seeds(seed_techs.begin(), seed_techs.end());
    std::set<std::string> labels(seeds.begin(), seeds.end());
    std::map<std::pair<std::string, std::string>, std::int64_t> edges;

    std::vector<std::set<std::string>> pseudo_docs;
    for (const auto& seed : seeds) {
        const auto& list = related.at(seed);
        std::set<std::string> doc;
        for (const auto& raw : list) {
            if (raw.empty() || raw == seed) continue;
            labels.insert(raw);
            doc.insert(raw);
            edges.emplace(std::make_pair(seed, raw), 1);  // dups collapse to one edge
        }
        pseudo_docs.push_back(std::move(doc));
    }

    // Recomputed co-occurrence among the seed technologies themselves.
    std::vector<std::string> seed_list(seeds.begin(), seeds.end());
    for (std::size_t i = 0; i < seed_list.size(); ++i)
        for (std::size_t j = i + 1; j < seed_list.size(); ++j) {
            std::int64_t c = 0;
            for (const auto& doc : pseudo_docs)
                if (doc.count(seed_list[i]) && doc.count(seed_list[j])) ++c;
            if (c > 0) {
                edges[{seed_list[i], seed_list[j]}] += c;
                edges[{seed_list[j], seed_list[i]}] += c;
            }
        }

    TagGraph g;
    g.directed = true;
    std::map<std::string, std::int64_t> degree;
    for (const auto& label : labels) degree[label] = 0;
    for (const auto& [key, w] : edges) {
        g.edges.push_back({key.first, key.second, w});
        ++degree[key.first];
        ++degree[key.second];
    }
    for (const auto& label : labels)
        g.nodes.push_back(detail::make_node(label, degree[label], dict));
    detail::sort_graph(g);
    return g;
}

}  // namespace techlens
