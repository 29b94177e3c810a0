// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 techlens contributors

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include <techlens/corpus_io.hpp>
#include <techlens/graph.hpp>
#include <techlens/techdict.hpp>

#include "support.hpp"

using namespace techlens;

namespace {

CoocMatrix symmetric_matrix() {
    // Document frequencies a:3 b:4 c:2 d:1; pairs ab:3 ac:1 bc:2 bd:1.
    CoocMatrix m({"a", "b", "c", "d"}, {"a", "b", "c", "d"}, true);
    auto set = [&](std::size_t i, std::size_t j, std::int64_t v) {
        m.cell(i, j) = v;
        m.cell(j, i) = v;
    };
    set(0, 0, 3);
    set(1, 1, 4);
    set(2, 2, 2);
    set(3, 3, 1);
    set(0, 1, 3);
    set(0, 2, 1);
    set(1, 2, 2);
    set(1, 3, 1);
    return m;
}

}  // namespace

TEST_CASE("graph_from_matrix keeps qualifying off-diagonal edges") {
    TagGraph g = graph_from_matrix(symmetric_matrix());
    CHECK_FALSE(g.directed);
    REQUIRE(g.edges.size() == 4);
    // Sorted by (a, b); weights copied from the matrix.
    CHECK(g.edges[0] == GraphEdge{"a", "b", 3});
    CHECK(g.edges[1] == GraphEdge{"a", "c", 1});
    CHECK(g.edges[2] == GraphEdge{"b", "c", 2});
    CHECK(g.edges[3] == GraphEdge{"b", "d", 1});
    // Node weights fall back to the diagonal document frequency.
    REQUIRE(g.nodes.size() == 4);
    CHECK(g.nodes[0] == GraphNode{"a", NodeKind::other, 3, std::nullopt});
    CHECK(g.nodes[1].weight == 4);
    CHECK(g.nodes[3].weight == 1);
    // No self-loops anywhere.
    for (const auto& e : g.edges) CHECK(e.a != e.b);
}

TEST_CASE("min_edge_weight thresholds edges and drops orphaned nodes") {
    TagGraph g = graph_from_matrix(symmetric_matrix(), {}, {}, 2);
    REQUIRE(g.edges.size() == 2);
    CHECK(g.edges[0] == GraphEdge{"a", "b", 3});
    CHECK(g.edges[1] == GraphEdge{"b", "c", 2});
    // d lost its only edge and disappears.
    REQUIRE(g.nodes.size() == 3);
    CHECK(g.find_node("d") == nullptr);

    CHECK_THROWS_AS(graph_from_matrix(symmetric_matrix(), {}, {}, 0), DomainError);
    CHECK_THROWS_AS(graph_from_matrix(symmetric_matrix(), {}, {}, -3), DomainError);
}

TEST_CASE("stoplisted labels lose all their edges") {
    TagGraph g = graph_from_matrix(symmetric_matrix(), {}, {"b"});
    REQUIRE(g.edges.size() == 1);
    CHECK(g.edges[0] == GraphEdge{"a", "c", 1});
    CHECK(g.find_node("b") == nullptr);
    CHECK(g.find_node("d") == nullptr);
}

TEST_CASE("explicit node weights override the diagonal") {
    TagGraph g = graph_from_matrix(symmetric_matrix(), {{"a", 99}});
    CHECK(g.find_node("a")->weight == 99);
    CHECK(g.find_node("b")->weight == 4);
}

TEST_CASE("a dictionary classifies node kinds and clusters") {
    TechDictionary dict = load_dictionary(testsupport::demo_dict_path());
    CoocMatrix m({"covid-19", "iot"}, {"covid-19", "iot"}, true);
    m.cell(0, 1) = 2;
    m.cell(1, 0) = 2;
    m.cell(0, 0) = 5;
    m.cell(1, 1) = 2;
    TagGraph g = graph_from_matrix(m, {}, {}, 1, &dict);
    const GraphNode* covid = g.find_node("covid-19");
    const GraphNode* iot = g.find_node("iot");
    REQUIRE(covid != nullptr);
    REQUIRE(iot != nullptr);
    CHECK(covid->kind == NodeKind::other);
    CHECK_FALSE(covid->cluster.has_value());
    CHECK(iot->kind == NodeKind::tech);
    CHECK(iot->cluster == "internet-of-things");
}

TEST_CASE("bipartite matrices merge duplicate undirected pairs by max") {
    CoocMatrix m({"a", "b"}, {"b", "a"}, false);
    // (a,b) appears twice: once as row a/col b = 3, once as row b/col a = 5.
    m.cell(0, 0) = 3;
    m.cell(1, 1) = 5;
    TagGraph g = graph_from_matrix(m);
    REQUIRE(g.edges.size() == 1);
    CHECK(g.edges[0] == GraphEdge{"a", "b", 5});
}

TEST_CASE("graph over the replay corpus tag matrix is consistent") {
    Corpus corpus = load_corpus(testsupport::fixture_path("corpus_50.jsonl"));
    CoocMatrix m = build_cooccurrence(
        corpus, [](const Article& a) { return a.tags; });
    TagGraph g = graph_from_matrix(m, {}, {"covid-19"}, 2);
    REQUIRE_FALSE(g.edges.empty());
    std::set<std::string> labels;
    for (const auto& n : g.nodes) labels.insert(n.label);
    for (const auto& e : g.edges) {
        CHECK(e.weight >= 2);
        CHECK(e.a < e.b);
        CHECK(labels.count(e.a));
        CHECK(labels.count(e.b));
    }
    CHECK_FALSE(labels.count("covid-19"));
    // Sorted, duplicate-free edge list.
    for (std::size_t i = 0; i + 1 < g.edges.size(); ++i) {
        bool ordered = g.edges[i].a < g.edges[i + 1].a ||
                       (g.edges[i].a == g.edges[i + 1].a && g.edges[i].b < g.edges[i + 1].b);
        CHECK(ordered);
    }
}

TEST_CASE("expanded_tech_graph reproduces the hand-derived expansion") {
    TechDictionary dict = load_dictionary(testsupport::demo_dict_path());
    std::vector<std::string> seeds = {"iot",             "blockchain", "machine-learning",
                                      "cloud-computing", "virtual-reality", "cybersecurity"};
    std::map<std::string, std::vector<std::string>> related = {
        {"iot", {"smart-home", "cybersecurity", "smart-home", "big-data"}},
        {"blockchain", {"cryptocurrency", "fintech", "cybersecurity"}},
        {"machine-learning", {"big-data", "iot", "cybersecurity"}},
        {"cloud-computing", {"cybersecurity", "remote-work"}},
        {"virtual-reality", {"gaming"}},
        {"cybersecurity", {"privacy", "iot", "blockchain"}},
    };

    TagGraph g = expanded_tech_graph(seeds, related, &dict);
    CHECK(g.directed);

    // 13 nodes, sorted by label.
    std::vector<std::string> want_labels = {
        "big-data",  "blockchain", "cloud-computing",  "cryptocurrency", "cybersecurity",
        "fintech",   "gaming",     "iot",              "machine-learning", "privacy",
        "remote-work", "smart-home", "virtual-reality"};
    REQUIRE(g.nodes.size() == want_labels.size());
    for (std::size_t i = 0; i < want_labels.size(); ++i) CHECK(g.nodes[i].label == want_labels[i]);

    // 17 hand-derived directed edges. The machine-learning list holds both
    // iot and cybersecurity, so that pair gains a reciprocal weight on top
    // of its two relation edges; the cybersecurity list holds iot and
    // blockchain, creating the only brand-new pair.
    std::vector<GraphEdge> want_edges = {
        {"blockchain", "cryptocurrency", 1}, {"blockchain", "cybersecurity", 1},
        {"blockchain", "fintech", 1},        {"blockchain", "iot", 1},
        {"cloud-computing", "cybersecurity", 1}, {"cloud-computing", "remote-work", 1},
        {"cybersecurity", "blockchain", 1},  {"cybersecurity", "iot", 2},
        {"cybersecurity", "privacy", 1},     {"iot", "big-data", 1},
        {"iot", "blockchain", 1},            {"iot", "cybersecurity", 2},
        {"iot", "smart-home", 1},            {"machine-learning", "big-data", 1},
        {"machine-learning", "cybersecurity", 1}, {"machine-learning", "iot", 1},
        {"virtual-reality", "gaming", 1}};
    REQUIRE(g.edges.size() == want_edges.size());
    for (std::size_t i = 0; i < want_edges.size(); ++i) CHECK(g.edges[i] == want_edges[i]);

    // Node weight is the number of incident edges; the handshake sum holds.
    std::map<std::string, std::int64_t> want_degree = {
        {"iot", 7},          {"blockchain", 6}, {"machine-learning", 3},
        {"cloud-computing", 2}, {"virtual-reality", 1}, {"cybersecurity", 7},
        {"smart-home", 1},   {"big-data", 2},   {"cryptocurrency", 1},
        {"fintech", 1},      {"gaming", 1},     {"privacy", 1},
        {"remote-work", 1}};
    std::int64_t total = 0;
    for (const auto& n : g.nodes) {
        CHECK(n.weight == want_degree.at(n.label));
        total += n.weight;
    }
    CHECK(total == 2 * static_cast<std::int64_t>(g.edges.size()));

    // Dictionary classification of the expansion labels.
    CHECK(g.find_node("iot")->kind == NodeKind::tech);
    CHECK(g.find_node("smart-home")->kind == NodeKind::tech);
    CHECK(g.find_node("big-data")->kind == NodeKind::tech);
    CHECK(g.find_node("privacy")->kind == NodeKind::other);
    CHECK(g.find_node("gaming")->kind == NodeKind::other);
    CHECK(g.find_node("remote-work")->kind == NodeKind::other);
    CHECK(g.find_node("cybersecurity")->cluster == "computing");
}

TEST_CASE("expanded_tech_graph rejects seeds missing from the map") {
    CHECK_THROWS_AS(expanded_tech_graph({"iot"}, {}, nullptr), DomainError);
}

TEST_CASE("self-references in relation lists are ignored") {
    TagGraph g = expanded_tech_graph({"iot"}, {{"iot", {"iot", "smart-home"}}}, nullptr);
    REQUIRE(g.edges.size() == 1);
    CHECK(g.edges[0] == GraphEdge{"iot", "smart-home", 1});
    REQUIRE(g.nodes.size() == 2);
}
