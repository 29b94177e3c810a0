// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 techlens contributors

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <tuple>

#include <techlens/corpus_io.hpp>
#include <techlens/extract.hpp>
#include <techlens/techdict.hpp>

#include "oracles.hpp"
#include "support.hpp"

using namespace techlens;

namespace {

// (url, field, start, end, surface, canonical, cluster); -1 when no span.
using MentionRow =
    std::tuple<std::string, std::string, long, long, std::string, std::string, std::string>;

std::vector<MentionRow> rows_from_jsonl(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::vector<MentionRow> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto j = nlohmann::json::parse(line);
        rows.emplace_back(j["url"].get<std::string>(), j["field"].get<std::string>(),
                          j.contains("start") ? j["start"].get<long>() : -1,
                          j.contains("end") ? j["end"].get<long>() : -1,
                          j["surface"].get<std::string>(), j["canonical"].get<std::string>(),
                          j["cluster"].get<std::string>());
    }
    return rows;
}

std::vector<MentionRow> rows_from_library(const Corpus& corpus, const TechDictionary& dict,
                                          unsigned jobs) {
    std::ostringstream out;
    save_mentions(corpus, dict, out, jobs);
    std::istringstream in(out.str());
    std::vector<MentionRow> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto j = nlohmann::json::parse(line);
        rows.emplace_back(j["url"].get<std::string>(), j["field"].get<std::string>(),
                          j.contains("start") ? j["start"].get<long>() : -1,
                          j.contains("end") ? j["end"].get<long>() : -1,
                          j["surface"].get<std::string>(), j["canonical"].get<std::string>(),
                          j["cluster"].get<std::string>());
    }
    return rows;
}

}  // namespace

TEST_CASE("extract_mentions on a known article") {
    TechDictionary dict = load_dictionary(testsupport::demo_dict_path());
    Corpus corpus = load_corpus(testsupport::fixture_path("corpus_gold_20.jsonl"));

    const Article* g01 = nullptr;
    for (const auto& a : corpus)
        if (a.url == "https://medium.com/p/g01") g01 = &a;
    REQUIRE(g01 != nullptr);
    REQUIRE(g01->title == "IoT and blockchains converge");

    auto mentions = extract_mentions(*g01, dict);
    REQUIRE(mentions.size() == 5);

    CHECK(mentions[0].field == Field::title);
    CHECK(mentions[0].span == std::make_pair(std::size_t{0}, std::size_t{3}));
    CHECK(mentions[0].surface == "IoT");
    CHECK(dict.entry(mentions[0].entry_index).canonical == "internet of things");

    CHECK(mentions[1].field == Field::title);
    CHECK(mentions[1].span == std::make_pair(std::size_t{8}, std::size_t{19}));
    CHECK(mentions[1].surface == "blockchains");
    CHECK(dict.entry(mentions[1].entry_index).canonical == "blockchain");

    CHECK(mentions[2].field == Field::body);
    CHECK(mentions[2].surface == "internet of things");
    CHECK(dict.entry(mentions[2].entry_index).canonical == "internet of things");

    CHECK(mentions[3].field == Field::body);
    CHECK(mentions[3].span == std::make_pair(std::size_t{43}, std::size_t{62}));
    CHECK(mentions[3].surface == "distributed ledgers");
    CHECK(dict.entry(mentions[3].entry_index).canonical == "blockchain");

    CHECK(mentions[4].field == Field::tag);
    CHECK_FALSE(mentions[4].span.has_value());
    CHECK(mentions[4].surface == "iot");
}

TEST_CASE("scan agrees with the independent quadratic oracle on every gold field") {
    TechDictionary dict = load_dictionary(testsupport::demo_dict_path());
    Corpus corpus = load_corpus(testsupport::fixture_path("corpus_gold_20.jsonl"));
    REQUIRE(corpus.size() == 20);

    std::size_t fields_checked = 0;
    for (const auto& article : corpus) {
        for (const std::string* text : {&article.title, &article.body}) {
            auto got = dict.scan(*text);
            auto want = oracle::scan_text(*text, dict);
            REQUIRE(got.size() == want.size());
            for (std::size_t i = 0; i < got.size(); ++i) {
                CHECK(got[i].entry_index == want[i].entry);
                CHECK(got[i].begin == want[i].begin);
                CHECK(got[i].end == want[i].end);
            }
            ++fields_checked;
        }
    }
    CHECK(fields_checked == 40);
}

TEST_CASE("mentions export matches the hand-labeled gold file") {
    TechDictionary dict = load_dictionary(testsupport::demo_dict_path());
    Corpus corpus = load_corpus(testsupport::fixture_path("corpus_gold_20.jsonl"));

    auto got = rows_from_library(corpus, dict, 1);
    auto want = rows_from_jsonl(testsupport::fixture_path("gold_mentions.jsonl"));
    REQUIRE(want.size() == 69);

    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == want[i]);
}

TEST_CASE("document_tech_set is sorted, unique, canonical") {
    TechDictionary dict = load_dictionary(testsupport::demo_dict_path());
    Article a;
    a.url = "https://x/a";
    a.title = "IoT, iot, and the Internet of Things";
    a.body = "Blockchain and blockchains and block chain.";
    a.tags = {"iot", "economy"};
    auto set = document_tech_set(a, dict);
    REQUIRE(set.size() == 2);
    CHECK(set[0] == "blockchain");
    CHECK(set[1] == "internet of things");
}

TEST_CASE("corpus_tech_stats counts documents, not mentions") {
    TechDictionary dict = load_dictionary(testsupport::demo_dict_path());
    Corpus corpus = load_corpus(testsupport::fixture_path("corpus_12.jsonl"));

    auto stats = corpus_tech_stats(corpus, dict);
    CHECK(stats.total_articles == 12);
    CHECK(stats.articles_with_tech == 5);
    CHECK(stats.per_entry_doc_freq.at("internet of things") == 1);
    CHECK(stats.per_entry_doc_freq.at("machine learning") == 1);
    CHECK(stats.per_entry_doc_freq.at("cloud computing") == 1);
    CHECK(stats.per_entry_doc_freq.at("5g") == 1);
    CHECK(stats.per_entry_doc_freq.at("bitcoin") == 1);
    CHECK(stats.per_entry_doc_freq.at("wearable") == 1);
    CHECK(stats.per_entry_doc_freq.at("blockchain") == 1);
    CHECK_FALSE(stats.per_entry_doc_freq.count("python"));
}

TEST_CASE("parallel extraction matches sequential") {
    TechDictionary dict = load_dictionary(testsupport::demo_dict_path());
    Corpus corpus = load_corpus(testsupport::fixture_path("corpus_gold_20.jsonl"));

    auto seq = corpus_tech_stats(corpus, dict, 1);
    auto par = corpus_tech_stats(corpus, dict, 4);
    CHECK(seq.total_articles == par.total_articles);
    CHECK(seq.articles_with_tech == par.articles_with_tech);
    CHECK(seq.per_entry_doc_freq == par.per_entry_doc_freq);

    CHECK(rows_from_library(corpus, dict, 4) == rows_from_library(corpus, dict, 1));
}
