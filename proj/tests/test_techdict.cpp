// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 techlens contributors

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include <techlens/techdict.hpp>

#include "support.hpp"

using namespace techlens;

static TechDictionary tiny_dict() {
    TechDictionary d;
    d.add_entry({"machine learning", "big-data", {"ml"}});
    d.add_entry({"internet of things", "internet-of-things", {"iot"}});
    d.add_entry({"artificial intelligence", "big-data", {"ai"}});
    d.add_entry({"intel", "intel-technologies", {}});
    d.add_entry({"blockchain", "transactions", {"block chain"}});
    d.add_entry({"big data", "big-data", {}});
    return d;
}

TEST_CASE("TermPattern tokenizes on spaces and hyphens") {
    CHECK(TermPattern("Machine Learning").tokens() == std::vector<std::string>{"machine", "learning"});
    CHECK(TermPattern("wi-fi").tokens() == std::vector<std::string>{"wi", "fi"});
    CHECK(TermPattern("node.js").tokens() == std::vector<std::string>{"node.js"});
    CHECK_THROWS_AS(TermPattern("  - "), DomainError);
}

TEST_CASE("TermPattern matches case-insensitively with plural suffixes") {
    TermPattern p("blockchain");
    CHECK(p.matches_in("Blockchain rules"));
    CHECK(p.matches_in("many blockchains here"));
    CHECK(p.matches_in("BLOCKCHAINES"));  // -es variant
    CHECK_FALSE(p.matches_in("blockchained"));
    CHECK_FALSE(p.matches_in("unblockchain"));
}

TEST_CASE("TermPattern respects word boundaries") {
    CHECK_FALSE(TermPattern("ai").matches_in("braid"));
    CHECK_FALSE(TermPattern("ai").matches_in("aim"));
    CHECK(TermPattern("ai").matches_in("the AI wins"));
    CHECK(TermPattern("ai").matches_in("AI-driven"));  // hyphen is a boundary
    CHECK_FALSE(TermPattern("intel").matches_in("intelligence"));
    CHECK(TermPattern("intel").matches_in("Intel inside."));
}

TEST_CASE("TermPattern separator: one whitespace run or one bare hyphen") {
    TermPattern p("machine learning");
    CHECK(p.matches_in("machine learning"));
    CHECK(p.matches_in("machine   learning"));
    CHECK(p.matches_in("machine\tlearning"));
    CHECK(p.matches_in("machine-learning"));
    CHECK_FALSE(p.matches_in("machine--learning"));
    CHECK_FALSE(p.matches_in("machine- learning"));
    CHECK_FALSE(p.matches_in("machinelearning"));
}

TEST_CASE("match_at reports end offsets, longest suffix first") {
    TermPattern p("sensor");
    std::string text = "sensores";
    auto end = p.match_at(text, 0);
    REQUIRE(end.has_value());
    CHECK(*end == 8);  // "es" beats bare "sensor" prefix
    CHECK(p.match_at("sensors", 0) == 7);
}

TEST_CASE("matches_tag requires full consumption") {
    TermPattern p("machine learning");
    CHECK(p.matches_tag("machine-learning"));
    CHECK(p.matches_tag("machine-learnings"));
    CHECK_FALSE(p.matches_tag("machine-learning-ops"));
    CHECK_FALSE(p.matches_tag("machine"));
    CHECK_FALSE(p.matches_tag(""));
}

TEST_CASE("classify maps normalized tags to entries") {
    TechDictionary d = tiny_dict();
    const TechEntry* e = d.classify("iot");
    REQUIRE(e != nullptr);
    CHECK(e->canonical == "internet of things");
    CHECK(d.classify("machine-learning") != nullptr);
    CHECK(d.classify("blockchains") != nullptr);  // plural tag
    CHECK(d.classify("internet-of-things") != nullptr);
    CHECK(d.classify("covid-19") == nullptr);
    CHECK(d.classify("") == nullptr);
}

TEST_CASE("scan finds leftmost non-overlapping matches, longest at a tie") {
    TechDictionary d = tiny_dict();

    SECTION("worked example") {
        auto ms = d.scan("IoT and blockchains converge");
        REQUIRE(ms.size() == 2);
        CHECK(d.entry(ms[0].entry_index).canonical == "internet of things");
        CHECK(ms[0].begin == 0);
        CHECK(ms[0].end == 3);
        CHECK(d.entry(ms[1].entry_index).canonical == "blockchain");
        CHECK(ms[1].begin == 8);
        CHECK(ms[1].end == 19);
    }
    SECTION("longest match wins at the same start") {
        TechDictionary d2;
        d2.add_entry({"smart", "internet-of-things", {}});
        d2.add_entry({"smart contract", "transactions", {}});
        auto ms = d2.scan("a smart contract signed");
        REQUIRE(ms.size() == 1);
        CHECK(d2.entry(ms[0].entry_index).canonical == "smart contract");
        CHECK(ms[0].begin == 2);
        CHECK(ms[0].end == 16);
    }
    SECTION("scan resumes after the accepted match") {
        // "big data science": "big data" consumes through "data", so
        // "data science" cannot also match.
        TechDictionary d3;
        d3.add_entry({"big data", "big-data", {}});
        d3.add_entry({"data science", "big-data", {}});
        auto ms = d3.scan("big data science");
        REQUIRE(ms.size() == 1);
        CHECK(d3.entry(ms[0].entry_index).canonical == "big data");
    }
    SECTION("equal-length candidates resolve by dictionary order") {
        TechDictionary d4;
        d4.add_entry({"robot", "production-technologies", {}});
        d4.add_entry({"robots", "identification-technologies", {}});
        auto ms = d4.scan("robots everywhere");
        REQUIRE(ms.size() == 1);
        CHECK(ms[0].entry_index == 0);
    }
    SECTION("no match in plain prose") {
        CHECK(d.scan("The quick brown fox braids hair.").empty());
    }
}

TEST_CASE("surface collisions across entries are rejected") {
    TechDictionary d;
    d.add_entry({"wifi", "communication-networks", {"wi-fi"}});
    // "wi fi" tokenizes identically to "wi-fi" -> collision with entry 0.
    TechEntry clash{"wireless", "communication-networks", {"wi fi"}};
    try {
        d.add_entry(clash);
        FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
        std::string msg = e.what();
        CHECK(msg.find("wifi") != std::string::npos);
        CHECK(msg.find("wireless") != std::string::npos);
    }
    // The same entry repeating an equivalent surface is tolerated.
    TechDictionary d2;
    CHECK_NOTHROW(d2.add_entry({"wi-fi", "communication-networks", {"wi fi"}}));
    CHECK(d2.surface_count() == 1);
}

TEST_CASE("load_dictionary parses the bundled demo dictionary") {
    TechDictionary d = load_dictionary(testsupport::demo_dict_path());
    CHECK(d.entries().size() == 53);
    CHECK(d.classify("iot") != nullptr);
    CHECK(d.classify("internet-of-things") != nullptr);
    CHECK(d.classify("5g") != nullptr);
    CHECK(d.classify("wearables") != nullptr);
    CHECK(d.classify("covid-19") == nullptr);
    CHECK(d.classify("economy") == nullptr);
    const TechEntry* ml = d.classify("machine-learning");
    REQUIRE(ml != nullptr);
    CHECK(ml->cluster == "big-data");
}

TEST_CASE("load_dictionary validates structure") {
    SECTION("missing header") {
        std::istringstream in("big data,big-data,\n");
        CHECK_THROWS_AS(load_dictionary(in, "d.csv"), ParseError);
    }
    SECTION("empty file") {
        std::istringstream in("");
        CHECK_THROWS_AS(load_dictionary(in, "d.csv"), ParseError);
    }
    SECTION("wrong field count") {
        std::istringstream in("canonical,cluster,aliases\nbig data,big-data\n");
        CHECK_THROWS_AS(load_dictionary(in, "d.csv"), ParseError);
    }
    SECTION("cluster directive is enforced") {
        std::istringstream in(
            "# clusters: big-data|transactions\n"
            "canonical,cluster,aliases\n"
            "big data,big-data,\n"
            "python,programming-languages,\n");
        try {
            load_dictionary(in, "d.csv");
            FAIL("expected SchemaError");
        } catch (const SchemaError& e) {
            CHECK(e.field() == "cluster");
            CHECK(e.line() == 4);
        }
    }
    SECTION("without a directive any cluster goes") {
        std::istringstream in("canonical,cluster,aliases\npython,anything,\n");
        CHECK_NOTHROW(load_dictionary(in, "d.csv"));
    }
    SECTION("alias equal to canonical rejected") {
        std::istringstream in("canonical,cluster,aliases\nbig data,big-data,Big  Data\n");
        CHECK_THROWS_AS(load_dictionary(in, "d.csv"), SchemaError);
    }
    SECTION("duplicate alias rejected") {
        std::istringstream in("canonical,cluster,aliases\nbig data,big-data,bd|bd\n");
        CHECK_THROWS_AS(load_dictionary(in, "d.csv"), SchemaError);
    }
    SECTION("empty cluster rejected") {
        std::istringstream in("canonical,cluster,aliases\nbig data,,\n");
        CHECK_THROWS_AS(load_dictionary(in, "d.csv"), SchemaError);
    }
    SECTION("cross-entry collision carries the file line") {
        std::istringstream in(
            "canonical,cluster,aliases\n"
            "machine learning,big-data,ml\n"
            "markup language,big-data,ml\n");
        try {
            load_dictionary(in, "d.csv");
            FAIL("expected SchemaError");
        } catch (const SchemaError& e) {
            CHECK(e.line() == 3);
        }
    }
    SECTION("quoted fields with commas parse") {
        std::istringstream in("canonical,cluster,aliases\n\"big, data\",big-data,\n");
        TechDictionary d = load_dictionary(in, "d.csv");
        REQUIRE(d.entries().size() == 1);
        // The comma is literal text; normalize_phrase keeps it inside the token.
        CHECK(d.entries()[0].canonical == "big, data");
    }
    SECTION("missing file raises IoError") {
        CHECK_THROWS_AS(load_dictionary("/nonexistent/dict.csv"), IoError);
    }
}
