// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 techlens contributors

// Command-line front end for the techlens library. Subcommands mirror the
// pipeline stages: fetch a tag archive into a corpus, analyze a corpus
// against a technology dictionary, derive co-occurrence graphs, extract
// per-tag time series, and print the accumulated run report.
//
// Exit codes: 0 success, 1 runtime failure, 2 usage error.

#include <filesystem>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <techlens/techlens.hpp>

namespace fs = std::filesystem;
using namespace techlens;

namespace {

struct GlobalOptions {
    std::string dict_path;
    std::string out_dir = "out";
    std::string offline_dir;
    std::string endpoint = "https://medium.com";
    unsigned jobs = 1;
    std::uint32_t seed = 42;
};

std::set<std::string> normalized_stoplist(const std::vector<std::string>& raw) {
    std::set<std::string> out;
    for (const auto& s : raw) {
        std::string t = normalize_tag(s);
        if (!t.empty()) out.insert(std::move(t));
    }
    return out;
}

std::string out_path(const GlobalOptions& g, const std::string& name) {
    return (fs::path(g.out_dir) / name).string();
}

void merge_report(const GlobalOptions& g, const nlohmann::json& fragment) {
    fs::create_directories(g.out_dir);
    auto path = out_path(g, "report.json");
    RunReport report = RunReport::load_or_empty(path);
    report.merge(fragment);
    report.save(path);
}

TechDictionary require_dict(const GlobalOptions& g) {
    if (g.dict_path.empty())
        throw DomainError("this command needs a technology dictionary (--dict)");
    return load_dictionary(g.dict_path);
}

// ---- fetch ----------------------------------------------------------------

struct FetchOptions {
    std::string tag;
    std::string from;
    std::string to;
    std::string corpus_out;
    int page_cap = 10000;
    int retries = 2;
    int min_interval_ms = 1000;
    bool skip_parse_errors = false;
};

void run_fetch(const GlobalOptions& g, const FetchOptions& o) {
    Stopwatch sw;
    FetchPolicy policy;
    policy.endpoint = g.endpoint;
    policy.page_cap = o.page_cap;
    policy.retries = o.retries;
    policy.min_interval_ms = o.min_interval_ms;
    policy.skip_parse_errors = o.skip_parse_errors;

    DateRange range{*parse_date(o.from), *parse_date(o.to)};
    auto transport = make_transport(g.offline_dir, policy);
    FetchResult result = fetch_tag_archive(*transport, o.tag, range, policy);

    fs::create_directories(g.out_dir);
    std::string corpus_path = o.corpus_out.empty() ? out_path(g, "corpus.jsonl") : o.corpus_out;
    save_corpus(result.corpus, corpus_path);

    nlohmann::json fragment = to_json(result.report);
    fragment["tag"] = normalize_tag(o.tag);
    fragment["date_from"] = o.from;
    fragment["date_to"] = o.to;
    fragment["corpus_articles"] = result.corpus.size();
    fragment["fetch_ms"] = sw.elapsed_ms();
    merge_report(g, fragment);

    std::cout << "fetched " << result.corpus.size() << " articles over "
              << result.report.pages_fetched << " pages (" << result.report.stop_reason
              << ") -> " << corpus_path << '\n';
}

// ---- analyze ---------------------------------------------------------------

struct AnalyzeOptions {
    std::string corpus_path;
    std::string granularity = "month";
    std::string normalize = "minmax-col";
    std::vector<std::string> stoplist = {"covid", "covid-19", "coronavirus", "pandemic"};
};

void run_analyze(const GlobalOptions& g, const AnalyzeOptions& o) {
    Stopwatch sw;
    TechDictionary dict = require_dict(g);
    Corpus corpus = load_corpus(o.corpus_path);
    auto stoplist = normalized_stoplist(o.stoplist);
    Granularity gran = *parse_granularity(o.granularity);
    Axis axis = o.normalize == "minmax-row" ? Axis::row : Axis::col;

    fs::create_directories(g.out_dir);

    {
        std::ofstream out(out_path(g, "mentions.jsonl"), std::ios::binary);
        if (!out) throw IoError(out_path(g, "mentions.jsonl"), "cannot open for writing");
        save_mentions(corpus, dict, out, g.jobs);
    }

    CorpusTechStats stats = corpus_tech_stats(corpus, dict, g.jobs);
    write_text_file(out_path(g, "stats.json"), stats_to_json(stats).dump(2) + "\n");

    CoocMatrix tech_other = tech_other_matrix(corpus, dict, stoplist);
    write_text_file(out_path(g, "tech_other.csv"), to_csv(tech_other));
    if (!tech_other.empty()) {
        NormalizedMatrix normalized = minmax_normalize_by_group(tech_other, axis);
        write_text_file(out_path(g, "tech_other_normalized.csv"), to_csv(normalized));
        write_text_file(out_path(g, "tech_other_heatmap.svg"),
                        heatmap_svg(tech_other, "Technology / tag co-occurrence"));
        write_text_file(out_path(g, "tech_other_heatmap_normalized.svg"),
                        heatmap_svg(normalized, "Technology / tag co-occurrence (min-max)"));
    }

    ItemSetFn all_tags = [](const Article& a) { return a.tags; };
    CoocMatrix tags_cooc = build_cooccurrence(corpus, all_tags);
    write_text_file(out_path(g, "tags_cooc.csv"), to_csv(tags_cooc));

    TimeSeries tech_series = tech_stats_series(corpus, dict, gran);
    write_text_file(out_path(g, "tech_series.csv"), to_csv(tech_series));

    nlohmann::json fragment{{"articles_total", stats.total_articles},
                            {"articles_with_tech", stats.articles_with_tech},
                            {"tech_other_rows", tech_other.row_count()},
                            {"tech_other_cols", tech_other.col_count()},
                            {"tags_cooc_dim", tags_cooc.row_count()},
                            {"analyze_ms", sw.elapsed_ms()}};
    merge_report(g, fragment);

    std::cout << "analyzed " << stats.total_articles << " articles, "
              << stats.articles_with_tech << " mention technologies -> " << g.out_dir
              << '\n';
}

// ---- graph -----------------------------------------------------------------

struct GraphOptions {
    std::string matrix_path;
    std::int64_t min_edge_weight = 2;
    int layout_iterations = 300;
    bool expand_related = false;
    std::vector<std::string> stoplist = {"covid", "covid-19", "coronavirus", "pandemic"};
};

void run_graph(const GlobalOptions& g, const GraphOptions& o) {
    Stopwatch sw;
    std::string matrix_path =
        o.matrix_path.empty() ? out_path(g, "tags_cooc.csv") : o.matrix_path;
    CoocMatrix matrix = load_matrix_csv(matrix_path);
    auto stoplist = normalized_stoplist(o.stoplist);

    // The dictionary is optional here: without it every node is "other".
    std::optional<TechDictionary> dict;
    if (!g.dict_path.empty()) dict = load_dictionary(g.dict_path);
    const TechDictionary* dict_ptr = dict ? &*dict : nullptr;

    TagGraph graph = graph_from_matrix(matrix, {}, stoplist, o.min_edge_weight, dict_ptr);
    Layout layout = force_layout(graph, o.layout_iterations, g.seed);

    fs::create_directories(g.out_dir);
    save_gexf(graph, out_path(g, "graph.gexf"), &layout);
    write_text_file(out_path(g, "graph.svg"), graph_svg(graph, layout, "Tag co-occurrence"));
    write_text_file(out_path(g, "graph_edges.csv"), edges_to_csv(graph));

    nlohmann::json fragment{{"graph_nodes", graph.nodes.size()},
                            {"graph_edges", graph.edges.size()}};

    if (o.expand_related) {
        if (!dict_ptr)
            throw DomainError("--expand-related needs a technology dictionary (--dict)");
        std::vector<std::string> seeds;
        for (const auto& label : matrix.row_labels())
            if (dict_ptr->classify(label)) seeds.push_back(label);

        FetchPolicy policy;
        policy.endpoint = g.endpoint;
        auto transport = make_transport(g.offline_dir, policy);
        std::map<std::string, std::vector<std::string>> related;
        for (const auto& seed : seeds)
            related[seed] = fetch_related_tags(*transport, seed, policy);

        TagGraph expansion = expanded_tech_graph(seeds, related, dict_ptr);
        Layout exp_layout = force_layout(expansion, o.layout_iterations, g.seed);
        save_gexf(expansion, out_path(g, "expansion.gexf"), &exp_layout);
        write_text_file(out_path(g, "expansion.svg"),
                        graph_svg(expansion, exp_layout, "Related-technology expansion"));
        write_text_file(out_path(g, "expansion_edges.csv"), edges_to_csv(expansion));
        fragment["expansion_nodes"] = expansion.nodes.size();
        fragment["expansion_edges"] = expansion.edges.size();
    }

    fragment["graph_ms"] = sw.elapsed_ms();
    merge_report(g, fragment);

    std::cout << "graph: " << graph.nodes.size() << " nodes, " << graph.edges.size()
              << " edges -> " << g.out_dir << '\n';
}

// ---- timeseries ------------------------------------------------------------

struct TimeseriesOptions {
    std::string corpus_path;
    std::vector<std::string> tags;
    std::string granularity = "month";
    bool tech_stats = false;
    bool trend = false;
};

void write_series(const GlobalOptions& g, const std::string& name,
                  const TimeSeries& series, bool with_trend) {
    write_text_file(out_path(g, "timeseries_" + name + ".csv"), to_csv(series));
    if (!with_trend) return;
    Trend t = linear_trend(series);
    nlohmann::json j{{"slope", t.slope},
                     {"intercept", t.intercept},
                     {"points", series.points.size()}};
    write_text_file(out_path(g, "trend_" + name + ".json"), j.dump(2) + "\n");
}

void run_timeseries(const GlobalOptions& g, const TimeseriesOptions& o) {
    Stopwatch sw;
    Corpus corpus = load_corpus(o.corpus_path);
    Granularity gran = *parse_granularity(o.granularity);
    if (o.tags.empty() && !o.tech_stats)
        throw DomainError("nothing to do: pass --tag and/or --tech");

    fs::create_directories(g.out_dir);
    for (const auto& raw : o.tags) {
        std::string tag = normalize_tag(raw);
        write_series(g, tag, tag_timeseries(corpus, tag, gran), o.trend);
    }
    if (o.tech_stats) {
        TechDictionary dict = require_dict(g);
        write_series(g, "tech", tech_stats_series(corpus, dict, gran), o.trend);
    }

    nlohmann::json fragment{
        {"timeseries_count", o.tags.size() + (o.tech_stats ? 1 : 0)},
        {"timeseries_ms", sw.elapsed_ms()}};
    merge_report(g, fragment);

    std::cout << "wrote " << o.tags.size() + (o.tech_stats ? 1 : 0) << " series -> "
              << g.out_dir << '\n';
}

// ---- report ----------------------------------------------------------------

void run_report(const GlobalOptions& g) {
    auto path = out_path(g, "report.json");
    if (!fs::exists(path)) throw IoError(path, "no report yet; run a pipeline stage first");
    std::cout << RunReport::load_or_empty(path).render_text();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"techlens: mine technology mentions from tagged article corpora"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config");

    GlobalOptions g;
    app.add_option("-d,--dict", g.dict_path, "Technology dictionary CSV");
    app.add_option("-o,--out-dir", g.out_dir, "Output directory")->capture_default_str();
    app.add_option("--offline", g.offline_dir,
                   "Replay HTTP responses from this fixture directory");
    app.add_option("--endpoint", g.endpoint, "Archive endpoint")->capture_default_str();
    app.add_option("-j,--jobs", g.jobs, "Worker threads")
        ->capture_default_str()
        ->check(CLI::Range(1u, 256u));
    app.add_option("--seed", g.seed, "Layout random seed")->capture_default_str();

    auto iso_date = CLI::Validator(
        [](std::string& s) {
            return parse_date(s) ? std::string{}
                                 : "expected an ISO date (YYYY-MM-DD), got '" + s + "'";
        },
        "DATE");
    auto granularity_check = CLI::IsMember({"day", "week", "month"});

    FetchOptions fo;
    CLI::App* fetch = app.add_subcommand("fetch", "Fetch a tag archive into a corpus");
    fetch->add_option("--tag", fo.tag, "Tag whose archive to walk")->required();
    fetch->add_option("--from", fo.from, "Earliest publication date")
        ->required()
        ->check(iso_date);
    fetch->add_option("--to", fo.to, "Latest publication date")->required()->check(iso_date);
    fetch->add_option("--corpus-out", fo.corpus_out, "Corpus output path (default <out-dir>/corpus.jsonl)");
    fetch->add_option("--page-cap", fo.page_cap, "Maximum archive pages to walk")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    fetch->add_option("--retries", fo.retries, "Retries on connect failure / 5xx")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    fetch->add_option("--min-interval-ms", fo.min_interval_ms, "Per-host politeness delay")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    fetch->add_flag("--skip-parse-errors", fo.skip_parse_errors,
                    "Skip posts whose pages fail to parse instead of aborting");

    AnalyzeOptions ao;
    CLI::App* analyze = app.add_subcommand("analyze", "Extract mentions and co-occurrence");
    analyze->add_option("--corpus", ao.corpus_path, "Corpus JSONL to analyze")->required();
    analyze->add_option("--granularity", ao.granularity, "Time bucket size")
        ->capture_default_str()
        ->check(granularity_check);
    analyze->add_option("--normalize", ao.normalize, "Heatmap normalization grouping")
        ->capture_default_str()
        ->check(CLI::IsMember({"minmax-col", "minmax-row"}));
    analyze->add_option("--stoplist", ao.stoplist, "Tags to exclude from co-occurrence")
        ->delimiter(',')
        ->capture_default_str();

    GraphOptions go;
    CLI::App* graph = app.add_subcommand("graph", "Build co-occurrence graphs");
    graph->add_option("--matrix", go.matrix_path,
                      "Matrix CSV to read (default <out-dir>/tags_cooc.csv)");
    graph->add_option("--min-edge-weight", go.min_edge_weight, "Drop edges below this count")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    graph->add_option("--layout-iterations", go.layout_iterations, "Force layout iterations")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    graph->add_option("--stoplist", go.stoplist, "Tags to exclude from the graph")
        ->delimiter(',')
        ->capture_default_str();
    graph->add_flag("--expand-related", go.expand_related,
                    "Also build the related-technology expansion graph");

    TimeseriesOptions to;
    CLI::App* timeseries = app.add_subcommand("timeseries", "Per-tag publication series");
    timeseries->add_option("--corpus", to.corpus_path, "Corpus JSONL to analyze")->required();
    timeseries->add_option("--tag", to.tags, "Tag to count per bucket (repeatable)");
    timeseries->add_option("--granularity", to.granularity, "Time bucket size")
        ->capture_default_str()
        ->check(granularity_check);
    timeseries->add_flag("--tech", to.tech_stats,
                         "Also count articles with at least one technology mention");
    timeseries->add_flag("--trend", to.trend, "Fit and save a linear trend per series");

    CLI::App* report = app.add_subcommand("report", "Print the accumulated run report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (fetch->parsed()) run_fetch(g, fo);
        if (analyze->parsed()) run_analyze(g, ao);
        if (graph->parsed()) run_graph(g, go);
        if (timeseries->parsed()) run_timeseries(g, to);
        if (report->parsed()) run_report(g);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
