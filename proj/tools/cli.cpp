// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Stratagem Contributors
#include "cli.hpp"

#include <atomic>
#include <cstdio>
#include <fstream>
#include <thread>

#include <csignal>
#include <pthread.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "stratagem/engine.hpp"
#include "stratagem/error.hpp"
#include "stratagem/service.hpp"
#include "stratagem/snapshot.hpp"

namespace stratagem::cli {

namespace {

struct QueryArgs {
    std::string snapshot;
    std::string q;
    std::string rerank = "none";
    std::string expand = "off";
    std::vector<std::string> terms;
    std::size_t top_m = 3;
    std::size_t k = kDefaultPageSize;
    std::size_t offset = 0;
    std::string format = "text";
    bool timing = true;
};

struct IngestArgs {
    std::string corpus;
    std::string out;
    std::string stopwords;
    std::uint64_t min_joint = 2;
    double k1 = 1.2;
    double b = 0.75;
};

struct ServeArgs {
    std::string snapshot;
    std::string corpus;
    std::string addr = "127.0.0.1:8080";
};

BuildOptions build_options(const IngestArgs& args)
{
    BuildOptions opts;
    if (!args.stopwords.empty()) {
        opts.tokenizer = Tokenizer::from_stopword_file(args.stopwords);
    }
    opts.bm25 = {args.k1, args.b};
    opts.min_joint = args.min_joint;
    return opts;
}

bool looks_like_snapshot(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::string head(std::char_traits<char>::length(kSnapshotMagic), '\0');
    in.read(head.data(), static_cast<std::streamsize>(head.size()));
    return in && head == kSnapshotMagic;
}

std::shared_ptr<const Snapshot> open_snapshot(const std::string& path)
{
    if (looks_like_snapshot(path)) {
        return load_snapshot(path);
    }
    return Snapshot::build(load_corpus(path));
}

Service::Params to_params(const QueryArgs& args)
{
    Service::Params params{
        {"q", args.q},
        {"rerank", args.rerank},
        {"expand", !args.terms.empty() && args.expand == "off" ? std::string("terms") : args.expand},
        {"top_m", std::to_string(args.top_m)},
        {"k", std::to_string(args.k)},
        {"offset", std::to_string(args.offset)},
    };
    for (const auto& t : args.terms) {
        params.emplace("term", t);
    }
    return params;
}

int cmd_validate(const std::string& path, std::ostream& out)
{
    const auto corpus = load_corpus(path);
    std::size_t with_issn = 0;
    std::size_t with_authors = 0;
    std::size_t with_descriptors = 0;
    for (const auto& r : corpus.records()) {
        with_issn += r.issn.has_value();
        with_authors += !r.authors.empty();
        with_descriptors += !r.descriptors.empty();
    }
    out << corpus.size() << " records OK (" << with_issn << " with ISSN, " << with_authors
        << " with authors, " << with_descriptors << " with descriptors)\n";
    return ok;
}

int cmd_ingest(const IngestArgs& args, std::ostream& out)
{
    const auto snap = Snapshot::build(load_corpus(args.corpus), build_options(args));
    save_snapshot(*snap, args.out);
    out << "indexed " << snap->corpus.size() << " records, " << snap->index.all_postings().size()
        << " terms, " << snap->model.joint_df().size() << " associations -> " << args.out
        << '\n';
    return ok;
}

int cmd_query(const QueryArgs& args, std::ostream& out, std::ostream& err)
{
    if (!parse_rerank(args.rerank)) {
        err << "unknown rerank mode '" << args.rerank << "'\n";
        return usage;
    }
    if (!parse_expand(args.expand)) {
        err << "unknown expand mode '" << args.expand << "'\n";
        return usage;
    }
    const auto snap = open_snapshot(args.snapshot);
    Service service(Service::Options{args.timing});
    service.set_snapshot(snap);
    const auto response = service.search(to_params(args));
    if (response.status != 200) {
        err << response.body << '\n';
        return usage;
    }
    if (args.format == "json") {
        out << response.body << '\n';
        return ok;
    }

    // Text output is derived from the same response so both formats agree.
    const auto body = nlohmann::json::parse(response.body);
    for (const auto& hit : body.at("hits")) {
        std::string explain;
        for (const auto& tag : hit.at("explain")) {
            explain += (explain.empty() ? "" : "+") + tag.get<std::string>();
        }
        char score[64];
        std::snprintf(score, sizeof score, "%.6f", hit.at("score").get<double>());
        out << hit.at("rank").get<std::size_t>() << '\t' << score << '\t'
            << hit.at("id").get<std::string>() << '\t' << hit.at("title").get<std::string>()
            << '\t' << explain << '\n';
    }
    return ok;
}

int cmd_suggest(const std::string& snapshot, const std::string& q, std::size_t k,
                std::ostream& out)
{
    const auto snap = open_snapshot(snapshot);
    for (const auto& s : suggest(snap->model, snap->index.tokenizer(), q, k)) {
        char score[64];
        std::snprintf(score, sizeof score, "%.6f", s.score);
        out << score << '\t' << s.support << '\t' << s.descriptor << '\n';
    }
    return ok;
}

int cmd_graph(const std::string& snapshot, const std::string& q, const std::string& path,
              std::ostream& out)
{
    const auto snap = open_snapshot(snapshot);
    const auto graph = build_graph(base_result(*snap, q), snap->corpus);
    if (path.empty() || path == "-") {
        graph.write_edge_list(out);
        return ok;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw IoError("cannot write '" + path + "'");
    }
    graph.write_edge_list(file);
    return ok;
}

int cmd_synth(const SyntheticParams& params, const std::string& path, std::ostream& out)
{
    const auto corpus = generate_synthetic(params);
    if (path.empty() || path == "-") {
        for (const auto& r : corpus.records()) {
            out << serialize_record(r) << '\n';
        }
        return ok;
    }
    write_corpus(corpus, path);
    return ok;
}

int cmd_serve(const ServeArgs& args, std::ostream& out, std::ostream& err)
{
    if (args.snapshot.empty() == args.corpus.empty()) {
        err << "serve needs exactly one of --snapshot or --corpus\n";
        return usage;
    }
    const auto addr = parse_address(args.addr);
    if (!addr) {
        err << "invalid listen address '" << args.addr << "', expected host:port\n";
        return usage;
    }

    // SIGINT/SIGTERM are collected by a dedicated thread; every thread
    // spawned after this point inherits the mask.
    sigset_t signals;
    sigemptyset(&signals);
    sigaddset(&signals, SIGINT);
    sigaddset(&signals, SIGTERM);
    pthread_sigmask(SIG_BLOCK, &signals, nullptr);

    Service service;
    HttpServer server(service);
    const int port = server.bind(addr->host, addr->port);
    if (port < 0) {
        err << "cannot listen on " << args.addr << '\n';
        return usage;
    }
    out << "listening on " << addr->host << ':' << port << std::endl;

    std::atomic<bool> stopping{false};
    std::thread signal_waiter([&] {
        int sig = 0;
        sigwait(&signals, &sig);
        stopping = true;
        server.stop();
    });

    std::atomic<int> load_status{ok};
    std::thread loader([&] {
        try {
            auto snap = args.snapshot.empty() ? Snapshot::build(load_corpus(args.corpus))
                                              : load_snapshot(args.snapshot);
            out << "serving " << snap->corpus.size() << " records" << std::endl;
            service.set_snapshot(std::move(snap));
        } catch (const Error& e) {
            err << "error: " << e.what() << std::endl;
            load_status = data_error;
            server.stop();
        } catch (const std::exception& e) {
            err << "internal error: " << e.what() << std::endl;
            load_status = internal_error;
            server.stop();
        }
    });

    server.listen_after_bind();
    loader.join();
    if (!stopping) {
        pthread_kill(signal_waiter.native_handle(), SIGTERM);
    }
    signal_waiter.join();
    pthread_sigmask(SIG_UNBLOCK, &signals, nullptr);
    return load_status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"stratagem: bibliographic search with co-word expansion, Bradfordizing and "
                 "author-centrality re-ranking"};
    app.require_subcommand(1);

    std::string validate_path;
    auto* validate = app.add_subcommand("validate", "Check a JSONL corpus");
    validate->add_option("corpus", validate_path, "JSONL corpus file")->required();

    IngestArgs ingest_args;
    auto* ingest = app.add_subcommand("ingest", "Build and persist index and association model");
    ingest->add_option("corpus", ingest_args.corpus, "JSONL corpus file")->required();
    ingest->add_option("snapshot", ingest_args.out, "Output snapshot file")->required();
    ingest->add_option("--stopwords", ingest_args.stopwords, "Stopword file, one per line");
    ingest->add_option("--min-joint", ingest_args.min_joint, "Minimum co-occurrence count")
        ->check(CLI::PositiveNumber);
    ingest->add_option("--k1", ingest_args.k1, "BM25 k1")->check(CLI::NonNegativeNumber);
    ingest->add_option("--b", ingest_args.b, "BM25 b")->check(CLI::Range(0.0, 1.0));

    QueryArgs query_args;
    auto* query = app.add_subcommand("query", "Run one search and print the ranked list");
    query->add_option("snapshot", query_args.snapshot, "Snapshot or JSONL corpus")->required();
    query->add_option("q", query_args.q, "Query text")->required();
    query->add_option("--rerank", query_args.rerank, "none, bradford or centrality");
    query->add_option("--expand", query_args.expand, "off, auto or terms");
    query->add_option("--term", query_args.terms, "Descriptor to add (implies --expand terms)");
    query->add_option("--top-m", query_args.top_m, "Descriptors added by automatic expansion");
    query->add_option("--k", query_args.k, "Page size");
    query->add_option("--offset", query_args.offset, "Page offset");
    query->add_option("--format", query_args.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    query->add_flag("!--no-timing", query_args.timing, "Omit elapsed_ms from JSON output");

    std::string suggest_snapshot, suggest_q;
    std::size_t suggest_k = 10;
    auto* suggest_cmd = app.add_subcommand("suggest", "List descriptor suggestions for a query");
    suggest_cmd->add_option("snapshot", suggest_snapshot, "Snapshot or JSONL corpus")->required();
    suggest_cmd->add_option("q", suggest_q, "Query text")->required();
    suggest_cmd->add_option("--k", suggest_k, "Number of suggestions");

    std::string graph_snapshot, graph_q, graph_out;
    auto* graph = app.add_subcommand("graph", "Export the co-author graph of a query's results");
    graph->add_option("snapshot", graph_snapshot, "Snapshot or JSONL corpus")->required();
    graph->add_option("q", graph_q, "Query text")->required();
    graph->add_option("--out", graph_out, "Edge-list file (default stdout)");

    SyntheticParams synth_params;
    std::string synth_out;
    auto* synth = app.add_subcommand("synth", "Write a synthetic JSONL corpus");
    synth->add_option("--docs", synth_params.n_docs, "Number of records");
    synth->add_option("--journals", synth_params.n_journals, "Number of journals")
        ->check(CLI::PositiveNumber);
    synth->add_option("--skew", synth_params.skew, "Zipf exponent of journal sizes")
        ->check(CLI::PositiveNumber);
    synth->add_option("--seed", synth_params.seed, "Random seed");
    synth->add_option("--out", synth_out, "Output file (default stdout)");

    ServeArgs serve_args;
    auto* serve = app.add_subcommand("serve", "Run the HTTP API");
    serve->add_option("--snapshot", serve_args.snapshot, "Snapshot file");
    serve->add_option("--corpus", serve_args.corpus, "JSONL corpus, indexed at startup")
        ->envname("STRATAGEM_CORPUS");
    serve->add_option("--addr", serve_args.addr, "Listen address host:port")
        ->envname("STRATAGEM_ADDR");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    try {
        if (*validate) {
            return cmd_validate(validate_path, out);
        }
        if (*ingest) {
            return cmd_ingest(ingest_args, out);
        }
        if (*query) {
            return cmd_query(query_args, out, err);
        }
        if (*suggest_cmd) {
            return cmd_suggest(suggest_snapshot, suggest_q, suggest_k, out);
        }
        if (*graph) {
            return cmd_graph(graph_snapshot, graph_q, graph_out, out);
        }
        if (*synth) {
            return cmd_synth(synth_params, synth_out, out);
        }
        if (*serve) {
            return cmd_serve(serve_args, out, err);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return data_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return internal_error;
    }
    return usage;
}

}  // namespace stratagem::cli
