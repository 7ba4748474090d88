// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Stratagem Contributors
//
// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Thresholds are fixed here and nowhere else.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "properties.hpp"
#include "stratagem/bradford.hpp"
#include "stratagem/centrality.hpp"
#include "stratagem/engine.hpp"
#include "stratagem/recommender.hpp"
#include "stratagem/service.hpp"
#include "stratagem/snapshot.hpp"

using namespace stratagem;
using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kBetweennessTolerance = 1e-9;
constexpr double kG2Tolerance = 1e-9;
constexpr double kBm25Tolerance = 1e-6;
constexpr double kRuntimeBudgetSeconds = 5.0;
constexpr double kDivergenceShare = 0.80;
constexpr double kP95BudgetMs = 100.0;

/// A failed check inside a criterion; the message ends up on the FAIL line.
struct Failure {
    std::string what;
};

void expect(bool condition, const std::string& what)
{
    if (!condition) {
        throw Failure{what};
    }
}

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void criterion(const std::string& name, const std::function<std::string()>& body)
{
    Outcome outcome;
    try {
        outcome.detail = body();
        outcome.pass = true;
    } catch (const Failure& f) {
        outcome.detail = f.what;
    } catch (const std::exception& e) {
        outcome.detail = std::string("exception: ") + e.what();
    }
    failures += outcome.pass ? 0 : 1;
    std::printf("[%s] %s: %s\n", outcome.pass ? "PASS" : "FAIL", name.c_str(),
                outcome.detail.c_str());
    std::fflush(stdout);
}

CoauthorGraph graph_from(const oracle::AdjacencyMatrix& adj)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < adj.size(); ++i) names.push_back("v" + std::to_string(i));
    CoauthorGraph g(names);
    for (std::size_t u = 0; u < adj.size(); ++u)
        for (std::size_t v = u + 1; v < adj.size(); ++v)
            if (adj[u][v]) g.add_edge(u, v);
    g.compute_betweenness();
    return g;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b)
{
    expect(a.size() == b.size(), "size mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

std::string fmt(const char* pattern, double value)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, value);
    return buf;
}

// Queries used by the API and determinism criteria.
const std::vector<std::string> kFixtureQueries = {
    "media war",          "war",                 "newspaper coverage",   "school reform",
    "teacher curriculum", "university learning", "sport doping",         "athletes training",
    "unemployment wages", "trade unions strike", "migration refugees",   "asylum border",
    "health care",        "hospital patients",   "election parties",     "democracy populism",
    "family marriage",    "children gender",     "comparative analysis", "",
};

std::vector<std::string> hit_ids(const json& body)
{
    std::vector<std::string> out;
    for (const auto& h : body.at("hits")) out.push_back(h.at("id").get<std::string>());
    return out;
}

// Vocabulary-drawn queries of 1-3 tokens with at least two hits.
std::vector<std::string> random_queries(const Index& index, std::size_t count, std::uint64_t seed)
{
    std::vector<std::string> vocab;
    for (const auto& [t, _] : index.all_postings()) vocab.push_back(t);
    std::mt19937_64 rng(seed);
    std::vector<std::string> out;
    while (out.size() < count) {
        const std::size_t n_tokens = 1 + rng() % 3;
        std::string q;
        for (std::size_t i = 0; i < n_tokens; ++i) {
            q += (q.empty() ? "" : " ") + vocab[rng() % vocab.size()];
        }
        if (index.search(q, 0).total >= 2) out.push_back(q);
    }
    return out;
}

}  // namespace

int main()
{
    std::printf("stratagem acceptance suite\n");

    criterion("betweenness: Brandes equals brute-force enumeration", [] {
        const auto start = Clock::now();
        std::mt19937_64 rng(20101022);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const auto adj = oracle::random_graph(rng, 8);
            worst = std::max(worst, max_abs_diff(graph_from(adj).betweenness(),
                                                 oracle::brute_force_betweenness(adj)));
        }
        expect(worst <= kBetweennessTolerance, "max deviation " + fmt("%.3g", worst));

        // Closed forms: path P_n gives i*(n-1-i); star gives C(leaves,2) at the
        // centre; complete graphs give 0 everywhere.
        for (std::size_t n = 1; n <= 8; ++n) {
            oracle::AdjacencyMatrix path(n, std::vector<bool>(n, false));
            oracle::AdjacencyMatrix star = path;
            oracle::AdjacencyMatrix complete(n, std::vector<bool>(n, true));
            for (std::size_t i = 0; i < n; ++i) complete[i][i] = false;
            for (std::size_t i = 0; i + 1 < n; ++i) path[i][i + 1] = path[i + 1][i] = true;
            for (std::size_t i = 1; i < n; ++i) star[0][i] = star[i][0] = true;
            std::vector<double> path_expected(n), star_expected(n, 0.0), zero(n, 0.0);
            for (std::size_t i = 0; i < n; ++i) path_expected[i] = double(i * (n - 1 - i));
            if (n > 0) star_expected[0] = double((n - 1) * (n >= 2 ? n - 2 : 0)) / 2.0;
            expect(max_abs_diff(graph_from(path).betweenness(), path_expected) <= kBetweennessTolerance,
                   "path P" + std::to_string(n));
            expect(max_abs_diff(graph_from(star).betweenness(), star_expected) <= kBetweennessTolerance,
                   "star with " + std::to_string(n - 1) + " leaves");
            expect(max_abs_diff(graph_from(complete).betweenness(), zero) <= kBetweennessTolerance,
                   "complete K" + std::to_string(n));
        }
        const double elapsed = seconds_since(start);
        expect(elapsed < kRuntimeBudgetSeconds, "took " + fmt("%.2f s", elapsed));
        return "100 random graphs, max deviation " + fmt("%.1e", worst) +
               ", closed forms ok, " + fmt("%.3f s", elapsed);
    });

    criterion("bradfordizing: contract over 500 random result sets", [] {
        const auto start = Clock::now();
        std::mt19937_64 rng(500);
        std::size_t reordered = 0;
        for (int i = 0; i < 500; ++i) {
            auto r = props::random_result(rng);
            auto once = bradfordize(r.result, r.index);
            const auto why = props::bradford_contract(r.result, once, r.index);
            expect(why.empty(), "set " + std::to_string(i) + ": " + why);
            expect(props::same_order(once, bradfordize(once, r.index)),
                   "set " + std::to_string(i) + ": not idempotent");
            reordered += props::same_order(once, r.result) ? 0 : 1;
        }
        const double elapsed = seconds_since(start);
        expect(elapsed < kRuntimeBudgetSeconds, "took " + fmt("%.2f s", elapsed));
        return std::to_string(reordered) + "/500 sets reordered, all contracts hold, " +
               fmt("%.3f s", elapsed);
    });

    criterion("bradfordizing: three-document worked example", [] {
        // d1 in journal B, d2 and d3 in journal A; A's facet count 2 beats B's 1.
        Corpus c({fixture::rec("d1", "t", {}, "2222-2222"), fixture::rec("d2", "t", {}, "1111-1111"),
                  fixture::rec("d3", "t", {}, "1111-1111")});
        const auto idx = Index::build(c);
        const auto out = bradfordize(fixture::ranked({"d1", "d2", "d3"}), idx);
        expect(fixture::ids(out) == std::vector<std::string>{"d2", "d3", "d1"},
               "unexpected order");
        return std::string("[d1,d2,d3] -> [d2,d3,d1]");
    });

    criterion("association model: counts and G^2 match brute-force recount", [] {
        const auto corpus = generate_synthetic({200, 10, 1.0, 200});
        const Tokenizer tok;
        const auto model = train(corpus, tok);
        expect(!model.joint_df().empty(), "model retained no pairs");
        double worst = 0.0;
        for (const auto& [pair, joint] : model.joint_df()) {
            const auto ref = oracle::recount(corpus, tok, pair.first, pair.second);
            expect(joint == ref.joint && model.term_df().at(pair.first) == ref.term_df &&
                       model.desc_df().at(pair.second) == ref.desc_df,
                   "count mismatch for (" + pair.first + ", " + pair.second + ")");
            expect(joint >= model.min_joint() && joint <= std::min(ref.term_df, ref.desc_df),
                   "joint bounds violated");
            const double n = 200.0;
            const double k11 = double(ref.joint), k12 = double(ref.term_df - ref.joint),
                         k21 = double(ref.desc_df - ref.joint),
                         k22 = n - double(ref.term_df) - double(ref.desc_df) + double(ref.joint);
            double expected = oracle::g2_entropy_form(k11, k12, k21, k22);
            if (k11 < double(ref.term_df) * double(ref.desc_df) / n) expected = -expected;
            worst = std::max(worst, std::abs(*association_score(model, pair.first, pair.second) - expected));
        }
        expect(worst <= kG2Tolerance, "max G^2 deviation " + fmt("%.3g", worst));

        // Completeness: every pair the records support at min_joint is retained.
        std::map<std::pair<std::string, std::string>, std::uint64_t> all_pairs;
        for (const auto& rec : corpus.records()) {
            const auto toks = tok.tokenize(rec.title + " " + rec.abstract);
            const std::set<std::string> uniq(toks.begin(), toks.end());
            for (const auto& t : uniq)
                for (const auto& d : rec.descriptors) ++all_pairs[{t, d}];
        }
        std::size_t expected_pairs = 0;
        for (const auto& [_, n] : all_pairs) expected_pairs += n >= model.min_joint();
        expect(expected_pairs == model.joint_df().size(), "retained pair set incomplete");
        return std::to_string(model.joint_df().size()) + " pairs, max G^2 deviation " +
               fmt("%.1e", worst);
    });

    criterion("BM25: hand computation and tf monotonicity", [] {
        Corpus c({fixture::rec("d1", "war media"), fixture::rec("d2", "war"),
                  fixture::rec("d3", "peace")});
        const auto idx = Index::build(c);
        const auto rs = idx.search("war", 10);
        expect(fixture::ids(rs) == std::vector<std::string>{"d2", "d1"}, "order is not [d2, d1]");
        const double avg = 4.0 / 3.0;
        const double d2 = oracle::bm25_term(1, 1, avg, 2, 3);
        const double d1 = oracle::bm25_term(1, 2, avg, 2, 3);
        const double worst = std::max(std::abs(rs.hits[0].score - d2), std::abs(rs.hits[1].score - d1));
        expect(worst <= kBm25Tolerance, "deviation " + fmt("%.3g", worst));

        std::size_t pairs = 0;
        for (std::uint32_t len = 2; len <= 10; ++len) {
            for (std::uint32_t tf = 1; tf < len; ++tf) {
                std::string lo, hi;
                for (std::uint32_t i = 0; i < len; ++i) {
                    lo += i < tf ? "war " : "filler ";
                    hi += i < tf + 1 ? "war " : "filler ";
                }
                Corpus pair({fixture::rec("lo", lo), fixture::rec("hi", hi), fixture::rec("x", "peace")});
                const auto r = Index::build(pair).search("war", 10);
                expect(r.hits.size() == 2 && r.hits[0].doc_id == "hi" &&
                           r.hits[0].score > r.hits[1].score,
                       "tf monotonicity fails at len " + std::to_string(len));
                ++pairs;
            }
        }
        return "deviation " + fmt("%.1e", worst) + ", " + std::to_string(pairs) +
               " monotonicity pairs";
    });

    const auto corpus_1000 = generate_synthetic({1000, 20, 1.5, 42});
    const auto snapshot = Snapshot::build(corpus_1000);

    criterion("expansion monotonicity over 50 random queries", [&] {
        const auto& idx = snapshot->index;
        std::size_t grew = 0;
        for (const auto& q : random_queries(idx, 50, 77)) {
            const auto base = idx.search(q, idx.n_docs());
            const auto expanded = idx.search(
                expand_query(idx, q, suggest(snapshot->model, idx.tokenizer(), q, 3),
                             AutomaticExpansion{}),
                idx.n_docs());
            const auto exp_ids = fixture::ids(expanded);
            const std::set<std::string> bigger(exp_ids.begin(), exp_ids.end());
            for (const auto& h : base.hits) {
                expect(bigger.count(h.doc_id) == 1, "'" + q + "' lost " + h.doc_id);
            }
            grew += expanded.total > base.total;
        }
        return "superset in 50/50, strictly larger in " + std::to_string(grew);
    });

    criterion("divergence: re-rankers change the top 10 for >= 80% of queries", [&] {
        const auto queries = random_queries(snapshot->index, 50, 1010);
        std::size_t changed = 0, by_bradford = 0, by_centrality = 0;
        auto top10_differs = [](const ResultSet& a, const ResultSet& b) {
            const std::size_t n = std::min<std::size_t>(10, a.hits.size());
            for (std::size_t i = 0; i < n; ++i)
                if (a.hits[i].doc_id != b.hits[i].doc_id) return true;
            return false;
        };
        for (const auto& q : queries) {
            SearchRequest req;
            req.q = q;
            const auto base = run_search(*snapshot, req).ranked;
            req.rerank = Rerank::bradford;
            const bool b = top10_differs(base, run_search(*snapshot, req).ranked);
            req.rerank = Rerank::centrality;
            const bool c = top10_differs(base, run_search(*snapshot, req).ranked);
            by_bradford += b;
            by_centrality += c;
            changed += b || c;
        }
        const double share = double(changed) / double(queries.size());
        const auto detail = std::to_string(changed) + "/50 changed (bradford " +
                            std::to_string(by_bradford) + ", centrality " +
                            std::to_string(by_centrality) + ")";
        expect(share >= kDivergenceShare, detail);
        return detail;
    });

    criterion("API contract: equal hit sets, exact pagination, P95 < 100 ms", [&] {
        Service svc;
        svc.set_snapshot(snapshot);
        HttpServer server(svc);
        const int port = server.bind("127.0.0.1", 0);
        expect(port > 0, "cannot bind");
        std::thread loop([&] { server.listen_after_bind(); });
        server.wait_until_ready();
        httplib::Client client("127.0.0.1", port);

        std::vector<double> latencies;
        auto get = [&](const std::string& path, const httplib::Params& params) {
            const auto start = Clock::now();
            auto res = client.Get(path, params, httplib::Headers{});
            latencies.push_back(seconds_since(start) * 1000.0);
            expect(res && res->status == 200, "request failed: " + path);
            return json::parse(res->body);
        };

        std::string error;
        try {
            for (const auto& q : kFixtureQueries) {
                std::vector<std::set<std::string>> sets;
                for (const char* mode : {"none", "bradford", "centrality"}) {
                    const auto full = get("/api/search", {{"q", q}, {"rerank", mode}, {"k", "1000"}});
                    const auto ids = hit_ids(full);
                    sets.emplace_back(ids.begin(), ids.end());
                    expect(sets.back().size() == ids.size(), "duplicate ids for '" + q + "'");

                    std::vector<std::string> stitched;
                    for (std::size_t off = 0; off < ids.size() + 50; off += 50) {
                        const auto page = hit_ids(get("/api/search", {{"q", q}, {"rerank", mode}, {"k", "50"},
                                                                       {"offset", std::to_string(off)}}));
                        stitched.insert(stitched.end(), page.begin(), page.end());
                    }
                    expect(stitched == ids, "pagination mismatch for '" + q + "' (" + mode + ")");
                }
                expect(sets[0] == sets[1] && sets[0] == sets[2], "hit sets differ for '" + q + "'");
            }
        } catch (const Failure& f) {
            error = f.what;
        }
        server.stop();
        loop.join();
        expect(error.empty(), error);

        std::sort(latencies.begin(), latencies.end());
        const double p95 = latencies[static_cast<std::size_t>(0.95 * double(latencies.size() - 1))];
        expect(p95 < kP95BudgetMs, "P95 " + fmt("%.2f ms", p95));
        return std::to_string(kFixtureQueries.size()) + " queries x 3 modes, " +
               std::to_string(latencies.size()) + " requests, P95 " + fmt("%.2f ms", p95);
    });

    criterion("determinism: persisted snapshot serves byte-identical responses", [&] {
        fixture::TempDir dir;
        save_snapshot(*snapshot, dir / "c.snap");
        Service from_disk(Service::Options{false});
        from_disk.set_snapshot(load_snapshot(dir / "c.snap"));
        Service fresh(Service::Options{false});
        fresh.set_snapshot(Snapshot::build(corpus_1000));

        std::size_t compared = 0;
        for (const auto& q : kFixtureQueries) {
            const std::vector<std::pair<std::string, Service::Params>> calls = {
                {"/api/search", {{"q", q}, {"rerank", "none"}}},
                {"/api/search", {{"q", q}, {"rerank", "bradford"}, {"k", "1000"}}},
                {"/api/search", {{"q", q}, {"rerank", "centrality"}, {"expand", "auto"}}},
                {"/api/suggest", {{"q", q}}},
                {"/api/journals", {{"q", q}}},
                {"/api/authors", {{"q", q}}},
            };
            for (const auto& [path, params] : calls) {
                const auto a = from_disk.get(path, params);
                const auto b = fresh.get(path, params);
                expect(a.status == b.status && a.body == b.body, "difference on " + path + " q='" + q + "'");
                ++compared;
            }
        }
        expect(from_disk.get("/api/doc/syn000001", {}).body == fresh.get("/api/doc/syn000001", {}).body,
               "doc endpoint differs");
        return std::to_string(compared + 1) + " responses identical";
    });

    std::printf("%s: %d criterion(s) failed\n", failures ? "FAILED" : "OK", failures);
    return failures == 0 ? 0 : 1;
}
