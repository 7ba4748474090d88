// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Stratagem Contributors
#include "stratagem/centrality.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "stratagem/error.hpp"

namespace stratagem {

CoauthorGraph::CoauthorGraph(std::vector<std::string> authors)
{
    std::sort(authors.begin(), authors.end());
    authors.erase(std::unique(authors.begin(), authors.end()), authors.end());
    m_names = std::move(authors);
    for (std::size_t i = 0; i < m_names.size(); ++i) {
        m_nodes.emplace(m_names[i], i);
    }
    m_adjacency.resize(m_names.size());
    m_betweenness.assign(m_names.size(), 0.0);
    m_doc_counts.assign(m_names.size(), 0);
}

std::size_t CoauthorGraph::node(const std::string& author) const
{
    auto it = m_nodes.find(author);
    if (it == m_nodes.end()) {
        throw ConsistencyError("author '" + author + "' is not in the graph");
    }
    return it->second;
}

std::size_t CoauthorGraph::edge_count() const noexcept
{
    std::size_t twice = 0;
    for (const auto& list : m_adjacency) {
        twice += list.size();
    }
    return twice / 2;
}

void CoauthorGraph::add_edge(std::size_t u, std::size_t v, std::uint32_t weight)
{
    if (u == v) {
        return;
    }
    auto bump = [&](std::size_t from, std::size_t to) {
        auto& list = m_adjacency.at(from);
        auto it = std::lower_bound(list.begin(), list.end(), to,
                                   [](const Edge& e, std::size_t n) { return e.to < n; });
        if (it != list.end() && it->to == to) {
            it->weight += weight;
        } else {
            list.insert(it, Edge{to, weight});
        }
    };
    bump(u, v);
    bump(v, u);
}

void CoauthorGraph::compute_betweenness()
{
    m_betweenness = brandes_betweenness(*this);
}

void CoauthorGraph::write_edge_list(std::ostream& out) const
{
    for (std::size_t u = 0; u < m_adjacency.size(); ++u) {
        for (const auto& e : m_adjacency[u]) {
            if (u < e.to) {
                out << m_names[u] << '\t' << m_names[e.to] << '\t' << e.weight << '\n';
            }
        }
    }
}

CoauthorGraph build_graph(const ResultSet& result, const Corpus& corpus)
{
    std::vector<const Record*> docs;
    std::vector<std::string> authors;
    std::set<std::string> seen_docs;
    for (const auto& hit : result.hits) {
        if (!seen_docs.insert(hit.doc_id).second) {
            continue;
        }
        const auto& rec = corpus.at(hit.doc_id);
        docs.push_back(&rec);
        authors.insert(authors.end(), rec.authors.begin(), rec.authors.end());
    }

    CoauthorGraph graph(std::move(authors));
    for (const Record* rec : docs) {
        std::vector<std::size_t> nodes;
        for (const auto& a : rec->authors) {
            nodes.push_back(graph.node(a));
        }
        std::sort(nodes.begin(), nodes.end());
        nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            ++graph.m_doc_counts[nodes[i]];
            for (std::size_t j = i + 1; j < nodes.size(); ++j) {
                graph.add_edge(nodes[i], nodes[j]);
            }
        }
    }
    graph.compute_betweenness();
    return graph;
}

std::vector<double> brandes_betweenness(const CoauthorGraph& graph)
{
    const std::size_t n = graph.size();
    constexpr auto unseen = std::numeric_limits<std::size_t>::max();

    std::vector<double> centrality(n, 0.0);
    std::vector<std::size_t> dist(n);
    std::vector<double> sigma(n);
    std::vector<double> delta(n);
    std::vector<std::vector<std::size_t>> preds(n);
    std::vector<std::size_t> order;  // BFS visit order; reversed for accumulation
    order.reserve(n);

    for (std::size_t s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), unseen);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto& p : preds) {
            p.clear();
        }
        order.clear();

        dist[s] = 0;
        sigma[s] = 1.0;
        order.push_back(s);
        for (std::size_t head = 0; head < order.size(); ++head) {
            const std::size_t v = order[head];
            for (const auto& e : graph.neighbours(v)) {
                const std::size_t w = e.to;
                if (dist[w] == unseen) {
                    dist[w] = dist[v] + 1;
                    order.push_back(w);
                }
                if (dist[w] == dist[v] + 1) {
                    sigma[w] += sigma[v];
                    preds[w].push_back(v);
                }
            }
        }

        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const std::size_t w = *it;
            for (std::size_t v : preds[w]) {
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            }
            if (w != s) {
                centrality[w] += delta[w];
            }
        }
    }
    // Every unordered pair was counted from both endpoints.
    for (auto& c : centrality) {
        c /= 2.0;
    }
    return centrality;
}

std::map<std::string, double> betweenness(const CoauthorGraph& graph)
{
    std::map<std::string, double> out;
    const auto& values = graph.betweenness();
    for (std::size_t i = 0; i < graph.size(); ++i) {
        out.emplace(graph.names()[i], i < values.size() ? values[i] : 0.0);
    }
    return out;
}

ResultSet centrality_rerank(const ResultSet& result, const CoauthorGraph& graph,
                            const Corpus& corpus, const CentralityOptions& options)
{
    const auto& values = graph.betweenness();
    ResultSet out;
    out.query = result.query;
    out.total = result.total;
    out.hits.reserve(result.hits.size());

    for (const auto& hit : result.hits) {
        double doc_score = 0.0;
        for (const auto& author : corpus.at(hit.doc_id).authors) {
            const double b = values.at(graph.node(author));
            doc_score = options.aggregate == AuthorAggregate::max ? std::max(doc_score, b)
                                                                  : doc_score + b;
        }
        Hit copy = hit;
        copy.score = doc_score;
        copy.explain.push_back("centrality");
        out.hits.push_back(std::move(copy));
    }
    std::sort(out.hits.begin(), out.hits.end(), [](const Hit& a, const Hit& b) {
        if (a.score != b.score) {
            return a.score > b.score;
        }
        if (a.base_score != b.base_score) {
            return a.base_score > b.base_score;
        }
        return a.doc_id < b.doc_id;
    });
    return out;
}

std::vector<AuthorRow> author_table(const CoauthorGraph& graph, std::size_t k)
{
    std::vector<AuthorRow> rows;
    rows.reserve(graph.size());
    for (std::size_t i = 0; i < graph.size(); ++i) {
        rows.push_back({graph.names()[i], graph.betweenness().at(i), graph.doc_counts().at(i)});
    }
    std::sort(rows.begin(), rows.end(), [](const AuthorRow& a, const AuthorRow& b) {
        if (a.betweenness != b.betweenness) {
            return a.betweenness > b.betweenness;
        }
        return a.name < b.name;
    });
    if (rows.size() > k) {
        rows.resize(k);
    }
    return rows;
}

}  // namespace stratagem
