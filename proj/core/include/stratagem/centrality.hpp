// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Stratagem Contributors
#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "stratagem/corpus.hpp"
#include "stratagem/index.hpp"

namespace stratagem {

/// Undirected co-authorship graph of one result set. Nodes are numbered by
/// author name so the graph does not depend on hit order.
class CoauthorGraph {
  public:
    struct Edge {
        std::size_t to;
        std::uint32_t weight;  // co-authored hits; not used for path lengths
    };

    CoauthorGraph() = default;
    /// Graph over a fixed node list; edges are added with add_edge.
    explicit CoauthorGraph(std::vector<std::string> authors);

    std::size_t size() const noexcept { return m_names.size(); }
    const std::vector<std::string>& names() const noexcept { return m_names; }
    std::size_t node(const std::string& author) const;
    bool contains(const std::string& author) const { return m_nodes.count(author) != 0; }

    /// Neighbours sorted by node number.
    const std::vector<Edge>& neighbours(std::size_t node) const { return m_adjacency.at(node); }
    std::size_t edge_count() const noexcept;

    /// Adds `weight` to the undirected edge u-v. Self-loops are ignored.
    void add_edge(std::size_t u, std::size_t v, std::uint32_t weight = 1);

    /// Per-node betweenness, filled by compute_betweenness.
    const std::vector<double>& betweenness() const noexcept { return m_betweenness; }
    void compute_betweenness();

    /// Per-author number of hits the graph was built from.
    const std::vector<std::size_t>& doc_counts() const noexcept { return m_doc_counts; }

    /// One line per edge: author<TAB>author<TAB>weight, u < v by node number.
    void write_edge_list(std::ostream& out) const;

  private:
    friend CoauthorGraph build_graph(const ResultSet&, const Corpus&);

    std::vector<std::string> m_names;
    std::map<std::string, std::size_t> m_nodes;
    std::vector<std::vector<Edge>> m_adjacency;
    std::vector<double> m_betweenness;
    std::vector<std::size_t> m_doc_counts;
};

/// Nodes for every author on a hit, edges for every author pair sharing a hit.
/// Betweenness is computed before returning.
CoauthorGraph build_graph(const ResultSet& result, const Corpus& corpus);

/// Unnormalized betweenness on the unweighted graph via Brandes' accumulation,
/// halved for undirected pairs.
std::vector<double> brandes_betweenness(const CoauthorGraph& graph);

/// author -> betweenness
std::map<std::string, double> betweenness(const CoauthorGraph& graph);

enum class AuthorAggregate { max, sum };

struct CentralityOptions {
    AuthorAggregate aggregate = AuthorAggregate::max;
};

/// Orders hits by author centrality desc, base score desc, doc id asc.
/// `score` becomes the document's centrality; `base_score` is untouched.
ResultSet centrality_rerank(const ResultSet& result, const CoauthorGraph& graph,
                            const Corpus& corpus, const CentralityOptions& options = {});

struct AuthorRow {
    std::string name;
    double betweenness = 0.0;
    std::size_t doc_count = 0;

    bool operator==(const AuthorRow&) const = default;
};

/// Top-k authors, betweenness desc then name asc.
std::vector<AuthorRow> author_table(const CoauthorGraph& graph, std::size_t k);

}  // namespace stratagem
