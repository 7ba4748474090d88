// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Stratagem Contributors
#include "stratagem/engine.hpp"

namespace stratagem {

std::optional<Rerank> parse_rerank(std::string_view text)
{
    if (text == "none") {
        return Rerank::none;
    }
    if (text == "bradford") {
        return Rerank::bradford;
    }
    if (text == "centrality") {
        return Rerank::centrality;
    }
    return std::nullopt;
}

std::string_view to_string(Rerank rerank)
{
    switch (rerank) {
    case Rerank::bradford:
        return "bradford";
    case Rerank::centrality:
        return "centrality";
    case Rerank::none:
        break;
    }
    return "none";
}

std::optional<ExpandMode> parse_expand(std::string_view text)
{
    if (text == "off") {
        return ExpandMode::off;
    }
    if (text == "auto") {
        return ExpandMode::automatic;
    }
    if (text == "terms") {
        return ExpandMode::terms;
    }
    return std::nullopt;
}

std::string_view to_string(ExpandMode mode)
{
    switch (mode) {
    case ExpandMode::automatic:
        return "auto";
    case ExpandMode::terms:
        return "terms";
    case ExpandMode::off:
        break;
    }
    return "off";
}

SearchOutcome run_search(const Snapshot& snapshot, const SearchRequest& request)
{
    SearchOutcome outcome;

    ExpandedQuery query;
    switch (request.expand) {
    case ExpandMode::off:
        query = snapshot.index.parse_query(request.q);
        break;
    case ExpandMode::automatic: {
        const auto suggestions = suggest(snapshot.model, snapshot.index.tokenizer(), request.q,
                                         request.top_m);
        query = expand_query(snapshot.index, request.q, suggestions,
                             AutomaticExpansion{request.top_m});
        break;
    }
    case ExpandMode::terms: {
        // Stateless API: the client echoes descriptors it picked from an
        // earlier /api/suggest response, so they are taken as given.
        std::vector<Suggestion> offered;
        for (const auto& t : request.terms) {
            offered.push_back({t, 0.0, 0});
        }
        query = expand_query(snapshot.index, request.q, offered,
                             InteractiveExpansion{request.terms});
        break;
    }
    }
    outcome.expansion_terms = query.descriptors;

    auto base = snapshot.index.search(query, kRerankDepth);
    switch (request.rerank) {
    case Rerank::none:
        outcome.ranked = std::move(base);
        break;
    case Rerank::bradford:
        outcome.ranked = bradfordize(base, snapshot.index);
        break;
    case Rerank::centrality: {
        const auto graph = build_graph(base, snapshot.corpus);
        outcome.ranked = centrality_rerank(base, graph, snapshot.corpus);
        break;
    }
    }
    return outcome;
}

ResultSet base_result(const Snapshot& snapshot, std::string_view q)
{
    return snapshot.index.search(q, kRerankDepth);
}

}  // namespace stratagem
