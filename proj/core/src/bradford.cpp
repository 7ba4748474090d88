// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Stratagem Contributors
#include "stratagem/bradford.hpp"

#include <algorithm>
#include <map>

namespace stratagem {

namespace {

struct Grouping {
    std::vector<JournalGroup> groups;
    std::vector<const Hit*> issnless;
    std::map<std::string, const Hit*> by_id;
};

// Steps one and two: split hits by ISSN and count each journal.
Grouping group_hits(const ResultSet& result, const Index& index)
{
    std::vector<const Hit*> ordered;
    ordered.reserve(result.hits.size());
    for (const auto& h : result.hits) {
        ordered.push_back(&h);
    }
    // Base rank is a property of the hits, not of the order they arrive in.
    std::sort(ordered.begin(), ordered.end(), [](const Hit* a, const Hit* b) {
        if (a->base_score != b->base_score) {
            return a->base_score > b->base_score;
        }
        return a->doc_id < b->doc_id;
    });

    Grouping g;
    std::map<std::string, std::size_t> slot;
    std::vector<double> best;
    for (const Hit* h : ordered) {
        g.by_id.emplace(h->doc_id, h);
        const auto& doc = index.doc(h->doc_id);
        if (!doc.issn) {
            g.issnless.push_back(h);
            continue;
        }
        auto [it, fresh] = slot.try_emplace(*doc.issn, g.groups.size());
        if (fresh) {
            g.groups.push_back({*doc.issn, 0, {}});
            best.push_back(h->base_score);
        }
        auto& group = g.groups[it->second];
        ++group.count;
        group.members.push_back(h->doc_id);
    }

    // Step three: the journal with the highest facet count goes first.
    std::vector<std::size_t> order(g.groups.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& ga = g.groups[a];
        const auto& gb = g.groups[b];
        if (ga.count != gb.count) {
            return ga.count > gb.count;
        }
        if (best[a] != best[b]) {
            return best[a] > best[b];
        }
        return ga.issn < gb.issn;
    });
    std::vector<JournalGroup> sorted;
    sorted.reserve(order.size());
    for (auto i : order) {
        sorted.push_back(std::move(g.groups[i]));
    }
    g.groups = std::move(sorted);
    return g;
}

}  // namespace

std::vector<JournalGroup> journal_table(const ResultSet& result, const Index& index)
{
    return group_hits(result, index).groups;
}

ResultSet bradfordize(const ResultSet& result, const Index& index, const BradfordOptions& options)
{
    auto g = group_hits(result, index);

    ResultSet out;
    out.query = result.query;
    out.total = result.total;
    out.hits.reserve(result.hits.size());

    auto emit = [&out](const Hit& h, double score) {
        Hit copy = h;
        copy.score = score;
        copy.explain.push_back("bradford");
        out.hits.push_back(std::move(copy));
    };
    for (const auto& group : g.groups) {
        for (const auto& id : group.members) {
            emit(*g.by_id.at(id), static_cast<double>(group.count));
        }
    }
    if (options.issnless == IssnlessPolicy::trail) {
        for (const Hit* h : g.issnless) {
            emit(*h, 0.0);
        }
    } else if (out.total >= g.issnless.size()) {
        out.total -= g.issnless.size();
    }
    return out;
}

}  // namespace stratagem
