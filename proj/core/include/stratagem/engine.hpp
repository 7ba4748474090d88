// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Stratagem Contributors
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stratagem/bradford.hpp"
#include "stratagem/centrality.hpp"
#include "stratagem/recommender.hpp"
#include "stratagem/snapshot.hpp"

namespace stratagem {

enum class Rerank { none, bradford, centrality };
enum class ExpandMode { off, automatic, terms };

std::optional<Rerank> parse_rerank(std::string_view text);
std::string_view to_string(Rerank rerank);
std::optional<ExpandMode> parse_expand(std::string_view text);
std::string_view to_string(ExpandMode mode);

/// Depth of the candidate list handed to re-rankers; pages are cut from it.
inline constexpr std::size_t kRerankDepth = 1000;
inline constexpr std::size_t kMaxPageSize = 1000;
inline constexpr std::size_t kDefaultPageSize = 50;

struct SearchRequest {
    std::string q;
    Rerank rerank = Rerank::none;
    ExpandMode expand = ExpandMode::off;
    /// Descriptors for ExpandMode::terms.
    std::vector<std::string> terms;
    std::size_t top_m = 3;
    std::size_t k = kDefaultPageSize;
    std::size_t offset = 0;
};

struct SearchOutcome {
    /// Full re-ranked candidate list (up to kRerankDepth), not paginated.
    ResultSet ranked;
    std::vector<std::string> expansion_terms;
};

/// expand -> base search -> rerank, in that fixed order.
SearchOutcome run_search(const Snapshot& snapshot, const SearchRequest& request);

/// Base result set for the "central journals" / "central persons" tables.
ResultSet base_result(const Snapshot& snapshot, std::string_view q);

}  // namespace stratagem
