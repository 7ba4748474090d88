// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Stratagem Contributors
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "stratagem/index.hpp"

namespace stratagem {

/// Hits of one journal within a result set, in base-rank order.
struct JournalGroup {
    std::string issn;
    std::size_t count = 0;
    std::vector<std::string> members;

    bool operator==(const JournalGroup&) const = default;
};

enum class IssnlessPolicy {
    trail,  ///< keep documents without ISSN after all journal groups
    drop,   ///< remove them from the re-ranked result
};

struct BradfordOptions {
    IssnlessPolicy issnless = IssnlessPolicy::trail;
};

/// Journals ordered by facet count desc, then by their best member's base
/// score desc, then ISSN asc.
std::vector<JournalGroup> journal_table(const ResultSet& result, const Index& index);

/// Core journals first: hits are grouped by ISSN in journal_table order and
/// keep base-rank order inside each group. `score` becomes the journal's
/// facet count (0 for ISSN-less hits); `base_score` is untouched.
ResultSet bradfordize(const ResultSet& result, const Index& index,
                      const BradfordOptions& options = {});

}  // namespace stratagem
