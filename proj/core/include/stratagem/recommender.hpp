// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Stratagem Contributors
#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "stratagem/corpus.hpp"
#include "stratagem/index.hpp"
#include "stratagem/text.hpp"

namespace stratagem {

/// 2x2 document contingency table for one (term, descriptor) pair.
struct Contingency {
    std::uint64_t k11;  // both
    std::uint64_t k12;  // term only
    std::uint64_t k21;  // descriptor only
    std::uint64_t k22;  // neither
};

/// Dunning's G^2 = 2 * sum k_ij ln(k_ij / E_ij), with 0 ln 0 = 0. Always >= 0.
double log_likelihood_ratio(const Contingency& table);

/// G^2, negated when k11 falls below its expectation under independence.
double signed_log_likelihood_ratio(const Contingency& table);

/// Co-word statistics linking free-text tokens to controlled descriptors.
/// Counts are document presence counts, not term frequencies.
class AssociationModel {
  public:
    using Pair = std::pair<std::string, std::string>;

    AssociationModel() = default;
    /// Reassemble from stored counts. Throws ValidationError on counts that
    /// break the model invariants.
    AssociationModel(std::uint64_t n_docs, std::map<std::string, std::uint64_t> term_df,
                     std::map<std::string, std::uint64_t> desc_df,
                     std::map<Pair, std::uint64_t> joint_df, std::uint64_t min_joint);

    std::uint64_t n_docs() const noexcept { return m_n_docs; }
    std::uint64_t min_joint() const noexcept { return m_min_joint; }
    const std::map<std::string, std::uint64_t>& term_df() const noexcept { return m_term_df; }
    const std::map<std::string, std::uint64_t>& desc_df() const noexcept { return m_desc_df; }
    const std::map<Pair, std::uint64_t>& joint_df() const noexcept { return m_joint_df; }

    std::optional<Contingency> table(std::string_view term, std::string_view descriptor) const;

    /// Retained descriptors for one token with their signed G^2, descriptor order.
    struct Scored {
        std::string descriptor;
        double score;
        std::uint64_t joint;
    };
    const std::vector<Scored>& associations(std::string_view term) const;

    bool operator==(const AssociationModel& other) const;

  private:
    void rebuild_scores();

    std::uint64_t m_n_docs = 0;
    std::uint64_t m_min_joint = 2;
    std::map<std::string, std::uint64_t> m_term_df;
    std::map<std::string, std::uint64_t> m_desc_df;
    std::map<Pair, std::uint64_t> m_joint_df;
    std::map<std::string, std::vector<Scored>, std::less<>> m_by_term;
};

AssociationModel train(const Corpus& corpus, const Tokenizer& tokenizer = {},
                       std::uint64_t min_joint = 2);

/// Signed G^2 of a retained pair; nullopt when the pair was pruned or never seen.
std::optional<double> association_score(const AssociationModel& model, std::string_view term,
                                        std::string_view descriptor);

struct Suggestion {
    std::string descriptor;
    double score;
    /// Largest joint document count among the query tokens that voted for it.
    std::uint64_t support;

    bool operator==(const Suggestion&) const = default;
};

/// Per-descriptor scores summed over the distinct query tokens. Descriptors
/// with a negative total, and those equal (ignoring case) to a query token,
/// are left out. Sorted by score desc, then descriptor asc.
std::vector<Suggestion> suggest(const AssociationModel& model, const Tokenizer& tokenizer,
                                std::string_view query, std::size_t k);

struct InteractiveExpansion {
    std::vector<std::string> selected;
};
struct AutomaticExpansion {
    std::size_t top_m = 3;
};
using ExpansionMode = std::variant<InteractiveExpansion, AutomaticExpansion>;

/// Adds descriptors to the query as OR clauses. In interactive mode every
/// selected descriptor must come from `suggestions` (std::invalid_argument
/// otherwise); automatic mode takes the first `top_m`.
ExpandedQuery expand_query(const Index& index, std::string_view query,
                           const std::vector<Suggestion>& suggestions, const ExpansionMode& mode);

}  // namespace stratagem
