// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Stratagem Contributors
#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "stratagem/corpus.hpp"
#include "stratagem/text.hpp"

namespace stratagem {

using DocNo = std::uint32_t;

struct Posting {
    DocNo doc;
    std::uint32_t tf;

    bool operator==(const Posting&) const = default;
};

struct Bm25Params {
    double k1 = 1.2;
    double b = 0.75;
};

/// Per-document data the index keeps so re-rankers never touch the corpus.
struct DocEntry {
    std::string id;
    std::uint32_t length = 0;
    std::optional<std::string> issn;
    std::vector<std::string> descriptors;

    bool operator==(const DocEntry&) const = default;
};

struct Hit {
    std::string doc_id;
    double base_score = 0.0;
    double score = 0.0;
    /// Provenance, one tag per stage: "base", then "bradford" / "centrality".
    std::vector<std::string> explain;

    bool operator==(const Hit&) const = default;
};

struct ResultSet {
    std::string query;
    std::vector<Hit> hits;
    /// Documents matched before truncation to k.
    std::size_t total = 0;

    bool operator==(const ResultSet&) const = default;
};

/// Order used by the base ranker and as the final tie-break everywhere:
/// higher score first, then doc id ascending.
bool base_rank_before(const Hit& a, const Hit& b);

enum class FacetField { issn, descriptor };

/// Query after optional expansion: free tokens are BM25-scored against
/// title+abstract, each descriptor adds `descriptor_weight` to any doc that
/// carries it. Either side may be empty.
struct ExpandedQuery {
    std::string text;
    std::vector<std::string> tokens;
    std::vector<std::string> descriptors;
    double descriptor_weight = 1.0;
};

/// Immutable inverted index over title + abstract, with ISSN and descriptor
/// facets. Documents are numbered in corpus order.
class Index {
  public:
    Index() = default;

    static Index build(const Corpus& corpus, Tokenizer tokenizer = {}, Bm25Params params = {});
    /// Reassemble from persisted parts; validates the structural invariants.
    static Index from_parts(std::vector<DocEntry> docs,
                            std::map<std::string, std::vector<Posting>> postings,
                            Tokenizer tokenizer, Bm25Params params);

    std::size_t n_docs() const noexcept { return m_docs.size(); }
    double avg_doc_len() const noexcept { return m_avg_doc_len; }
    const Bm25Params& params() const noexcept { return m_params; }
    const Tokenizer& tokenizer() const noexcept { return m_tokenizer; }

    const std::vector<DocEntry>& docs() const noexcept { return m_docs; }
    const DocEntry& doc(DocNo no) const { return m_docs.at(no); }
    std::optional<DocNo> find(std::string_view doc_id) const;
    /// Throws ConsistencyError for an id the index does not hold.
    const DocEntry& doc(std::string_view doc_id) const;

    /// Postings sorted by doc number; empty for unknown tokens.
    const std::vector<Posting>& postings(std::string_view token) const;
    const std::map<std::string, std::vector<Posting>>& all_postings() const noexcept
    {
        return m_postings;
    }
    const std::map<std::string, std::vector<DocNo>>& facet_issn() const noexcept
    {
        return m_facet_issn;
    }
    const std::map<std::string, std::vector<DocNo>>& facet_descriptor() const noexcept
    {
        return m_facet_descriptor;
    }

    double idf(std::size_t df) const;
    /// BM25 contribution of one query token occurring `tf` times.
    double term_score(std::uint32_t tf, std::uint32_t doc_len, std::size_t df) const;

    ExpandedQuery parse_query(std::string_view text) const;

    /// Top-k documents by BM25, OR semantics over distinct query tokens.
    ResultSet search(std::string_view query, std::size_t k) const;
    ResultSet search(const ExpandedQuery& query, std::size_t k) const;

    bool operator==(const Index&) const;

  private:
    void finalize();

    Tokenizer m_tokenizer;
    Bm25Params m_params;
    std::vector<DocEntry> m_docs;
    std::unordered_map<std::string, DocNo> m_by_id;
    std::map<std::string, std::vector<Posting>> m_postings;
    std::map<std::string, std::vector<DocNo>> m_facet_issn;
    std::map<std::string, std::vector<DocNo>> m_facet_descriptor;
    double m_avg_doc_len = 0.0;
};

/// Facet counts restricted to the hits. Docs without the field are skipped.
std::map<std::string, std::size_t> facet_count(const Index& index, const ResultSet& result,
                                               FacetField field);

}  // namespace stratagem
