// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Stratagem Contributors
#include "stratagem/index.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "stratagem/error.hpp"

namespace stratagem {

bool base_rank_before(const Hit& a, const Hit& b)
{
    if (a.score != b.score) {
        return a.score > b.score;
    }
    return a.doc_id < b.doc_id;
}

Index Index::build(const Corpus& corpus, Tokenizer tokenizer, Bm25Params params)
{
    Index index;
    index.m_tokenizer = std::move(tokenizer);
    index.m_params = params;
    index.m_docs.reserve(corpus.size());

    for (const auto& rec : corpus.records()) {
        const auto no = static_cast<DocNo>(index.m_docs.size());
        auto tokens = index.m_tokenizer.tokenize(rec.title + " " + rec.abstract);

        std::map<std::string, std::uint32_t> tf;
        for (auto& t : tokens) {
            ++tf[std::move(t)];
        }
        for (auto& [token, count] : tf) {
            index.m_postings[token].push_back({no, count});
        }
        index.m_docs.push_back({rec.id, static_cast<std::uint32_t>(tokens.size()), rec.issn,
                                rec.descriptors});
    }
    index.finalize();
    return index;
}

Index Index::from_parts(std::vector<DocEntry> docs,
                        std::map<std::string, std::vector<Posting>> postings,
                        Tokenizer tokenizer, Bm25Params params)
{
    std::vector<std::uint64_t> length_check(docs.size(), 0);
    for (const auto& [token, list] : postings) {
        if (list.empty()) {
            throw ValidationError("empty posting list for '" + token + "'", "postings");
        }
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (list[i].doc >= docs.size() || list[i].tf == 0 ||
                (i > 0 && list[i - 1].doc >= list[i].doc)) {
                throw ValidationError("corrupt posting list for '" + token + "'", "postings");
            }
            length_check[list[i].doc] += list[i].tf;
        }
    }
    for (std::size_t d = 0; d < docs.size(); ++d) {
        if (length_check[d] != docs[d].length) {
            throw ValidationError("document length mismatch for '" + docs[d].id + "'",
                                  "doc_len");
        }
    }

    Index index;
    index.m_tokenizer = std::move(tokenizer);
    index.m_params = params;
    index.m_docs = std::move(docs);
    index.m_postings = std::move(postings);
    index.finalize();
    return index;
}

void Index::finalize()
{
    m_by_id.clear();
    m_facet_issn.clear();
    m_facet_descriptor.clear();
    m_by_id.reserve(m_docs.size());

    std::uint64_t total_len = 0;
    for (std::size_t i = 0; i < m_docs.size(); ++i) {
        const auto no = static_cast<DocNo>(i);
        const auto& doc = m_docs[i];
        if (!m_by_id.emplace(doc.id, no).second) {
            throw ValidationError("duplicate id '" + doc.id + "' in index", "id");
        }
        total_len += doc.length;
        if (doc.issn) {
            m_facet_issn[*doc.issn].push_back(no);
        }
        for (const auto& d : std::unordered_set<std::string>(doc.descriptors.begin(),
                                                             doc.descriptors.end())) {
            m_facet_descriptor[d].push_back(no);
        }
    }
    for (auto& [_, list] : m_facet_descriptor) {
        std::sort(list.begin(), list.end());
    }
    m_avg_doc_len =
        m_docs.empty() ? 0.0 : static_cast<double>(total_len) / static_cast<double>(m_docs.size());
}

std::optional<DocNo> Index::find(std::string_view doc_id) const
{
    auto it = m_by_id.find(std::string(doc_id));
    if (it == m_by_id.end()) {
        return std::nullopt;
    }
    return it->second;
}

const DocEntry& Index::doc(std::string_view doc_id) const
{
    auto no = find(doc_id);
    if (!no) {
        throw ConsistencyError("document '" + std::string(doc_id) + "' is not in the index");
    }
    return m_docs[*no];
}

const std::vector<Posting>& Index::postings(std::string_view token) const
{
    static const std::vector<Posting> none;
    auto it = m_postings.find(std::string(token));
    return it == m_postings.end() ? none : it->second;
}

double Index::idf(std::size_t df) const
{
    const auto n = static_cast<double>(m_docs.size());
    const auto f = static_cast<double>(df);
    return std::max(0.0, std::log((n - f + 0.5) / (f + 0.5) + 1.0));
}

double Index::term_score(std::uint32_t tf, std::uint32_t doc_len, std::size_t df) const
{
    if (tf == 0) {
        return 0.0;
    }
    const double f = tf;
    const double norm = m_avg_doc_len > 0.0 ? static_cast<double>(doc_len) / m_avg_doc_len : 0.0;
    const double k1 = m_params.k1;
    return idf(df) * f * (k1 + 1.0) / (f + k1 * (1.0 - m_params.b + m_params.b * norm));
}

ExpandedQuery Index::parse_query(std::string_view text) const
{
    ExpandedQuery q;
    q.text = std::string(text);
    std::unordered_set<std::string> seen;
    for (auto& t : m_tokenizer.tokenize(text)) {
        if (seen.insert(t).second) {
            q.tokens.push_back(std::move(t));
        }
    }
    return q;
}

ResultSet Index::search(std::string_view query, std::size_t k) const
{
    return search(parse_query(query), k);
}

ResultSet Index::search(const ExpandedQuery& query, std::size_t k) const
{
    ResultSet result;
    result.query = query.text;

    std::vector<double> acc(m_docs.size(), 0.0);
    std::vector<char> matched(m_docs.size(), 0);
    std::vector<DocNo> touched;

    auto touch = [&](DocNo d) {
        if (!matched[d]) {
            matched[d] = 1;
            touched.push_back(d);
        }
    };

    std::unordered_set<std::string_view> seen_tokens;
    for (const auto& token : query.tokens) {
        if (!seen_tokens.insert(token).second) {
            continue;
        }
        const auto& list = postings(token);
        for (const auto& p : list) {
            acc[p.doc] += term_score(p.tf, m_docs[p.doc].length, list.size());
            touch(p.doc);
        }
    }
    std::unordered_set<std::string_view> seen_desc;
    for (const auto& descriptor : query.descriptors) {
        if (!seen_desc.insert(descriptor).second) {
            continue;
        }
        auto it = m_facet_descriptor.find(descriptor);
        if (it == m_facet_descriptor.end()) {
            continue;
        }
        for (DocNo d : it->second) {
            acc[d] += query.descriptor_weight;
            touch(d);
        }
    }

    result.total = touched.size();
    std::vector<Hit> hits;
    hits.reserve(touched.size());
    for (DocNo d : touched) {
        hits.push_back({m_docs[d].id, acc[d], acc[d], {"base"}});
    }
    const auto keep = std::min(k, hits.size());
    std::partial_sort(hits.begin(), hits.begin() + static_cast<std::ptrdiff_t>(keep), hits.end(),
                      base_rank_before);
    hits.resize(keep);
    result.hits = std::move(hits);
    return result;
}

bool Index::operator==(const Index& other) const
{
    return m_docs == other.m_docs && m_postings == other.m_postings &&
           m_tokenizer.stopwords() == other.m_tokenizer.stopwords() &&
           m_params.k1 == other.m_params.k1 && m_params.b == other.m_params.b;
}

std::map<std::string, std::size_t> facet_count(const Index& index, const ResultSet& result,
                                               FacetField field)
{
    std::map<std::string, std::size_t> counts;
    for (const auto& hit : result.hits) {
        const auto& doc = index.doc(hit.doc_id);
        if (field == FacetField::issn) {
            if (doc.issn) {
                ++counts[*doc.issn];
            }
        } else {
            for (const auto& d : doc.descriptors) {
                ++counts[d];
            }
        }
    }
    return counts;
}

}  // namespace stratagem
