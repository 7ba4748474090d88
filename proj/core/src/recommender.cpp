// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Stratagem Contributors
#include "stratagem/recommender.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "stratagem/error.hpp"

namespace stratagem {

namespace {

double xlogx_ratio(double observed, double expected)
{
    return observed > 0.0 ? observed * std::log(observed / expected) : 0.0;
}

}  // namespace

double log_likelihood_ratio(const Contingency& t)
{
    const double k11 = t.k11, k12 = t.k12, k21 = t.k21, k22 = t.k22;
    const double n = k11 + k12 + k21 + k22;
    if (n == 0.0) {
        return 0.0;
    }
    const double r1 = k11 + k12, r2 = k21 + k22;
    const double c1 = k11 + k21, c2 = k12 + k22;
    const double sum = xlogx_ratio(k11, r1 * c1 / n) + xlogx_ratio(k12, r1 * c2 / n) +
                       xlogx_ratio(k21, r2 * c1 / n) + xlogx_ratio(k22, r2 * c2 / n);
    // Rounding can leave a tiny negative residue for independent tables.
    return std::max(0.0, 2.0 * sum);
}

double signed_log_likelihood_ratio(const Contingency& t)
{
    const double g2 = log_likelihood_ratio(t);
    const double n = static_cast<double>(t.k11 + t.k12 + t.k21 + t.k22);
    if (n == 0.0) {
        return 0.0;
    }
    const double expected = static_cast<double>(t.k11 + t.k12) *
                            static_cast<double>(t.k11 + t.k21) / n;
    return static_cast<double>(t.k11) < expected ? -g2 : g2;
}

AssociationModel::AssociationModel(std::uint64_t n_docs,
                                   std::map<std::string, std::uint64_t> term_df,
                                   std::map<std::string, std::uint64_t> desc_df,
                                   std::map<Pair, std::uint64_t> joint_df,
                                   std::uint64_t min_joint)
    : m_n_docs(n_docs),
      m_min_joint(min_joint),
      m_term_df(std::move(term_df)),
      m_desc_df(std::move(desc_df)),
      m_joint_df(std::move(joint_df))
{
    for (const auto& [term, df] : m_term_df) {
        if (df == 0 || df > m_n_docs) {
            throw ValidationError("term_df out of range for '" + term + "'", "term_df");
        }
    }
    for (const auto& [desc, df] : m_desc_df) {
        if (df == 0 || df > m_n_docs) {
            throw ValidationError("desc_df out of range for '" + desc + "'", "desc_df");
        }
    }
    for (const auto& [pair, joint] : m_joint_df) {
        auto t = m_term_df.find(pair.first);
        auto d = m_desc_df.find(pair.second);
        if (t == m_term_df.end() || d == m_desc_df.end() || joint < m_min_joint ||
            joint > std::min(t->second, d->second) ||
            t->second + d->second - joint > m_n_docs) {
            throw ValidationError("joint_df inconsistent for ('" + pair.first + "', '" +
                                      pair.second + "')",
                                  "joint_df");
        }
    }
    rebuild_scores();
}

void AssociationModel::rebuild_scores()
{
    m_by_term.clear();
    for (const auto& [pair, joint] : m_joint_df) {
        const auto table = *this->table(pair.first, pair.second);
        m_by_term[pair.first].push_back(
            {pair.second, signed_log_likelihood_ratio(table), joint});
    }
}

std::optional<Contingency> AssociationModel::table(std::string_view term,
                                                   std::string_view descriptor) const
{
    auto it = m_joint_df.find(Pair{std::string(term), std::string(descriptor)});
    if (it == m_joint_df.end()) {
        return std::nullopt;
    }
    const auto joint = it->second;
    const auto tdf = m_term_df.at(it->first.first);
    const auto ddf = m_desc_df.at(it->first.second);
    return Contingency{joint, tdf - joint, ddf - joint, m_n_docs - tdf - ddf + joint};
}

const std::vector<AssociationModel::Scored>& AssociationModel::associations(
    std::string_view term) const
{
    static const std::vector<Scored> none;
    auto it = m_by_term.find(term);
    return it == m_by_term.end() ? none : it->second;
}

bool AssociationModel::operator==(const AssociationModel& other) const
{
    return m_n_docs == other.m_n_docs && m_min_joint == other.m_min_joint &&
           m_term_df == other.m_term_df && m_desc_df == other.m_desc_df &&
           m_joint_df == other.m_joint_df;
}

AssociationModel train(const Corpus& corpus, const Tokenizer& tokenizer, std::uint64_t min_joint)
{
    std::map<std::string, std::uint64_t> term_df;
    std::map<std::string, std::uint64_t> desc_df;
    std::map<AssociationModel::Pair, std::uint64_t> joint_all;

    for (const auto& rec : corpus.records()) {
        const auto tokens_raw = tokenizer.tokenize(rec.title + " " + rec.abstract);
        const std::set<std::string> tokens(tokens_raw.begin(), tokens_raw.end());
        const std::set<std::string> descs(rec.descriptors.begin(), rec.descriptors.end());
        for (const auto& t : tokens) {
            ++term_df[t];
        }
        for (const auto& d : descs) {
            ++desc_df[d];
        }
        for (const auto& t : tokens) {
            for (const auto& d : descs) {
                ++joint_all[{t, d}];
            }
        }
    }

    std::map<AssociationModel::Pair, std::uint64_t> joint_df;
    for (auto& [pair, count] : joint_all) {
        if (count >= min_joint) {
            joint_df.emplace(pair, count);
        }
    }
    return AssociationModel(corpus.size(), std::move(term_df), std::move(desc_df),
                            std::move(joint_df), min_joint);
}

std::optional<double> association_score(const AssociationModel& model, std::string_view term,
                                        std::string_view descriptor)
{
    auto table = model.table(term, descriptor);
    if (!table) {
        return std::nullopt;
    }
    return signed_log_likelihood_ratio(*table);
}

std::vector<Suggestion> suggest(const AssociationModel& model, const Tokenizer& tokenizer,
                                std::string_view query, std::size_t k)
{
    if (k == 0) {
        return {};
    }
    std::vector<std::string> tokens;
    std::unordered_set<std::string> seen;
    for (auto& t : tokenizer.tokenize(query)) {
        if (seen.insert(t).second) {
            tokens.push_back(std::move(t));
        }
    }

    // Combined in query-token order so the sums are reproducible.
    std::map<std::string, Suggestion> combined;
    for (const auto& token : tokens) {
        for (const auto& scored : model.associations(token)) {
            auto [it, fresh] = combined.try_emplace(scored.descriptor,
                                                    Suggestion{scored.descriptor, 0.0, 0});
            it->second.score += scored.score;
            it->second.support = std::max(it->second.support, scored.joint);
        }
    }

    std::vector<Suggestion> out;
    for (auto& [descriptor, s] : combined) {
        if (s.score < 0.0 || seen.count(ascii_lower(descriptor))) {
            continue;
        }
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const Suggestion& a, const Suggestion& b) {
        if (a.score != b.score) {
            return a.score > b.score;
        }
        return a.descriptor < b.descriptor;
    });
    if (out.size() > k) {
        out.resize(k);
    }
    return out;
}

ExpandedQuery expand_query(const Index& index, std::string_view query,
                           const std::vector<Suggestion>& suggestions, const ExpansionMode& mode)
{
    auto expanded = index.parse_query(query);
    std::unordered_set<std::string> added;
    auto add = [&](const std::string& descriptor) {
        if (added.insert(descriptor).second) {
            expanded.descriptors.push_back(descriptor);
        }
    };

    if (const auto* interactive = std::get_if<InteractiveExpansion>(&mode)) {
        for (const auto& chosen : interactive->selected) {
            const bool offered =
                std::any_of(suggestions.begin(), suggestions.end(),
                            [&](const Suggestion& s) { return s.descriptor == chosen; });
            if (!offered) {
                throw std::invalid_argument("descriptor '" + chosen +
                                            "' was not among the suggestions");
            }
            add(chosen);
        }
    } else {
        const auto top_m = std::get<AutomaticExpansion>(mode).top_m;
        for (std::size_t i = 0; i < suggestions.size() && i < top_m; ++i) {
            add(suggestions[i].descriptor);
        }
    }
    return expanded;
}

}  // namespace stratagem
