// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Stratagem Contributors
#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "stratagem/error.hpp"
#include "stratagem/recommender.hpp"

using namespace stratagem;
using fixture::rec;

TEST_CASE("train counts document co-occurrence")
{
    SUBCASE("shared token and descriptor")
    {
        Corpus c({rec("d1", "war war war", {}, {}, {"Armed Conflict"}),
                  rec("d2", "the war", {}, {}, {"Armed Conflict"})});
        auto m = train(c);
        CHECK(m.n_docs() == 2);
        CHECK(m.term_df().at("war") == 2);
        CHECK(m.desc_df().at("Armed Conflict") == 2);
        CHECK(m.joint_df().at({"war", "Armed Conflict"}) == 2);
    }
    SUBCASE("never together")
    {
        Corpus c({rec("d1", "war", {}, {}, {"A"}), rec("d2", "war", {}, {}, {"A"}),
                  rec("d3", "peace", {}, {}, {"B"}), rec("d4", "peace", {}, {}, {"B"})});
        auto m = train(c);
        CHECK(m.joint_df().count({"war", "B"}) == 0);
        CHECK_FALSE(association_score(m, "war", "B"));
        CHECK(association_score(m, "war", "A"));
    }
    SUBCASE("pairs below min_joint are pruned")
    {
        Corpus c({rec("d1", "war", {}, {}, {"A"}), rec("d2", "war", {}, {}, {"B"})});
        CHECK(train(c).joint_df().empty());
        CHECK(train(c, {}, 1).joint_df().size() == 2);
    }
    SUBCASE("empty corpus")
    {
        auto m = train(Corpus{});
        CHECK(m.n_docs() == 0);
        CHECK(m.joint_df().empty());
    }
}

TEST_CASE("trained counts match a brute-force recount")
{
    auto c = generate_synthetic({100, 8, 1.0, 17});
    Tokenizer tok;
    auto m = train(c, tok);
    REQUIRE_FALSE(m.joint_df().empty());
    for (const auto& [pair, joint] : m.joint_df()) {
        const auto ref = oracle::recount(c, tok, pair.first, pair.second);
        CHECK(joint >= 2);
        CHECK(joint <= std::min(m.term_df().at(pair.first), m.desc_df().at(pair.second)));
        CHECK(joint == ref.joint);
        CHECK(m.term_df().at(pair.first) == ref.term_df);
        CHECK(m.desc_df().at(pair.second) == ref.desc_df);
    }
}

TEST_CASE("log-likelihood ratio")
{
    // 2 * (5 ln 2 + 5 ln 2), from direct evaluation of the table.
    CHECK(log_likelihood_ratio({5, 0, 0, 5}) == doctest::Approx(13.862943611199).epsilon(1e-12));
    CHECK(log_likelihood_ratio({1, 9, 9, 81}) == doctest::Approx(0.0));
    CHECK(signed_log_likelihood_ratio({1, 9, 9, 81}) == doctest::Approx(0.0));
    CHECK(signed_log_likelihood_ratio({0, 5, 5, 0}) < 0.0);
    CHECK(signed_log_likelihood_ratio({0, 5, 5, 0}) == doctest::Approx(-13.862943611199));
    CHECK(log_likelihood_ratio({0, 0, 0, 0}) == 0.0);

    AssociationModel m(10, {{"t", 5}}, {{"d", 5}}, {{{"t", "d"}, 5}}, 2);
    CHECK(*association_score(m, "t", "d") == doctest::Approx(13.862943611199));
    CHECK_FALSE(association_score(m, "t", "missing"));
}

TEST_CASE("G^2 is non-negative, transpose-symmetric, and agrees with the entropy form")
{
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 500; ++i) {
        Contingency t{rng() % 50, rng() % 50, rng() % 50, rng() % 200};
        Contingency transposed{t.k11, t.k21, t.k12, t.k22};
        const double g = log_likelihood_ratio(t);
        CHECK(g >= 0.0);
        CHECK(g == doctest::Approx(log_likelihood_ratio(transposed)).epsilon(1e-12));
        CHECK(g == doctest::Approx(oracle::g2_entropy_form(t.k11, t.k12, t.k21, t.k22))
                       .epsilon(1e-9)
                       .scale(1.0));
    }
}

TEST_CASE("model constructor enforces invariants")
{
    CHECK_THROWS_AS(AssociationModel(3, {{"t", 2}}, {{"d", 2}}, {{{"t", "d"}, 3}}, 2),
                    ValidationError);
    CHECK_THROWS_AS(AssociationModel(3, {{"t", 4}}, {{"d", 2}}, {}, 2), ValidationError);
    CHECK_THROWS_AS(AssociationModel(3, {{"t", 2}}, {{"d", 2}}, {{{"t", "d"}, 1}}, 2),
                    ValidationError);
    CHECK_THROWS_AS(AssociationModel(3, {{"t", 2}}, {{"d", 2}}, {{{"x", "d"}, 2}}, 2),
                    ValidationError);
}

TEST_CASE("suggest")
{
    Tokenizer tok;
    SUBCASE("single retained pair")
    {
        AssociationModel m(4, {{"war", 2}}, {{"Armed Conflict", 2}},
                           {{{"war", "Armed Conflict"}, 2}}, 2);
        auto s = suggest(m, tok, "war", 5);
        REQUIRE(s.size() == 1);
        CHECK(s[0].descriptor == "Armed Conflict");
        CHECK(s[0].support == 2);
        CHECK(s[0].score > 0.0);
        CHECK(suggest(m, tok, "war", 0).empty());
        CHECK(suggest(m, tok, "unknownword", 5).empty());
    }
    SUBCASE("descriptor equal to a query token is excluded")
    {
        Corpus c({rec("d1", "migration", {}, {}, {"Migration", "Refugees"}),
                  rec("d2", "migration", {}, {}, {"Migration", "Refugees"}),
                  rec("d3", "other", {}, {}, {"Health"})});
        auto m = train(c);
        auto s = suggest(m, tok, "Migration", 5);
        REQUIRE(s.size() == 1);
        CHECK(s[0].descriptor == "Refugees");
    }
    SUBCASE("scores combine by summation over query tokens")
    {
        auto c = generate_synthetic({400, 8, 1.0, 21});
        auto m = train(c);
        auto both = suggest(m, tok, "media war", 100);
        REQUIRE_FALSE(both.empty());
        for (const auto& s : both) {
            const double expected = association_score(m, "media", s.descriptor).value_or(0.0) +
                                    association_score(m, "war", s.descriptor).value_or(0.0);
            CHECK(s.score == doctest::Approx(expected));
        }
    }
    SUBCASE("bounded by k and sorted")
    {
        auto c = generate_synthetic({400, 8, 1.0, 22});
        auto m = train(c);
        for (std::size_t k : {1u, 3u, 10u, 50u}) {
            auto s = suggest(m, tok, "school teacher media war sport", k);
            CHECK(s.size() <= k);
            for (std::size_t i = 1; i < s.size(); ++i) {
                CHECK((s[i - 1].score > s[i].score ||
                       (s[i - 1].score == s[i].score && s[i - 1].descriptor < s[i].descriptor)));
            }
            for (const auto& x : s) {
                CHECK(x.support >= m.min_joint());
                CHECK(std::isfinite(x.score));
            }
        }
    }
}

TEST_CASE("expand_query")
{
    Corpus c({rec("d1", "war", {}, {}, {"Armed Conflict"}),
              rec("d2", "peace talks", {}, {}, {"Armed Conflict"}), rec("d3", "war"),
              rec("d4", "unrelated")});
    auto idx = Index::build(c);

    SUBCASE("no suggestions leaves retrieval unchanged")
    {
        auto q = expand_query(idx, "war", {}, AutomaticExpansion{});
        CHECK(q.descriptors.empty());
        CHECK(idx.search(q, 10) == idx.search("war", 10));
    }
    SUBCASE("added descriptor retrieves documents without the token")
    {
        std::vector<Suggestion> offered{{"Armed Conflict", 5.0, 2}};
        auto q = expand_query(idx, "war", offered, InteractiveExpansion{{"Armed Conflict"}});
        auto ids = fixture::ids(idx.search(q, 10));
        CHECK(std::find(ids.begin(), ids.end(), "d2") != ids.end());
        CHECK(std::find(ids.begin(), ids.end(), "d4") == ids.end());
        CHECK(fixture::ids(idx.search("war", 10)).size() == 2);
    }
    SUBCASE("automatic mode takes the top m")
    {
        std::vector<Suggestion> offered{{"A", 3, 2}, {"B", 2, 2}, {"C", 1, 2}, {"D", 0.5, 2}};
        CHECK(expand_query(idx, "war", offered, AutomaticExpansion{}).descriptors ==
              std::vector<std::string>{"A", "B", "C"});
        CHECK(expand_query(idx, "war", offered, AutomaticExpansion{1}).descriptors ==
              std::vector<std::string>{"A"});
    }
    SUBCASE("interactive selection must come from the suggestions")
    {
        std::vector<Suggestion> offered{{"A", 3, 2}};
        CHECK_THROWS_AS(expand_query(idx, "war", offered, InteractiveExpansion{{"Z"}}),
                        std::invalid_argument);
        CHECK(expand_query(idx, "war", offered, InteractiveExpansion{}).descriptors.empty());
    }
}

TEST_CASE("automatic expansion never shrinks the hit set")
{
    auto c = generate_synthetic({600, 12, 1.0, 31});
    auto idx = Index::build(c);
    auto m = train(c);
    std::vector<std::string> vocab;
    for (const auto& [t, _] : idx.all_postings()) vocab.push_back(t);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        std::string q = vocab[rng() % vocab.size()] + " " + vocab[rng() % vocab.size()];
        auto base = fixture::ids(idx.search(q, idx.n_docs()));
        auto expanded = fixture::ids(idx.search(
            expand_query(idx, q, suggest(m, idx.tokenizer(), q, 3), AutomaticExpansion{}),
            idx.n_docs()));
        std::set<std::string> bigger(expanded.begin(), expanded.end());
        for (const auto& id : base) {
            CHECK(bigger.count(id) == 1);
        }
    }
}
