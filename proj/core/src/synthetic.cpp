// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Stratagem Contributors
#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <stdexcept>

#include "stratagem/corpus.hpp"

namespace stratagem {

namespace {

struct Topic {
    const char* name;
    // Each word is linked to descriptors[i % descriptors.size()].
    std::vector<const char*> words;
    std::vector<const char*> descriptors;
};

const std::vector<Topic>& topics()
{
    static const std::vector<Topic> all = {
        {"Media",
         {"media", "newspaper", "television", "journalism", "war", "coverage", "framing",
          "propaganda", "press", "broadcast", "editorial", "censorship"},
         {"Mass Media", "News Media", "Censorship", "Television", "Armed Conflict", "Editorials"}},
        {"Education",
         {"school", "teacher", "pupils", "curriculum", "classroom", "literacy", "university",
          "learning", "assessment", "reform", "vocational", "instruction"},
         {"Educational Reform", "Teachers", "Curriculum Development", "Higher Education",
          "Literacy", "Vocational Training"}},
        {"Sport",
         {"sport", "athletes", "training", "football", "olympic", "coaching", "fitness",
          "competition", "doping", "exercise", "club", "performance"},
         {"Sport Science", "Athletes", "Physical Fitness", "Doping", "Coaching",
          "Competitive Sport"}},
        {"Labour",
         {"labour", "employment", "wages", "unions", "workers", "unemployment", "industry",
          "strike", "workplace", "bargaining", "precarious", "occupation"},
         {"Labor Market", "Trade Unions", "Unemployment", "Wages", "Industrial Relations",
          "Working Conditions"}},
        {"Migration",
         {"migration", "migrants", "refugees", "integration", "asylum", "citizenship", "diaspora",
          "border", "ethnic", "minority", "remittances", "settlement"},
         {"Migration", "Refugees", "Social Integration", "Ethnic Minorities", "Citizenship",
          "Asylum Policy"}},
        {"Health",
         {"health", "hospital", "patients", "illness", "care", "mortality", "prevention",
          "nursing", "medical", "wellbeing", "disability", "epidemiology"},
         {"Public Health", "Health Care", "Mortality", "Disability", "Health Policy",
          "Nursing"}},
        {"Politics",
         {"election", "parties", "voters", "parliament", "democracy", "government", "policy",
          "campaign", "legitimacy", "coalition", "populism", "referendum"},
         {"Elections", "Political Parties", "Democracy", "Public Policy", "Voting Behavior",
          "Populism"}},
        {"Family",
         {"family", "marriage", "children", "parenting", "divorce", "household", "fertility",
          "gender", "childcare", "youth", "ageing", "intergenerational"},
         {"Family Sociology", "Marriage", "Fertility", "Gender Roles", "Child Care",
          "Youth"}},
    };
    return all;
}

constexpr std::array<const char*, 32> kGeneralWords = {
    "analysis",   "study",       "social",     "evidence",  "comparative", "survey",
    "germany",    "europe",      "trends",     "case",      "approach",    "theory",
    "empirical",  "data",        "change",     "perspective", "impact",    "society",
    "development", "structure",  "effects",    "research",  "context",     "national",
    "local",      "historical",  "new",        "patterns",  "public",      "critical",
    "regional",   "quantitative",
};

constexpr std::array<const char*, 40> kSurnames = {
    "Schmidt", "Mueller", "Weber",   "Wagner",  "Becker",  "Hoffmann", "Koch",    "Richter",
    "Klein",   "Wolf",    "Neumann", "Braun",   "Zimmer",  "Hartmann", "Krueger", "Lange",
    "Smith",   "Jones",   "Brown",   "Taylor",  "Wilson",  "Davies",   "Evans",   "Thomas",
    "Moreau",  "Laurent", "Dubois",  "Rossi",   "Russo",   "Ferrari",  "Garcia",  "Lopez",
    "Novak",   "Horvat",  "Kowalski", "Nowak",  "Jensen",  "Nielsen",  "Berg",    "Lind",
};

constexpr std::array<char, 20> kInitials = {'A', 'B', 'C', 'D', 'E', 'F', 'G', 'H', 'J', 'K',
                                            'L', 'M', 'N', 'P', 'R', 'S', 'T', 'U', 'V', 'W'};

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : m_engine(seed) {}

    // Written against the raw engine so output is identical across standard
    // libraries; std::*_distribution is implementation-defined.
    double uniform() { return static_cast<double>(m_engine() >> 11) * 0x1.0p-53; }
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(uniform() * n); }
    std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
    bool chance(double p) { return uniform() < p; }

    std::size_t pick(const std::vector<double>& cdf)
    {
        const double u = uniform() * cdf.back();
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        return std::min(static_cast<std::size_t>(it - cdf.begin()), cdf.size() - 1);
    }

  private:
    std::mt19937_64 m_engine;
};

std::vector<double> zipf_cdf(std::size_t n, double exponent)
{
    std::vector<double> cdf(n);
    double acc = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
        acc += 1.0 / std::pow(static_cast<double>(r + 1), exponent);
        cdf[r] = acc;
    }
    return cdf;
}

std::string make_issn(std::size_t journal)
{
    const std::size_t serial = 1000000 + (journal * 7919) % 9000000;
    std::array<int, 7> digits{};
    std::size_t rest = serial;
    for (int i = 6; i >= 0; --i) {
        digits[i] = static_cast<int>(rest % 10);
        rest /= 10;
    }
    int sum = 0;
    for (int i = 0; i < 7; ++i) {
        sum += digits[i] * (8 - i);
    }
    const int check = (11 - sum % 11) % 11;
    char buf[16];
    std::snprintf(buf, sizeof buf, "%d%d%d%d-%d%d%d%c", digits[0], digits[1], digits[2],
                  digits[3], digits[4], digits[5], digits[6],
                  check == 10 ? 'X' : static_cast<char>('0' + check));
    return buf;
}

std::string author_name(std::size_t n)
{
    const auto surname = kSurnames[n % kSurnames.size()];
    const auto initial = kInitials[(n / kSurnames.size()) % kInitials.size()];
    std::string name = std::string(surname) + ", " + initial + ".";
    if (const auto gen = n / (kSurnames.size() * kInitials.size()); gen > 0) {
        name += " " + std::to_string(gen + 1);
    }
    return name;
}

}  // namespace

Corpus generate_synthetic(const SyntheticParams& params)
{
    if (params.n_journals < 1) {
        throw std::invalid_argument("n_journals must be at least 1");
    }
    if (!(params.skew > 0.0)) {
        throw std::invalid_argument("skew must be positive");
    }

    const auto& all_topics = topics();
    const std::size_t n_topics = all_topics.size();
    constexpr std::size_t kAuthorsPerTopic = 24;
    constexpr std::size_t kBridgeAuthors = 6;

    Rng rng(params.seed);
    const auto journal_cdf = zipf_cdf(params.n_journals, params.skew);
    const auto author_cdf = zipf_cdf(kAuthorsPerTopic, 0.8);

    // Journal j covers topic j mod n_topics; rank order of the Zipf law is
    // the journal number.
    auto journal_title = [&](std::size_t j) {
        return std::string("Journal of ") + all_topics[j % n_topics].name + " Research " +
               std::to_string(j / n_topics + 1);
    };

    auto draw_words = [&](const Topic& topic, std::size_t count, double topical) {
        std::vector<std::string> words;
        for (std::size_t i = 0; i < count; ++i) {
            if (rng.chance(topical)) {
                words.emplace_back(topic.words[rng.below(topic.words.size())]);
            } else {
                words.emplace_back(kGeneralWords[rng.below(kGeneralWords.size())]);
            }
        }
        return words;
    };

    std::vector<Record> records;
    records.reserve(params.n_docs);
    for (std::size_t i = 0; i < params.n_docs; ++i) {
        Record rec;
        char id[32];
        std::snprintf(id, sizeof id, "syn%06zu", i + 1);
        rec.id = id;

        const bool monograph = rng.chance(0.1);
        const std::size_t journal = rng.pick(journal_cdf);
        std::size_t topic_no = monograph ? rng.below(n_topics) : journal % n_topics;
        if (rng.chance(0.15)) {
            topic_no = rng.below(n_topics);
        }
        const auto& topic = all_topics[topic_no];
        if (!monograph) {
            rec.issn = make_issn(journal);
            rec.journal_title = journal_title(journal);
        }

        auto title_words = draw_words(topic, rng.between(3, 6), 0.7);
        std::string title;
        for (const auto& w : title_words) {
            title += title.empty() ? std::string(1, static_cast<char>(w[0] - 'a' + 'A')) + w.substr(1)
                                   : " " + w;
        }
        rec.title = title;
        std::string abstract;
        for (const auto& w : draw_words(topic, rng.between(12, 25), 0.5)) {
            abstract += abstract.empty() ? w : " " + w;
        }
        rec.abstract = abstract;

        std::vector<std::string> descriptors;
        auto add_descriptor = [&](const char* d) {
            if (std::find(descriptors.begin(), descriptors.end(), d) == descriptors.end()) {
                descriptors.emplace_back(d);
            }
        };
        for (const auto& w : title_words) {
            auto it = std::find_if(topic.words.begin(), topic.words.end(),
                                   [&](const char* tw) { return w == tw; });
            if (it != topic.words.end() && rng.chance(0.8)) {
                const auto pos = static_cast<std::size_t>(it - topic.words.begin());
                add_descriptor(topic.descriptors[pos % topic.descriptors.size()]);
            }
        }
        if (descriptors.empty() || rng.chance(0.3)) {
            add_descriptor(topic.descriptors[rng.below(topic.descriptors.size())]);
        }
        if (descriptors.size() > 5) {
            descriptors.resize(5);
        }
        rec.descriptors = std::move(descriptors);

        const std::size_t n_authors = rng.between(1, 4);
        std::vector<std::string> authors;
        for (std::size_t a = 0; a < n_authors; ++a) {
            std::size_t author_no;
            if (rng.chance(0.08)) {
                author_no = n_topics * kAuthorsPerTopic + rng.below(kBridgeAuthors);
            } else {
                author_no = topic_no * kAuthorsPerTopic + rng.pick(author_cdf);
            }
            auto name = author_name(author_no);
            if (std::find(authors.begin(), authors.end(), name) == authors.end()) {
                authors.push_back(std::move(name));
            }
        }
        rec.authors = std::move(authors);
        rec.language = "en";
        rec.year = static_cast<int>(rng.between(1990, 2010));
        records.push_back(std::move(rec));
    }
    return Corpus(std::move(records));
}

}  // namespace stratagem
