// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Stratagem Contributors
#include "stratagem/snapshot.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "stratagem/error.hpp"

namespace stratagem {

namespace {

using json = nlohmann::json;

[[noreturn]] void corrupt(const std::string& what)
{
    throw ValidationError("corrupt snapshot: " + what, "snapshot");
}

}  // namespace

std::shared_ptr<const Snapshot> Snapshot::build(Corpus corpus, const BuildOptions& options)
{
    auto snap = std::make_shared<Snapshot>();
    snap->index = Index::build(corpus, options.tokenizer, options.bm25);
    snap->model = train(corpus, options.tokenizer, options.min_joint);
    snap->corpus = std::move(corpus);
    return snap;
}

void save_snapshot(const Snapshot& snapshot, const std::filesystem::path& path)
{
    json doc;
    doc["options"] = {
        {"stopwords", snapshot.index.tokenizer().stopwords()},
        {"k1", snapshot.index.params().k1},
        {"b", snapshot.index.params().b},
        {"min_joint", snapshot.model.min_joint()},
    };

    json records = json::array();
    for (const auto& rec : snapshot.corpus.records()) {
        records.push_back(json::parse(serialize_record(rec)));
    }
    doc["records"] = std::move(records);

    json lengths = json::array();
    for (const auto& d : snapshot.index.docs()) {
        lengths.push_back(d.length);
    }
    json postings = json::object();
    for (const auto& [token, list] : snapshot.index.all_postings()) {
        json entries = json::array();
        for (const auto& p : list) {
            entries.push_back({p.doc, p.tf});
        }
        postings[token] = std::move(entries);
    }
    doc["index"] = {{"doc_len", std::move(lengths)}, {"postings", std::move(postings)}};

    json joint = json::array();
    for (const auto& [pair, count] : snapshot.model.joint_df()) {
        joint.push_back({pair.first, pair.second, count});
    }
    doc["model"] = {
        {"n_docs", snapshot.model.n_docs()},
        {"term_df", snapshot.model.term_df()},
        {"desc_df", snapshot.model.desc_df()},
        {"joint_df", std::move(joint)},
    };

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot write snapshot '" + path.string() + "'");
    }
    out << kSnapshotMagic << ' ' << kSnapshotVersion << '\n' << doc.dump() << '\n';
    if (!out) {
        throw IoError("error while writing snapshot '" + path.string() + "'");
    }
}

std::shared_ptr<const Snapshot> load_snapshot(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open snapshot '" + path.string() + "'");
    }
    std::string header;
    std::getline(in, header);
    std::istringstream hs(header);
    std::string magic;
    int version = 0;
    hs >> magic >> version;
    if (magic != kSnapshotMagic) {
        throw ValidationError("'" + path.string() + "' is not a snapshot file", "magic");
    }
    if (version != kSnapshotVersion) {
        throw ValidationError("unsupported snapshot version " + std::to_string(version),
                              "version");
    }

    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed snapshot body: ") + e.what(), 2);
    }

    try {
        const auto& opts = doc.at("options");
        Tokenizer tokenizer(opts.at("stopwords").get<std::set<std::string>>());
        Bm25Params bm25{opts.at("k1").get<double>(), opts.at("b").get<double>()};

        std::vector<Record> records;
        for (const auto& r : doc.at("records")) {
            records.push_back(parse_record(r.dump()));
        }
        Corpus corpus(std::move(records));

        const auto& lengths = doc.at("index").at("doc_len");
        if (lengths.size() != corpus.size()) {
            corrupt("doc_len and records disagree in size");
        }
        std::vector<DocEntry> docs;
        docs.reserve(corpus.size());
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const auto& rec = corpus.records()[i];
            docs.push_back({rec.id, lengths[i].get<std::uint32_t>(), rec.issn, rec.descriptors});
        }
        std::map<std::string, std::vector<Posting>> postings;
        for (const auto& [token, entries] : doc.at("index").at("postings").items()) {
            auto& list = postings[token];
            for (const auto& e : entries) {
                list.push_back({e.at(0).get<DocNo>(), e.at(1).get<std::uint32_t>()});
            }
        }

        const auto& m = doc.at("model");
        std::map<AssociationModel::Pair, std::uint64_t> joint;
        for (const auto& e : m.at("joint_df")) {
            joint[{e.at(0).get<std::string>(), e.at(1).get<std::string>()}] =
                e.at(2).get<std::uint64_t>();
        }
        AssociationModel model(m.at("n_docs").get<std::uint64_t>(),
                               m.at("term_df").get<std::map<std::string, std::uint64_t>>(),
                               m.at("desc_df").get<std::map<std::string, std::uint64_t>>(),
                               std::move(joint), opts.at("min_joint").get<std::uint64_t>());

        auto snap = std::make_shared<Snapshot>();
        snap->index = Index::from_parts(std::move(docs), std::move(postings), tokenizer, bm25);
        snap->model = std::move(model);
        snap->corpus = std::move(corpus);
        return snap;
    } catch (const json::exception& e) {
        corrupt(e.what());
    }
}

}  // namespace stratagem
