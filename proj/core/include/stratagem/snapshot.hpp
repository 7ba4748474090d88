// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Stratagem Contributors
#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>

#include "stratagem/corpus.hpp"
#include "stratagem/index.hpp"
#include "stratagem/recommender.hpp"
#include "stratagem/text.hpp"

namespace stratagem {

struct BuildOptions {
    Tokenizer tokenizer;
    Bm25Params bm25;
    std::uint64_t min_joint = 2;
};

/// Everything one service generation serves from: records, index, and
/// association model. Immutable once built.
struct Snapshot {
    Corpus corpus;
    Index index;
    AssociationModel model;

    static std::shared_ptr<const Snapshot> build(Corpus corpus, const BuildOptions& options = {});
};

/// First line of every snapshot file. The version follows on the same line.
inline constexpr const char* kSnapshotMagic = "STRATAGEM-SNAPSHOT";
inline constexpr int kSnapshotVersion = 1;

/// Header line, then one JSON document holding records, index postings and
/// model counts. Association scores are recomputed on load.
void save_snapshot(const Snapshot& snapshot, const std::filesystem::path& path);
std::shared_ptr<const Snapshot> load_snapshot(const std::filesystem::path& path);

}  // namespace stratagem
