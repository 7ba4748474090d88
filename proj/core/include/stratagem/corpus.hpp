// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Stratagem Contributors
#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace stratagem {

/// One bibliographic reference. All strings are normalized on parse.
struct Record {
    std::string id;
    std::string title;
    std::string abstract;
    std::vector<std::string> authors;
    std::optional<std::string> issn;
    std::optional<std::string> journal_title;
    std::vector<std::string> descriptors;
    std::string language;
    std::optional<int> year;

    bool operator==(const Record&) const = default;
};

/// Trim and collapse internal runs of whitespace to one space. Case is kept.
std::string normalize_name(std::string_view raw);

/// `NNNN-NNNC` where C is a digit or 'X'. The check digit is not verified.
bool is_issn(std::string_view value);

/// Parse one JSONL line. `line_no` is only used in error messages.
Record parse_record(std::string_view line, std::size_t line_no = 0);

/// Single-line JSON. Absent optionals and empty lists are omitted.
std::string serialize_record(const Record& record);

/// Immutable set of records with unique ids, in insertion order.
class Corpus {
  public:
    Corpus() = default;
    /// Throws ValidationError on a duplicate id.
    explicit Corpus(std::vector<Record> records);

    const std::vector<Record>& records() const noexcept { return m_records; }
    std::size_t size() const noexcept { return m_records.size(); }
    bool empty() const noexcept { return m_records.empty(); }

    const Record* find(std::string_view id) const;
    const Record& at(std::string_view id) const;

  private:
    std::vector<Record> m_records;
    std::unordered_map<std::string, std::size_t> m_by_id;
};

/// Read a JSONL file; blank lines are skipped. The first bad line aborts.
Corpus load_corpus(const std::filesystem::path& path);

void write_corpus(const Corpus& corpus, const std::filesystem::path& path);

struct SyntheticParams {
    std::size_t n_docs = 1000;
    std::size_t n_journals = 20;
    double skew = 1.0;
    std::uint64_t seed = 42;
};

/// Deterministic bibliographic corpus with Zipf-distributed journal sizes,
/// topic-correlated titles/descriptors, and a co-author pool with a few
/// cross-topic authors.
Corpus generate_synthetic(const SyntheticParams& params);

}  // namespace stratagem
