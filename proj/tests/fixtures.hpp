// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Stratagem Contributors
#pragma once

#include <chrono>
#include <filesystem>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "stratagem/corpus.hpp"
#include "stratagem/index.hpp"

namespace fixture {

inline stratagem::Record rec(std::string id, std::string title,
                             std::vector<std::string> authors = {},
                             std::optional<std::string> issn = std::nullopt,
                             std::vector<std::string> descriptors = {})
{
    stratagem::Record r;
    r.id = std::move(id);
    r.title = std::move(title);
    r.authors = std::move(authors);
    r.issn = std::move(issn);
    r.descriptors = std::move(descriptors);
    return r;
}

/// Hits in the given order with strictly decreasing base scores.
inline stratagem::ResultSet ranked(std::initializer_list<std::string> ids)
{
    stratagem::ResultSet rs;
    double score = static_cast<double>(ids.size());
    for (const auto& id : ids) {
        rs.hits.push_back({id, score, score, {"base"}});
        score -= 1.0;
    }
    rs.total = rs.hits.size();
    return rs;
}

inline std::vector<std::string> ids(const stratagem::ResultSet& rs)
{
    std::vector<std::string> out;
    for (const auto& h : rs.hits) {
        out.push_back(h.doc_id);
    }
    return out;
}

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
  public:
    TempDir()
    {
        const auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
        m_path = std::filesystem::temp_directory_path() /
                 ("stratagem-test-" + std::to_string(stamp));
        std::filesystem::create_directories(m_path);
    }
    ~TempDir()
    {
        std::error_code ec;
        std::filesystem::remove_all(m_path, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    std::filesystem::path operator/(const std::string& name) const { return m_path / name; }

  private:
    std::filesystem::path m_path;
};

}  // namespace fixture
