// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Stratagem Contributors
#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace stratagem {

/// Lowercasing splitter. ASCII letters and digits are word characters, as is
/// every byte >= 0x80 so UTF-8 sequences stay inside their token. Tokens
/// shorter than two bytes and stopwords are dropped.
class Tokenizer {
  public:
    /// Uses the built-in English stopword list.
    Tokenizer();
    explicit Tokenizer(std::set<std::string> stopwords);

    /// One word per line; '#' starts a comment. An empty file means no stopwords.
    static Tokenizer from_stopword_file(const std::filesystem::path& path);
    static const std::set<std::string>& default_stopwords();

    std::vector<std::string> tokenize(std::string_view text) const;
    const std::set<std::string>& stopwords() const noexcept { return m_stopwords; }

  private:
    std::set<std::string> m_stopwords;
};

std::string ascii_lower(std::string_view text);

}  // namespace stratagem
