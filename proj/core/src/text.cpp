// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Stratagem Contributors
#include "stratagem/text.hpp"

#include <fstream>

#include "stratagem/corpus.hpp"
#include "stratagem/error.hpp"

namespace stratagem {

namespace {

bool is_word_byte(unsigned char c)
{
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c >= 0x80;
}

}  // namespace

std::string ascii_lower(std::string_view text)
{
    std::string out(text);
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') {
            c = static_cast<char>(c - 'A' + 'a');
        }
    }
    return out;
}

const std::set<std::string>& Tokenizer::default_stopwords()
{
    static const std::set<std::string> words = {
        "a",     "about", "after", "all",   "also",  "an",    "and",   "are",   "as",
        "at",    "be",    "been",  "but",   "by",    "can",   "for",   "from",  "has",
        "have",  "how",   "in",    "into",  "is",    "it",    "its",   "not",   "of",
        "on",    "or",    "other", "our",   "over",  "such",  "than",  "that",  "the",
        "their", "them",  "then",  "there", "these", "they",  "this",  "those", "to",
        "under", "was",   "we",    "were",  "what",  "when",  "which", "while", "who",
        "will",  "with",  "within", "without", "would",
    };
    return words;
}

Tokenizer::Tokenizer() : m_stopwords(default_stopwords()) {}

Tokenizer::Tokenizer(std::set<std::string> stopwords)
{
    for (const auto& w : stopwords) {
        m_stopwords.insert(ascii_lower(w));
    }
}

Tokenizer Tokenizer::from_stopword_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open stopword file '" + path.string() + "'");
    }
    std::set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        auto word = normalize_name(line);
        if (!word.empty()) {
            words.insert(std::move(word));
        }
    }
    return Tokenizer(std::move(words));
}

std::vector<std::string> Tokenizer::tokenize(std::string_view text) const
{
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && !is_word_byte(static_cast<unsigned char>(text[i]))) {
            ++i;
        }
        const std::size_t start = i;
        while (i < text.size() && is_word_byte(static_cast<unsigned char>(text[i]))) {
            ++i;
        }
        if (i - start < 2) {
            continue;
        }
        auto token = ascii_lower(text.substr(start, i - start));
        if (!m_stopwords.count(token)) {
            tokens.push_back(std::move(token));
        }
    }
    return tokens;
}

}  // namespace stratagem
