// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Stratagem Contributors
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stratagem {

/// Base of every error raised for bad input data (as opposed to bugs).
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class IoError : public Error {
  public:
    using Error::Error;
};

/// Malformed JSON. `line()` is 1-based, 0 when parsing a lone string.
class ParseError : public Error {
  public:
    ParseError(const std::string& what, std::size_t line) : Error(what), m_line(line) {}
    std::size_t line() const noexcept { return m_line; }

  private:
    std::size_t m_line;
};

/// Well-formed input that violates a record or snapshot contract.
class ValidationError : public Error {
  public:
    ValidationError(const std::string& what, std::string field, std::size_t line = 0)
        : Error(what), m_field(std::move(field)), m_line(line)
    {}
    const std::string& field() const noexcept { return m_field; }
    std::size_t line() const noexcept { return m_line; }

  private:
    std::string m_field;
    std::size_t m_line;
};

/// A caller handed in data that cannot belong to the structure it queried,
/// e.g. a hit whose doc id the index has never seen.
class ConsistencyError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

}  // namespace stratagem
