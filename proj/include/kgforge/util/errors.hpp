#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kgforge {

/// Base for everything the toolchain throws on bad input or bad state.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Syntax error with source position. `where` is a file path or stream label.
class ParseError : public Error {
 public:
  ParseError(std::string where, std::uint64_t line, std::uint64_t column, std::string reason)
      : Error(format(where, line, column, reason)),
        where_(std::move(where)),
        line_(line),
        column_(column),
        reason_(std::move(reason)) {}

  const std::string& where() const { return where_; }
  std::uint64_t line() const { return line_; }
  std::uint64_t column() const { return column_; }
  const std::string& reason() const { return reason_; }

 private:
  static std::string format(const std::string& where, std::uint64_t line, std::uint64_t column,
                            const std::string& reason) {
    std::string s = where.empty() ? "input" : where;
    s += ":" + std::to_string(line);
    if (column > 0) s += ":" + std::to_string(column);
    return s + ": " + reason;
  }

  std::string where_;
  std::uint64_t line_;
  std::uint64_t column_;
  std::string reason_;
};

/// Input that parsed but violates a contract (bad manifest, bad mapping, ...).
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

/// A configured resource guard tripped (isomorphism search, solution cap, ...).
class ResourceLimitError : public Error {
 public:
  explicit ResourceLimitError(const std::string& what) : Error(what) {}
};

}  // namespace kgforge
