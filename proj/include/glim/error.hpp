// Copyright 2026 The glim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace glim {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A partial operation was applied outside its domain, or an argument broke a
/// documented precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(format(message, line, column)),
        message_(message),
        line_(line),
        column_(column) {}

  /// The message without the position prefix.
  const std::string& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line,
                            std::size_t column) {
    if (line == 0) return message;
    return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
  }

  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

/// An exhaustive enumeration was requested beyond its size guard.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// A filter presentation is not a fragment of a prime filter.
class PresentationError : public Error {
 public:
  using Error::Error;
};

/// Filesystem failure while reading or writing a text format.
class IoError : public Error {
 public:
  using Error::Error;
};

/// A result contradicted a property the library relies on. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace glim
