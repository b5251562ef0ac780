// Copyright 2026 The glim Authors
// SPDX-License-Identifier: Apache-2.0

// Tokenizer shared by the first-order and probabilistic formula parsers.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

#include "glim/fo.hpp"

namespace glim::detail {

enum class TokenKind {
  End,
  Ident,
  Number,  // `7` or `2/3`
  LParen,
  RParen,
  LBracket,
  RBracket,
  LBrace,
  RBrace,
  Comma,
  Dot,
  Equals,
  Not,
  And,
  Or,
  Arrow,
  Ge,
  Lt,
  Other,
};

struct Token {
  TokenKind kind = TokenKind::End;
  std::string_view text;
  std::size_t offset = 0;  // into the lexer's text
};

/// 1-based line and column of `offset` in `text`.
std::pair<std::size_t, std::size_t> line_column(std::string_view text,
                                                std::size_t offset);

std::string describe(const Token& t);

class FormulaLexer {
 public:
  explicit FormulaLexer(std::string_view text);

  const Token& peek() const { return tok_; }
  void advance();
  [[noreturn]] void fail(const std::string& message, std::size_t offset) const;

 private:
  void skip_space();

  std::string_view text_;
  std::size_t pos_ = 0;
  Token tok_;
};

/// Parses the longest formula starting at the current token.
Formula parse_formula_tokens(FormulaLexer& lex, const Signature& signature);

}  // namespace glim::detail
