// Copyright 2026 The glim Authors
// SPDX-License-Identifier: Apache-2.0

#include <cctype>
#include <functional>

#include "fo_lexer.hpp"
#include "glim/error.hpp"
#include "glim/pl.hpp"
#include "text_util.hpp"

namespace glim {

namespace {

// Resolves the text between `{` and the matching `}`; `offset` locates it in
// the whole input.
using AtomResolver = std::function<PLAtom(std::string_view, std::size_t)>;

class PLParser {
 public:
  PLParser(std::string_view text, AtomResolver resolve)
      : text_(text), resolve_(std::move(resolve)) {}

  PLFormula parse() {
    PLFormula f = disjunction();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }

  [[noreturn]] void fail_at(const std::string& msg, std::size_t offset) const {
    const auto [line, col] = detail::line_column(text_, offset);
    throw ParseError(msg, line, col);
  }

  void skip() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool keyword(std::string_view word) {
    skip();
    if (text_.substr(pos_, word.size()) != word) return false;
    const std::size_t end = pos_ + word.size();
    if (end < text_.size() &&
        (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
      return false;
    }
    pos_ = end;
    return true;
  }

  PLFormula disjunction() {
    PLFormula f = conjunction();
    while (eat('|')) f = PLFormula::disjunction(std::move(f), conjunction());
    return f;
  }

  PLFormula conjunction() {
    PLFormula f = unary();
    while (eat('&')) f = PLFormula::conjunction(std::move(f), unary());
    return f;
  }

  PLFormula unary() {
    if (eat('!')) return PLFormula::negation(unary());
    return primary();
  }

  PLFormula primary() {
    skip();
    if (eat('(')) {
      PLFormula f = disjunction();
      if (!eat(')')) fail("expected ')'");
      return f;
    }
    if (keyword("true")) return PLFormula::truth();
    if (keyword("false")) return PLFormula::falsity();
    if (!eat('[')) fail("expected '[>= q]{...}', '[< q]{...}', 'true' or 'false'");
    skip();
    bool ge = false;
    if (text_.substr(pos_, 2) == ">=") {
      ge = true;
      pos_ += 2;
    } else if (pos_ < text_.size() && text_[pos_] == '<') {
      ++pos_;
    } else {
      fail("expected '>=' or '<'");
    }
    skip();
    const std::size_t qstart = pos_;
    while (pos_ < text_.size() && text_[pos_] != ']' &&
           !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    Rational q;
    try {
      q = Rational::parse(text_.substr(qstart, pos_ - qstart));
    } catch (const ParseError& e) {
      fail_at(e.message(), qstart);
    }
    if (q < Rational(0) || q > Rational(1)) {
      fail_at("threshold " + q.str() + " is outside [0,1]", qstart);
    }
    if (!eat(']')) fail("expected ']'");
    if (!eat('{')) fail("expected '{'");
    const std::size_t body = pos_;
    int depth = 1;
    while (pos_ < text_.size()) {
      if (text_[pos_] == '{') ++depth;
      if (text_[pos_] == '}' && --depth == 0) break;
      ++pos_;
    }
    if (pos_ >= text_.size()) fail_at("unterminated '{'", body - 1);
    PLAtom atom = resolve_(text_.substr(body, pos_ - body), body);
    ++pos_;
    return ge ? PLFormula::ge(std::move(q), std::move(atom))
              : PLFormula::lt(std::move(q), std::move(atom));
  }

  std::string_view text_;
  AtomResolver resolve_;
  std::size_t pos_ = 0;
};

}  // namespace

PLFormula parse_pl_lattice(std::string_view text, const FiniteLattice& lattice) {
  return PLParser(text, [&](std::string_view body, std::size_t offset) -> PLAtom {
           const std::string_view label = detail::trim(body);
           if (const auto e = lattice.find(label)) return *e;
           const std::size_t at = offset + static_cast<std::size_t>(
                                               label.data() - body.data());
           const auto [line, col] = detail::line_column(text, at);
           throw ParseError("unknown element '" + std::string(label) + "'",
                            line, col);
         })
      .parse();
}

PLFormula parse_pl_fo(std::string_view text, const Signature& signature) {
  return PLParser(text, [&](std::string_view body, std::size_t offset) -> PLAtom {
           try {
             return parse_formula(body, signature);
           } catch (const ParseError& e) {
             // Shift the position from the slice into the whole text.
             const auto [line0, col0] = detail::line_column(text, offset);
             const std::size_t line = e.line() ? line0 + e.line() - 1 : line0;
             const std::size_t col =
                 e.line() == 1 ? col0 + e.column() - 1 : e.column();
             throw ParseError(e.message(), line, col);
           }
         })
      .parse();
}

}  // namespace glim
