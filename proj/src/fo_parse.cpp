// Copyright 2026 The glim Authors
// SPDX-License-Identifier: Apache-2.0

#include <cctype>
#include <charconv>

#include "fo_lexer.hpp"
#include "glim/error.hpp"
#include "glim/fo.hpp"
#include "text_util.hpp"

namespace glim {
namespace detail {

std::pair<std::size_t, std::size_t> line_column(std::string_view text,
                                                std::size_t offset) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void FormulaLexer::fail(const std::string& message,
                                     std::size_t offset) const {
  const auto [line, col] = line_column(text_, offset);
  throw ParseError(message, line, col);
}

FormulaLexer::FormulaLexer(std::string_view text) : text_(text) {
  advance();
}

void FormulaLexer::skip_space() {
  while (pos_ < text_.size() &&
         std::isspace(static_cast<unsigned char>(text_[pos_]))) {
    ++pos_;
  }
}

void FormulaLexer::advance() {
  skip_space();
  tok_ = Token{};
  tok_.offset = pos_;
  if (pos_ >= text_.size()) {
    tok_.kind = TokenKind::End;
    return;
  }
  const char c = text_[pos_];
  auto single = [&](TokenKind k) {
    tok_.kind = k;
    tok_.text = text_.substr(pos_, 1);
    ++pos_;
  };
  if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
    std::size_t end = pos_ + 1;
    while (end < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[end])) ||
            text_[end] == '_' || text_[end] == '\'')) {
      ++end;
    }
    tok_.kind = TokenKind::Ident;
    tok_.text = text_.substr(pos_, end - pos_);
    pos_ = end;
    return;
  }
  if (text_.substr(pos_, 2) == "->") {
    tok_.kind = TokenKind::Arrow;
    tok_.text = text_.substr(pos_, 2);
    pos_ += 2;
    return;
  }
  if (std::isdigit(static_cast<unsigned char>(c))) {
    std::size_t end = pos_;
    auto digits = [&] {
      while (end < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[end]))) {
        ++end;
      }
    };
    digits();
    if (end + 1 < text_.size() && text_[end] == '/' &&
        std::isdigit(static_cast<unsigned char>(text_[end + 1]))) {
      ++end;
      digits();
    }
    tok_.kind = TokenKind::Number;
    tok_.text = text_.substr(pos_, end - pos_);
    pos_ = end;
    return;
  }
  if (text_.substr(pos_, 2) == ">=") {
    tok_.kind = TokenKind::Ge;
    tok_.text = text_.substr(pos_, 2);
    pos_ += 2;
    return;
  }
  switch (c) {
    case '<': return single(TokenKind::Lt);
    case '[': return single(TokenKind::LBracket);
    case ']': return single(TokenKind::RBracket);
    case '{': return single(TokenKind::LBrace);
    case '}': return single(TokenKind::RBrace);
    case '(': return single(TokenKind::LParen);
    case ')': return single(TokenKind::RParen);
    case ',': return single(TokenKind::Comma);
    case '.': return single(TokenKind::Dot);
    case '=': return single(TokenKind::Equals);
    case '!': return single(TokenKind::Not);
    case '&': return single(TokenKind::And);
    case '|': return single(TokenKind::Or);
    default:
      tok_.kind = TokenKind::Other;
      tok_.text = text_.substr(pos_, 1);
      ++pos_;
  }
}

std::string describe(const Token& t) {
  if (t.kind == TokenKind::End) return "end of input";
  return "'" + std::string(t.text) + "'";
}

}  // namespace detail

namespace {

using detail::FormulaLexer;
using detail::Token;
using detail::TokenKind;

class FormulaParser {
 public:
  FormulaParser(FormulaLexer& lex, const Signature& signature)
      : lex_(lex), sig_(signature) {}

  Formula parse_implication() {
    Formula lhs = parse_disjunction();
    if (lex_.peek().kind == TokenKind::Arrow) {
      lex_.advance();
      return Formula::implication(std::move(lhs), parse_implication());
    }
    return lhs;
  }

 private:
  Formula parse_disjunction() {
    Formula f = parse_conjunction();
    while (lex_.peek().kind == TokenKind::Or) {
      lex_.advance();
      f = Formula::disjunction(std::move(f), parse_conjunction());
    }
    return f;
  }

  Formula parse_conjunction() {
    Formula f = parse_unary();
    while (lex_.peek().kind == TokenKind::And) {
      lex_.advance();
      f = Formula::conjunction(std::move(f), parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    const Token t = lex_.peek();
    if (t.kind == TokenKind::Not) {
      lex_.advance();
      return Formula::negation(parse_unary());
    }
    if (t.kind == TokenKind::Ident && (t.text == "forall" || t.text == "exists")) {
      lex_.advance();
      const Token var = lex_.peek();
      if (var.kind != TokenKind::Ident || is_keyword(var.text)) {
        lex_.fail("expected a variable after '" + std::string(t.text) + "'",
                  var.offset);
      }
      lex_.advance();
      expect(TokenKind::Dot, "'.'");
      // The body extends as far right as possible.
      Formula body = parse_implication();
      return t.text == "forall" ? Formula::forall(std::string(var.text), body)
                                : Formula::exists(std::string(var.text), body);
    }
    return parse_primary();
  }

  Formula parse_primary() {
    const Token t = lex_.peek();
    if (t.kind == TokenKind::LParen) {
      lex_.advance();
      Formula f = parse_implication();
      expect(TokenKind::RParen, "')'");
      return f;
    }
    if (t.kind != TokenKind::Ident) {
      lex_.fail("expected a formula, found " + detail::describe(t), t.offset);
    }
    if (t.text == "true") {
      lex_.advance();
      return Formula::truth();
    }
    if (t.text == "false") {
      lex_.advance();
      return Formula::falsity();
    }
    if (is_keyword(t.text)) {
      lex_.fail("unexpected keyword '" + std::string(t.text) + "'", t.offset);
    }
    lex_.advance();
    if (lex_.peek().kind == TokenKind::Equals) {
      lex_.advance();
      const Token rhs = lex_.peek();
      if (rhs.kind != TokenKind::Ident || is_keyword(rhs.text)) {
        lex_.fail("expected a variable after '='", rhs.offset);
      }
      lex_.advance();
      return Formula::equals(std::string(t.text), std::string(rhs.text));
    }
    if (lex_.peek().kind != TokenKind::LParen) {
      lex_.fail("expected '(' or '=' after '" + std::string(t.text) + "'",
                lex_.peek().offset);
    }
    const auto rel = sig_.find(t.text);
    if (!rel) {
      lex_.fail("unknown relation '" + std::string(t.text) + "'", t.offset);
    }
    lex_.advance();
    std::vector<std::string> args;
    while (true) {
      const Token a = lex_.peek();
      if (a.kind != TokenKind::Ident || is_keyword(a.text)) {
        lex_.fail("expected a variable, found " + detail::describe(a), a.offset);
      }
      args.emplace_back(a.text);
      lex_.advance();
      if (lex_.peek().kind == TokenKind::Comma) {
        lex_.advance();
        continue;
      }
      break;
    }
    expect(TokenKind::RParen, "')'");
    const std::size_t arity = sig_.relations()[*rel].arity;
    if (args.size() != arity) {
      lex_.fail("relation '" + std::string(t.text) + "' has arity " +
                    std::to_string(arity) + " but was given " +
                    std::to_string(args.size()) + " argument(s)",
                t.offset);
    }
    return Formula::atom(std::string(t.text), std::move(args));
  }

  static bool is_keyword(std::string_view s) {
    return s == "forall" || s == "exists" || s == "true" || s == "false";
  }

  void expect(TokenKind kind, const char* what) {
    const Token t = lex_.peek();
    if (t.kind != kind) {
      lex_.fail(std::string("expected ") + what + ", found " +
                    detail::describe(t),
                t.offset);
    }
    lex_.advance();
  }

  FormulaLexer& lex_;
  const Signature& sig_;
};

}  // namespace

namespace detail {

Formula parse_formula_tokens(FormulaLexer& lex, const Signature& signature) {
  FormulaParser parser(lex, signature);
  return parser.parse_implication();
}

}  // namespace detail

Formula parse_formula(std::string_view text, const Signature& signature) {
  FormulaLexer lex(text);
  Formula f = detail::parse_formula_tokens(lex, signature);
  if (lex.peek().kind != TokenKind::End) {
    lex.fail("unexpected " + detail::describe(lex.peek()), lex.peek().offset);
  }
  return f;
}

namespace {

std::size_t parse_count(std::string_view s, std::size_t line, std::size_t col,
                        const char* what) {
  std::size_t v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw ParseError(std::string("expected ") + what + ", found '" +
                         std::string(s) + "'",
                     line, col);
  }
  return v;
}

}  // namespace

FiniteStructure parse_structure(std::string_view text) {
  using detail::column_of;
  using detail::trim;
  std::optional<Signature> signature;
  std::optional<std::size_t> universe;
  std::vector<std::vector<Tuple>> relations;
  std::vector<bool> seen;

  const auto lines = detail::logical_lines(text);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const auto& [number, line] = lines[li];
    const auto colon = line.find(':');
    const auto eq = line.find('=');
    if (colon != std::string_view::npos &&
        (eq == std::string_view::npos || colon < eq)) {
      const std::string_view key = trim(line.substr(0, colon));
      const std::string_view body = line.substr(colon + 1);
      if (key == "signature") {
        if (signature) throw ParseError("duplicate 'signature:' line", number, 1);
        std::vector<RelationSymbol> syms;
        if (!trim(body).empty()) {
          for (std::string_view item : detail::split(body, ',')) {
            const std::string_view t = trim(item);
            const auto slash = t.find('/');
            if (slash == std::string_view::npos) {
              throw ParseError("expected 'name/arity'", number,
                               column_of(line, t));
            }
            const std::string_view name = trim(t.substr(0, slash));
            const std::string_view ar = trim(t.substr(slash + 1));
            syms.push_back({std::string(name),
                            parse_count(ar, number, column_of(line, ar),
                                        "an arity")});
          }
        }
        try {
          signature.emplace(std::move(syms));
        } catch (const DomainError& e) {
          throw ParseError(e.what(), number, 1);
        }
        relations.assign(signature->size(), {});
        seen.assign(signature->size(), false);
      } else if (key == "universe") {
        if (universe) throw ParseError("duplicate 'universe:' line", number, 1);
        const std::string_view v = trim(body);
        universe = parse_count(v, number, column_of(line, v), "a universe size");
        if (*universe == 0) {
          throw ParseError("universe must be nonempty", number,
                           column_of(line, v));
        }
      } else {
        throw ParseError("unknown key '" + std::string(key) + "'", number, 1);
      }
      continue;
    }
    if (eq == std::string_view::npos) {
      throw ParseError("expected 'key: value' or 'relation = {...}'", number, 1);
    }
    if (!signature) {
      throw ParseError("relation given before 'signature:'", number, 1);
    }
    if (!universe) {
      throw ParseError("relation given before 'universe:'", number, 1);
    }
    const std::string_view name = trim(line.substr(0, eq));
    const auto rel = signature->find(name);
    if (!rel) {
      throw ParseError("unknown relation '" + std::string(name) + "'", number,
                       column_of(line, name));
    }
    if (seen[*rel]) {
      throw ParseError("relation '" + std::string(name) + "' given twice",
                       number, column_of(line, name));
    }
    seen[*rel] = true;
    const std::size_t arity = signature->relations()[*rel].arity;

    // The tuple set may continue over following lines until '}'.
    std::string joined(line.substr(eq + 1));
    std::vector<std::pair<std::size_t, std::size_t>> line_starts{
        {0, number}};
    while (joined.find('}') == std::string::npos && li + 1 < lines.size()) {
      ++li;
      line_starts.emplace_back(joined.size() + 1, lines[li].number);
      joined += ' ';
      joined += lines[li].text;
    }
    auto where = [&](std::size_t off) -> std::pair<std::size_t, std::size_t> {
      std::size_t ln = number;
      std::size_t start = 0;
      for (const auto& [s, n] : line_starts) {
        if (s <= off) {
          ln = n;
          start = s;
        }
      }
      // Continuation-line columns are relative to the trimmed text.
      const std::size_t base = ln == number ? eq + 2 : 1;
      return {ln, off - start + base};
    };
    auto fail = [&](const std::string& msg, std::size_t off) {
      const auto [ln, col] = where(off);
      throw ParseError(msg, ln, col);
    };

    std::size_t p = 0;
    auto skip = [&] {
      while (p < joined.size() &&
             std::isspace(static_cast<unsigned char>(joined[p]))) {
        ++p;
      }
    };
    auto number_at = [&]() -> std::size_t {
      skip();
      const std::size_t start = p;
      while (p < joined.size() &&
             std::isdigit(static_cast<unsigned char>(joined[p]))) {
        ++p;
      }
      if (start == p) fail("expected an element index", start);
      const std::size_t v = std::stoull(joined.substr(start, p - start));
      if (v >= *universe) {
        fail("element " + std::to_string(v) + " is outside the universe", start);
      }
      return v;
    };
    skip();
    if (p >= joined.size() || joined[p] != '{') fail("expected '{'", p);
    ++p;
    skip();
    std::vector<Tuple> tuples;
    if (p < joined.size() && joined[p] == '}') {
      ++p;
    } else {
      while (true) {
        skip();
        Tuple t;
        const std::size_t tuple_start = p;
        if (p < joined.size() && joined[p] == '(') {
          ++p;
          while (true) {
            t.push_back(number_at());
            skip();
            if (p < joined.size() && joined[p] == ',') {
              ++p;
              continue;
            }
            break;
          }
          if (p >= joined.size() || joined[p] != ')') fail("expected ')'", p);
          ++p;
        } else {
          t.push_back(number_at());
        }
        if (t.size() != arity) {
          fail("tuple of length " + std::to_string(t.size()) +
                   " for relation '" + std::string(name) + "' of arity " +
                   std::to_string(arity),
               tuple_start);
        }
        tuples.push_back(std::move(t));
        skip();
        if (p < joined.size() && joined[p] == ',') {
          ++p;
          continue;
        }
        if (p < joined.size() && joined[p] == '}') {
          ++p;
          break;
        }
        fail("expected ',' or '}'", p);
      }
    }
    skip();
    if (p != joined.size()) fail("unexpected text after '}'", p);
    relations[*rel] = std::move(tuples);
  }
  if (!signature) throw ParseError("missing 'signature:' line", 0, 0);
  if (!universe) throw ParseError("missing 'universe:' line", 0, 0);
  return FiniteStructure(std::move(*signature), *universe, std::move(relations));
}

FiniteStructure load_structure(const std::string& path) {
  return parse_structure(detail::read_file(path));
}

std::string format_structure(const FiniteStructure& structure) {
  const auto& sig = structure.signature();
  std::string out = "signature: ";
  for (std::size_t i = 0; i < sig.size(); ++i) {
    if (i) out += ", ";
    out += sig.relations()[i].name + "/" +
           std::to_string(sig.relations()[i].arity);
  }
  out += "\nuniverse: " + std::to_string(structure.universe_size()) + "\n";
  for (std::size_t r = 0; r < sig.size(); ++r) {
    out += sig.relations()[r].name + " = {";
    bool first = true;
    for (const auto& t : structure.tuples(r)) {
      if (!first) out += ",";
      first = false;
      out += "(";
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(t[i]);
      }
      out += ")";
    }
    out += "}\n";
  }
  return out;
}

}  // namespace glim
