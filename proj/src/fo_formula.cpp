// Copyright 2026 The glim Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <functional>
#include <set>

#include "glim/error.hpp"
#include "glim/fo.hpp"

namespace glim {

Signature::Signature(std::vector<RelationSymbol> relations)
    : relations_(std::move(relations)) {
  std::set<std::string, std::less<>> seen;
  for (const auto& r : relations_) {
    if (r.name.empty()) throw DomainError("relation name is empty");
    if (r.arity == 0) {
      throw DomainError("relation '" + r.name + "' has arity 0");
    }
    if (!seen.insert(r.name).second) {
      throw DomainError("duplicate relation '" + r.name + "'");
    }
  }
}

std::optional<std::size_t> Signature::find(std::string_view name) const {
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    if (relations_[i].name == name) return i;
  }
  return std::nullopt;
}

namespace {

constexpr std::size_t kMaxTableCells = std::size_t{1} << 26;

}  // namespace

FiniteStructure::FiniteStructure(Signature signature, std::size_t universe_size,
                                 std::vector<std::vector<Tuple>> relations)
    : signature_(std::move(signature)),
      universe_size_(universe_size),
      relations_(std::move(relations)) {
  if (universe_size_ == 0) throw DomainError("universe must be nonempty");
  if (relations_.size() != signature_.size()) {
    throw DomainError("expected " + std::to_string(signature_.size()) +
                      " relation interpretations, got " +
                      std::to_string(relations_.size()));
  }
  tables_.resize(relations_.size());
  for (std::size_t r = 0; r < relations_.size(); ++r) {
    const auto& sym = signature_.relations()[r];
    std::size_t cells = 1;
    for (std::size_t i = 0; i < sym.arity; ++i) {
      if (cells > kMaxTableCells / universe_size_) {
        throw SizeError("relation '" + sym.name + "' is too large to tabulate");
      }
      cells *= universe_size_;
    }
    auto& tuples = relations_[r];
    for (const auto& t : tuples) {
      if (t.size() != sym.arity) {
        throw DomainError("tuple of length " + std::to_string(t.size()) +
                          " in relation '" + sym.name + "' of arity " +
                          std::to_string(sym.arity));
      }
      for (std::size_t e : t) {
        if (e >= universe_size_) {
          throw DomainError("element " + std::to_string(e) + " in relation '" +
                            sym.name + "' is outside the universe of size " +
                            std::to_string(universe_size_));
        }
      }
    }
    std::sort(tuples.begin(), tuples.end());
    tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
    tables_[r].assign(cells, 0);
    for (const auto& t : tuples) {
      std::size_t idx = 0;
      for (std::size_t e : t) idx = idx * universe_size_ + e;
      tables_[r][idx] = 1;
    }
  }
}

bool FiniteStructure::holds(std::size_t relation,
                            std::span<const std::size_t> args) const {
  std::size_t idx = 0;
  for (std::size_t e : args) idx = idx * universe_size_ + e;
  return tables_.at(relation)[idx] != 0;
}

struct Formula::Node {
  explicit Node(FormulaKind k) : kind(k) {}

  FormulaKind kind;
  std::string relation;
  std::vector<std::string> vars;
  std::optional<Formula> lhs;
  std::optional<Formula> rhs;
};

Formula Formula::truth() {
  static const Formula f(std::make_shared<const Node>(Node(FormulaKind::True)));
  return f;
}

Formula Formula::falsity() {
  static const Formula f(
      std::make_shared<const Node>(Node(FormulaKind::False)));
  return f;
}

Formula Formula::atom(std::string relation, std::vector<std::string> args) {
  if (args.empty()) throw DomainError("atom '" + relation + "' has no arguments");
  Node n(FormulaKind::Atom);
  n.relation = std::move(relation);
  n.vars = std::move(args);
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::equals(std::string lhs, std::string rhs) {
  Node n(FormulaKind::Eq);
  n.vars = {std::move(lhs), std::move(rhs)};
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::negation(Formula f) {
  Node n(FormulaKind::Not);
  n.lhs = std::move(f);
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  Node n(FormulaKind::And);
  n.lhs = std::move(lhs);
  n.rhs = std::move(rhs);
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  Node n(FormulaKind::Or);
  n.lhs = std::move(lhs);
  n.rhs = std::move(rhs);
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  Node n(FormulaKind::Implies);
  n.lhs = std::move(lhs);
  n.rhs = std::move(rhs);
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::exists(std::string var, Formula body) {
  Node n(FormulaKind::Exists);
  n.vars = {std::move(var)};
  n.lhs = std::move(body);
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::forall(std::string var, Formula body) {
  Node n(FormulaKind::Forall);
  n.vars = {std::move(var)};
  n.lhs = std::move(body);
  return Formula(std::make_shared<const Node>(std::move(n)));
}

FormulaKind Formula::kind() const { return node_->kind; }
const std::string& Formula::relation() const { return node_->relation; }
const std::vector<std::string>& Formula::variables() const {
  return node_->vars;
}

const Formula& Formula::lhs() const {
  if (!node_->lhs) throw DomainError("formula has no operand");
  return *node_->lhs;
}

const Formula& Formula::rhs() const {
  if (!node_->rhs) throw DomainError("formula has no right operand");
  return *node_->rhs;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.relation == y.relation && x.vars == y.vars &&
         x.lhs == y.lhs && x.rhs == y.rhs;
}

Formula operator!(const Formula& f) { return Formula::negation(f); }
Formula operator&&(const Formula& a, const Formula& b) {
  return Formula::conjunction(a, b);
}
Formula operator||(const Formula& a, const Formula& b) {
  return Formula::disjunction(a, b);
}

namespace {

bool is_binary(FormulaKind k) {
  return k == FormulaKind::And || k == FormulaKind::Or ||
         k == FormulaKind::Implies;
}

bool is_quantifier(FormulaKind k) {
  return k == FormulaKind::Exists || k == FormulaKind::Forall;
}

void collect_free(const Formula& f, std::vector<std::string>& bound,
                  std::vector<std::string>& out) {
  auto note = [&](const std::string& v) {
    if (std::find(bound.begin(), bound.end(), v) != bound.end()) return;
    if (std::find(out.begin(), out.end(), v) != out.end()) return;
    out.push_back(v);
  };
  switch (f.kind()) {
    case FormulaKind::True:
    case FormulaKind::False:
      return;
    case FormulaKind::Atom:
    case FormulaKind::Eq:
      for (const auto& v : f.variables()) note(v);
      return;
    case FormulaKind::Not:
      collect_free(f.lhs(), bound, out);
      return;
    case FormulaKind::Exists:
    case FormulaKind::Forall:
      bound.push_back(f.variables()[0]);
      collect_free(f.lhs(), bound, out);
      bound.pop_back();
      return;
    default:
      collect_free(f.lhs(), bound, out);
      collect_free(f.rhs(), bound, out);
  }
}

void collect_all(const Formula& f, std::vector<std::string>& out) {
  for (const auto& v : f.variables()) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  if (f.kind() == FormulaKind::Not || is_quantifier(f.kind())) {
    collect_all(f.lhs(), out);
  } else if (is_binary(f.kind())) {
    collect_all(f.lhs(), out);
    collect_all(f.rhs(), out);
  }
}

}  // namespace

std::vector<std::string> free_vars(const Formula& f) {
  std::vector<std::string> bound;
  std::vector<std::string> out;
  collect_free(f, bound, out);
  return out;
}

std::vector<std::string> all_vars(const Formula& f) {
  std::vector<std::string> out;
  collect_all(f, out);
  return out;
}

Formula desugar(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::True:
    case FormulaKind::False:
    case FormulaKind::Atom:
    case FormulaKind::Eq:
      return f;
    case FormulaKind::Not:
      return Formula::negation(desugar(f.lhs()));
    case FormulaKind::And:
      return Formula::conjunction(desugar(f.lhs()), desugar(f.rhs()));
    case FormulaKind::Or:
      return Formula::disjunction(desugar(f.lhs()), desugar(f.rhs()));
    case FormulaKind::Implies:
      return Formula::disjunction(Formula::negation(desugar(f.lhs())),
                                  desugar(f.rhs()));
    case FormulaKind::Exists:
      return Formula::exists(f.variables()[0], desugar(f.lhs()));
    case FormulaKind::Forall:
      return Formula::forall(f.variables()[0], desugar(f.lhs()));
  }
  throw InternalError("unknown formula kind");
}

std::size_t depth(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Not:
    case FormulaKind::Exists:
    case FormulaKind::Forall:
      return 1 + depth(f.lhs());
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      return 1 + std::max(depth(f.lhs()), depth(f.rhs()));
    default:
      return 0;
  }
}

std::string format_formula(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::True:
      return "true";
    case FormulaKind::False:
      return "false";
    case FormulaKind::Atom: {
      std::string out = f.relation() + "(";
      for (std::size_t i = 0; i < f.variables().size(); ++i) {
        if (i) out += ",";
        out += f.variables()[i];
      }
      return out + ")";
    }
    case FormulaKind::Eq:
      return f.variables()[0] + " = " + f.variables()[1];
    case FormulaKind::Not:
      return "!(" + format_formula(f.lhs()) + ")";
    case FormulaKind::And:
      return "(" + format_formula(f.lhs()) + " & " + format_formula(f.rhs()) +
             ")";
    case FormulaKind::Or:
      return "(" + format_formula(f.lhs()) + " | " + format_formula(f.rhs()) +
             ")";
    case FormulaKind::Implies:
      return "(" + format_formula(f.lhs()) + " -> " + format_formula(f.rhs()) +
             ")";
    case FormulaKind::Exists:
      return "(exists " + f.variables()[0] + ". " + format_formula(f.lhs()) +
             ")";
    case FormulaKind::Forall:
      return "(forall " + f.variables()[0] + ". " + format_formula(f.lhs()) +
             ")";
  }
  throw InternalError("unknown formula kind");
}

namespace {

// Each variable occurrence is mapped to a canonical index: bound variables
// by binder depth, free variables by first occurrence.
struct AlphaEnv {
  std::vector<std::pair<std::string, std::size_t>> bound;
  std::vector<std::string> free;
  std::size_t next_binder = 0;

  std::pair<bool, std::size_t> resolve(const std::string& v) {
    for (auto it = bound.rbegin(); it != bound.rend(); ++it) {
      if (it->first == v) return {true, it->second};
    }
    auto pos = std::find(free.begin(), free.end(), v);
    if (pos == free.end()) {
      free.push_back(v);
      return {false, free.size() - 1};
    }
    return {false, static_cast<std::size_t>(pos - free.begin())};
  }
};

bool alpha_rec(const Formula& a, const Formula& b, AlphaEnv& ea,
               AlphaEnv& eb) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case FormulaKind::True:
    case FormulaKind::False:
      return true;
    case FormulaKind::Atom:
    case FormulaKind::Eq:
      if (a.relation() != b.relation()) return false;
      if (a.variables().size() != b.variables().size()) return false;
      for (std::size_t i = 0; i < a.variables().size(); ++i) {
        if (ea.resolve(a.variables()[i]) != eb.resolve(b.variables()[i])) {
          return false;
        }
      }
      return true;
    case FormulaKind::Not:
      return alpha_rec(a.lhs(), b.lhs(), ea, eb);
    case FormulaKind::Exists:
    case FormulaKind::Forall: {
      const std::size_t id = ea.next_binder++;
      eb.next_binder++;
      ea.bound.emplace_back(a.variables()[0], id);
      eb.bound.emplace_back(b.variables()[0], id);
      const bool ok = alpha_rec(a.lhs(), b.lhs(), ea, eb);
      ea.bound.pop_back();
      eb.bound.pop_back();
      return ok;
    }
    default:
      return alpha_rec(a.lhs(), b.lhs(), ea, eb) &&
             alpha_rec(a.rhs(), b.rhs(), ea, eb);
  }
}

}  // namespace

bool alpha_equivalent(const Formula& a, const Formula& b) {
  AlphaEnv ea;
  AlphaEnv eb;
  return alpha_rec(a, b, ea, eb);
}

Signature order_signature() { return Signature({{"lt", 2}}); }

FiniteStructure fence_structure(std::size_t n) {
  if (n == 0) throw DomainError("fence family is indexed from 1");
  const std::size_t chain = (n + 1) / 2 + 1;
  const std::size_t size = chain + (n % 2 == 0 ? 1 : 0);
  std::vector<Tuple> lt;
  for (std::size_t i = 0; i < chain; ++i) {
    for (std::size_t j = i + 1; j < chain; ++j) lt.push_back({i, j});
  }
  return FiniteStructure(order_signature(), size, {std::move(lt)});
}

Formula maximal_not_maximum() {
  const Formula maximal =
      Formula::forall("y", !Formula::atom("lt", {"x", "y"}));
  const Formula other =
      Formula::exists("z", !Formula::atom("lt", {"z", "x"}) &&
                               !Formula::equals("z", "x"));
  return maximal && other;
}

}  // namespace glim
