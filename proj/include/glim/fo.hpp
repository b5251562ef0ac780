// Copyright 2026 The glim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace glim {

struct RelationSymbol {
  std::string name;
  std::size_t arity = 1;

  friend bool operator==(const RelationSymbol&, const RelationSymbol&) = default;
};

/// A relational signature. Equality is a logical symbol and never appears
/// here.
class Signature {
 public:
  Signature() = default;
  /// Throws DomainError on duplicate names or zero arity.
  explicit Signature(std::vector<RelationSymbol> relations);

  const std::vector<RelationSymbol>& relations() const { return relations_; }
  std::size_t size() const { return relations_.size(); }
  std::optional<std::size_t> find(std::string_view name) const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<RelationSymbol> relations_;
};

using Tuple = std::vector<std::size_t>;

/// A finite σ-structure on the universe {0, ..., N-1}.
class FiniteStructure {
 public:
  /// `relations[i]` interprets signature relation i. Tuples are sorted and
  /// deduplicated. Throws DomainError on an empty universe, wrong relation
  /// count, wrong tuple length or out-of-range element.
  FiniteStructure(Signature signature, std::size_t universe_size,
                  std::vector<std::vector<Tuple>> relations);

  const Signature& signature() const { return signature_; }
  std::size_t universe_size() const { return universe_size_; }
  const std::vector<Tuple>& tuples(std::size_t relation) const {
    return relations_.at(relation);
  }

  /// Dense membership test; `args` has the relation's arity.
  bool holds(std::size_t relation, std::span<const std::size_t> args) const;
  /// Membership by row-major tuple code (first coordinate most significant).
  bool holds_at(std::size_t relation, std::size_t code) const {
    return tables_[relation][code] != 0;
  }

  friend bool operator==(const FiniteStructure& a, const FiniteStructure& b) {
    return a.signature_ == b.signature_ &&
           a.universe_size_ == b.universe_size_ && a.relations_ == b.relations_;
  }

 private:
  Signature signature_;
  std::size_t universe_size_;
  std::vector<std::vector<Tuple>> relations_;
  std::vector<std::vector<std::uint8_t>> tables_;
};

enum class FormulaKind {
  True,
  False,
  Atom,
  Eq,
  Not,
  And,
  Or,
  Implies,
  Exists,
  Forall,
};

/// Immutable first-order formula over relation names and named variables.
/// Copies share structure.
class Formula {
 public:
  static Formula truth();
  static Formula falsity();
  static Formula atom(std::string relation, std::vector<std::string> args);
  static Formula equals(std::string lhs, std::string rhs);
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula exists(std::string var, Formula body);
  static Formula forall(std::string var, Formula body);

  FormulaKind kind() const;
  /// Relation name of an Atom.
  const std::string& relation() const;
  /// Arguments of an Atom or Eq; the bound variable of a quantifier.
  const std::vector<std::string>& variables() const;
  /// Operand of Not and quantifiers; left operand of binary connectives.
  const Formula& lhs() const;
  const Formula& rhs() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Convenience builders.
Formula operator!(const Formula& f);
Formula operator&&(const Formula& a, const Formula& b);
Formula operator||(const Formula& a, const Formula& b);

/// Free variables in order of first occurrence.
std::vector<std::string> free_vars(const Formula& f);
/// Every variable name occurring in f, free or bound.
std::vector<std::string> all_vars(const Formula& f);
/// Expands `a -> b` to `!a | b`.
Formula desugar(const Formula& f);
/// Quantifier nesting plus connective depth; atoms have depth 0.
std::size_t depth(const Formula& f);
/// Fully parenthesized text accepted by parse_formula.
std::string format_formula(const Formula& f);
/// Equal up to renaming of bound variables and a positional renaming of
/// free variables (matched in first-occurrence order).
bool alpha_equivalent(const Formula& a, const Formula& b);

/// Grammar, loosest first: `->` (right assoc), `|`, `&`, `!`. Quantifiers
/// `forall v.` / `exists v.` scope as far right as possible. Atoms:
/// `name(v, ...)`, `v = w`, `true`, `false`. Throws ParseError with the
/// position on bad syntax, unknown relations or arity mismatch.
Formula parse_formula(std::string_view text, const Signature& signature);

// Structure text format:
//   signature: lt/2, P/1
//   universe: 4
//   lt = {(0,1),(0,2),(1,2)}
// Element indices are 0-based; `#` starts a comment; omitted relations are
// empty.
FiniteStructure parse_structure(std::string_view text);
FiniteStructure load_structure(const std::string& path);
std::string format_structure(const FiniteStructure& structure);

using Assignment = std::map<std::string, std::size_t, std::less<>>;

/// Tarskian satisfaction. Throws DomainError when α misses a free variable,
/// maps to an element outside the universe, or φ does not fit the signature.
bool satisfies(const FiniteStructure& structure, const Assignment& alpha,
               const Formula& formula);

/// A formula compiled against a structure and an ordered context, ready for
/// repeated evaluation. Variables are resolved to slots once.
class CompiledFormula {
 public:
  /// Throws DomainError if a free variable is missing from `context` or the
  /// formula does not fit the structure's signature. Keeps a reference to
  /// `structure`.
  CompiledFormula(const FiniteStructure& structure, const Formula& formula,
                  std::span<const std::string> context);
  ~CompiledFormula();
  CompiledFormula(CompiledFormula&&) noexcept;
  CompiledFormula& operator=(CompiledFormula&&) noexcept;

  std::size_t context_size() const;
  /// `values[i]` interprets context variable i.
  bool evaluate(std::span<const std::size_t> values) const;
  /// Satisfying assignments among those numbered [begin, end) in the order
  /// of decode_assignment.
  std::uint64_t count_range(std::uint64_t begin, std::uint64_t end) const;

  struct Program;  // opaque

 private:
  std::unique_ptr<Program> program_;
};

struct CountOptions {
  /// Partitions the assignment space over this many threads. The count is
  /// identical for every value.
  unsigned workers = 1;
};

/// Number of assignments of `context` into A satisfying φ, out of
/// N^|context|. Throws DomainError if context misses a free variable and
/// SizeError if N^|context| overflows 64 bits.
std::uint64_t count_satisfying(const FiniteStructure& structure,
                               const Formula& formula,
                               std::span<const std::string> context,
                               CountOptions options = {});

/// N^n with overflow detection (SizeError).
std::uint64_t assignment_count(std::size_t universe_size, std::size_t arity);

/// Decodes assignment number `index` (odometer order, last variable fastest).
std::vector<std::size_t> decode_assignment(std::uint64_t index,
                                           std::size_t universe_size,
                                           std::size_t arity);

/// The poset family whose odd members 2k-1 are (k+1)-chains and whose even
/// members 2k are (k+1)-chains plus one isolated point. `lt` is the strict
/// order. Throws DomainError for n = 0.
FiniteStructure fence_structure(std::size_t n);

/// ψ(x) = ∀y ¬lt(x,y) ∧ ∃z (¬lt(z,x) ∧ ¬(z = x)): maximal but not maximum.
Formula maximal_not_maximum();

Signature order_signature();

}  // namespace glim
