// Copyright 2026 The glim Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <limits>
#include <thread>

#include "glim/error.hpp"
#include "glim/fo.hpp"

namespace glim {

struct CompiledFormula::Program {
  struct Op {
    explicit Op(FormulaKind k) : kind(k) {}

    FormulaKind kind;
    int lhs = -1;
    int rhs = -1;
    std::size_t slot = 0;      // quantified variable
    std::size_t relation = 0;  // Atom
    std::vector<std::size_t> args;  // slots of Atom / Eq arguments
  };

  const FiniteStructure* structure = nullptr;
  std::vector<Op> ops;
  int root = -1;
  std::size_t context = 0;
  std::size_t slots = 0;

  bool eval(int i, std::vector<std::size_t>& env) const {
    const Op& op = ops[static_cast<std::size_t>(i)];
    switch (op.kind) {
      case FormulaKind::True:
        return true;
      case FormulaKind::False:
        return false;
      case FormulaKind::Atom: {
        const std::size_t n = structure->universe_size();
        std::size_t code = 0;
        for (std::size_t s : op.args) code = code * n + env[s];
        return structure->holds_at(op.relation, code);
      }
      case FormulaKind::Eq:
        return env[op.args[0]] == env[op.args[1]];
      case FormulaKind::Not:
        return !eval(op.lhs, env);
      case FormulaKind::And:
        return eval(op.lhs, env) && eval(op.rhs, env);
      case FormulaKind::Or:
        return eval(op.lhs, env) || eval(op.rhs, env);
      case FormulaKind::Exists:
        for (std::size_t v = 0; v < structure->universe_size(); ++v) {
          env[op.slot] = v;
          if (eval(op.lhs, env)) return true;
        }
        return false;
      case FormulaKind::Forall:
        for (std::size_t v = 0; v < structure->universe_size(); ++v) {
          env[op.slot] = v;
          if (!eval(op.lhs, env)) return false;
        }
        return true;
      case FormulaKind::Implies:
        break;
    }
    throw InternalError("implication survived desugaring");
  }
};

namespace {

using Program = CompiledFormula::Program;

struct Compiler {
  const Signature& sig;
  Program& prog;
  std::vector<std::pair<std::string, std::size_t>> scope;

  std::size_t lookup(const std::string& v) const {
    for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
      if (it->first == v) return it->second;
    }
    throw DomainError("variable '" + v + "' is not in the context");
  }

  int emit(Program::Op op) {
    prog.ops.push_back(std::move(op));
    return static_cast<int>(prog.ops.size() - 1);
  }

  int compile(const Formula& f) {
    Program::Op op(f.kind());
    switch (f.kind()) {
      case FormulaKind::True:
      case FormulaKind::False:
        break;
      case FormulaKind::Atom: {
        const auto rel = sig.find(f.relation());
        if (!rel) {
          throw DomainError("relation '" + f.relation() +
                            "' is not in the structure's signature");
        }
        if (sig.relations()[*rel].arity != f.variables().size()) {
          throw DomainError("relation '" + f.relation() + "' has arity " +
                            std::to_string(sig.relations()[*rel].arity));
        }
        op.relation = *rel;
        for (const auto& v : f.variables()) op.args.push_back(lookup(v));
        break;
      }
      case FormulaKind::Eq:
        for (const auto& v : f.variables()) op.args.push_back(lookup(v));
        break;
      case FormulaKind::Not:
        op.lhs = compile(f.lhs());
        break;
      case FormulaKind::And:
      case FormulaKind::Or:
        op.lhs = compile(f.lhs());
        op.rhs = compile(f.rhs());
        break;
      case FormulaKind::Exists:
      case FormulaKind::Forall: {
        // Slots are reused by nesting depth.
        op.slot = scope.size();
        prog.slots = std::max(prog.slots, op.slot + 1);
        scope.emplace_back(f.variables()[0], op.slot);
        op.lhs = compile(f.lhs());
        scope.pop_back();
        break;
      }
      case FormulaKind::Implies:
        throw InternalError("implication survived desugaring");
    }
    return emit(std::move(op));
  }
};

}  // namespace

CompiledFormula::CompiledFormula(const FiniteStructure& structure,
                                 const Formula& formula,
                                 std::span<const std::string> context)
    : program_(std::make_unique<Program>()) {
  for (std::size_t i = 0; i < context.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (context[i] == context[j]) {
        throw DomainError("context repeats variable '" + context[i] + "'");
      }
    }
  }
  program_->structure = &structure;
  program_->context = context.size();
  program_->slots = context.size();
  Compiler c{structure.signature(), *program_, {}};
  for (std::size_t i = 0; i < context.size(); ++i) {
    c.scope.emplace_back(context[i], i);
  }
  program_->root = c.compile(desugar(formula));
}

CompiledFormula::~CompiledFormula() = default;
CompiledFormula::CompiledFormula(CompiledFormula&&) noexcept = default;
CompiledFormula& CompiledFormula::operator=(CompiledFormula&&) noexcept =
    default;

std::size_t CompiledFormula::context_size() const { return program_->context; }

bool CompiledFormula::evaluate(std::span<const std::size_t> values) const {
  if (values.size() != program_->context) {
    throw DomainError("expected " + std::to_string(program_->context) +
                      " values, got " + std::to_string(values.size()));
  }
  const std::size_t n = program_->structure->universe_size();
  std::vector<std::size_t> env(program_->slots, 0);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] >= n) {
      throw DomainError("element " + std::to_string(values[i]) +
                        " is outside the universe");
    }
    env[i] = values[i];
  }
  return program_->eval(program_->root, env);
}

std::uint64_t CompiledFormula::count_range(std::uint64_t begin,
                                           std::uint64_t end) const {
  const std::size_t n = program_->structure->universe_size();
  const std::size_t arity = program_->context;
  std::vector<std::size_t> env(program_->slots, 0);
  if (begin >= end) return 0;
  const auto start = decode_assignment(begin, n, arity);
  std::copy(start.begin(), start.end(), env.begin());
  std::uint64_t count = 0;
  for (std::uint64_t i = begin; i < end; ++i) {
    if (program_->eval(program_->root, env)) ++count;
    // Odometer step, last context variable fastest. Quantifier slots sit
    // above the context and are overwritten on every use.
    for (std::size_t k = arity; k-- > 0;) {
      if (++env[k] < n) break;
      env[k] = 0;
    }
  }
  return count;
}

std::uint64_t assignment_count(std::size_t universe_size, std::size_t arity) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    if (universe_size != 0 &&
        total > std::numeric_limits<std::uint64_t>::max() / universe_size) {
      throw SizeError(std::to_string(universe_size) + "^" +
                      std::to_string(arity) + " assignments overflow 64 bits");
    }
    total *= universe_size;
  }
  return total;
}

std::vector<std::size_t> decode_assignment(std::uint64_t index,
                                           std::size_t universe_size,
                                           std::size_t arity) {
  std::vector<std::size_t> out(arity, 0);
  for (std::size_t k = arity; k-- > 0;) {
    out[k] = static_cast<std::size_t>(index % universe_size);
    index /= universe_size;
  }
  return out;
}

bool satisfies(const FiniteStructure& structure, const Assignment& alpha,
               const Formula& formula) {
  std::vector<std::string> context;
  std::vector<std::size_t> values;
  for (const auto& v : free_vars(formula)) {
    const auto it = alpha.find(v);
    if (it == alpha.end()) {
      throw DomainError("assignment does not cover free variable '" + v + "'");
    }
    context.push_back(v);
    values.push_back(it->second);
  }
  return CompiledFormula(structure, formula, context).evaluate(values);
}

std::uint64_t count_satisfying(const FiniteStructure& structure,
                               const Formula& formula,
                               std::span<const std::string> context,
                               CountOptions options) {
  const CompiledFormula compiled(structure, formula, context);
  const std::uint64_t total =
      assignment_count(structure.universe_size(), context.size());
  const std::uint64_t workers =
      std::clamp<std::uint64_t>(options.workers, 1, std::max<std::uint64_t>(total, 1));
  if (workers == 1) return compiled.count_range(0, total);

  std::vector<std::uint64_t> partial(workers, 0);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t lo = total / workers * w + std::min(w, total % workers);
    const std::uint64_t hi =
        lo + total / workers + (w < total % workers ? 1 : 0);
    threads.emplace_back(
        [&, w, lo, hi] { partial[w] = compiled.count_range(lo, hi); });
  }
  for (auto& t : threads) t.join();
  std::uint64_t sum = 0;
  for (auto p : partial) sum += p;
  return sum;
}

}  // namespace glim
