// Copyright 2026 The glim Authors
// SPDX-License-Identifier: Apache-2.0

#include "glim/lattice.hpp"

#include <algorithm>
#include <set>

#include "glim/error.hpp"

namespace glim {

namespace {

// Greatest element among `candidates` w.r.t. leq, if one exists.
std::optional<Element> greatest(const OrderSpec& order,
                                const std::vector<Element>& candidates) {
  for (Element c : candidates) {
    bool above_all = true;
    for (Element d : candidates) {
      if (!order.leq[d][c]) {
        above_all = false;
        break;
      }
    }
    if (above_all) return c;
  }
  return std::nullopt;
}

std::optional<Element> least(const OrderSpec& order,
                             const std::vector<Element>& candidates) {
  for (Element c : candidates) {
    bool below_all = true;
    for (Element d : candidates) {
      if (!order.leq[c][d]) {
        below_all = false;
        break;
      }
    }
    if (below_all) return c;
  }
  return std::nullopt;
}

std::optional<Element> glb(const OrderSpec& order, Element a, Element b) {
  std::vector<Element> lower;
  for (Element c = 0; c < order.size(); ++c) {
    if (order.leq[c][a] && order.leq[c][b]) lower.push_back(c);
  }
  return greatest(order, lower);
}

std::optional<Element> lub(const OrderSpec& order, Element a, Element b) {
  std::vector<Element> upper;
  for (Element c = 0; c < order.size(); ++c) {
    if (order.leq[a][c] && order.leq[b][c]) upper.push_back(c);
  }
  return least(order, upper);
}

}  // namespace

OrderSpec make_order(std::vector<std::string> labels,
                     const std::vector<std::pair<Element, Element>>& pairs) {
  const std::size_t n = labels.size();
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      throw DomainError("duplicate element label '" + l + "'");
    }
  }
  OrderSpec order;
  order.labels = std::move(labels);
  order.leq.assign(n, std::vector<bool>(n, false));
  for (Element i = 0; i < n; ++i) order.leq[i][i] = true;
  for (const auto& [a, b] : pairs) {
    if (a >= n || b >= n) throw DomainError("order pair index out of range");
    order.leq[a][b] = true;
  }
  for (Element k = 0; k < n; ++k) {
    for (Element i = 0; i < n; ++i) {
      if (!order.leq[i][k]) continue;
      for (Element j = 0; j < n; ++j) {
        if (order.leq[k][j]) order.leq[i][j] = true;
      }
    }
  }
  return order;
}

std::string LatticeViolation::describe(
    const std::vector<std::string>& labels) const {
  auto l = [&](Element e) {
    return e < labels.size() ? labels[e] : std::to_string(e);
  };
  switch (kind) {
    case Kind::Empty:
      return "empty order";
    case Kind::Antisymmetry:
      return "antisymmetry " + l(a) + " " + l(b);
    case Kind::NoBottom:
      return "no bottom element";
    case Kind::NoTop:
      return "no top element";
    case Kind::NoMeet:
      return "no meet " + l(a) + " " + l(b);
    case Kind::NoJoin:
      return "no join " + l(a) + " " + l(b);
    case Kind::Distributivity:
      return "distributivity " + l(a) + " " + l(b) + " " + l(c);
  }
  return "unknown";
}

std::vector<LatticeViolation> validate_lattice(const OrderSpec& order) {
  using Kind = LatticeViolation::Kind;
  std::vector<LatticeViolation> out;
  const std::size_t n = order.size();
  if (n == 0) {
    out.push_back({Kind::Empty});
    return out;
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      if (order.leq[a][b] && order.leq[b][a]) {
        out.push_back({Kind::Antisymmetry, a, b});
      }
    }
  }
  if (!out.empty()) return out;

  std::vector<Element> all(n);
  for (Element i = 0; i < n; ++i) all[i] = i;
  if (!least(order, all)) out.push_back({Kind::NoBottom});
  if (!greatest(order, all)) out.push_back({Kind::NoTop});

  std::vector<Element> meet(n * n);
  std::vector<Element> join(n * n);
  bool tables_complete = true;
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const auto m = glb(order, a, b);
      const auto j = lub(order, a, b);
      if (!m) {
        if (a < b) out.push_back({Kind::NoMeet, a, b});
        tables_complete = false;
      } else {
        meet[a * n + b] = *m;
      }
      if (!j) {
        if (a < b) out.push_back({Kind::NoJoin, a, b});
        tables_complete = false;
      } else {
        join[a * n + b] = *j;
      }
    }
  }
  if (!tables_complete || !out.empty()) return out;

  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        const Element lhs = meet[a * n + join[b * n + c]];
        const Element rhs = join[meet[a * n + b] * n + meet[a * n + c]];
        if (lhs != rhs) out.push_back({Kind::Distributivity, a, b, c});
      }
    }
  }
  return out;
}

FiniteLattice FiniteLattice::from_order(OrderSpec order) {
  const auto violations = validate_lattice(order);
  if (!violations.empty()) {
    std::string msg = "not a bounded distributive lattice:";
    const std::size_t shown = std::min<std::size_t>(violations.size(), 5);
    for (std::size_t i = 0; i < shown; ++i) {
      msg += " [" + violations[i].describe(order.labels) + "]";
    }
    if (violations.size() > shown) {
      msg += " (+" + std::to_string(violations.size() - shown) + " more)";
    }
    throw DomainError(msg);
  }
  const std::size_t n = order.size();
  FiniteLattice lattice;
  lattice.leq_.resize(n * n);
  lattice.meet_.resize(n * n);
  lattice.join_.resize(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      lattice.leq_[a * n + b] = order.leq[a][b] ? 1 : 0;
      lattice.meet_[a * n + b] = *glb(order, a, b);
      lattice.join_[a * n + b] = *lub(order, a, b);
    }
  }
  std::vector<Element> all(n);
  for (Element i = 0; i < n; ++i) all[i] = i;
  lattice.bottom_ = *least(order, all);
  lattice.top_ = *greatest(order, all);
  lattice.labels_ = std::move(order.labels);
  return lattice;
}

std::optional<Element> FiniteLattice::find(std::string_view label) const {
  for (Element e = 0; e < labels_.size(); ++e) {
    if (labels_[e] == label) return e;
  }
  return std::nullopt;
}

Element FiniteLattice::index_of(std::string_view label) const {
  if (auto e = find(label)) return *e;
  throw DomainError("unknown lattice element '" + std::string(label) + "'");
}

std::vector<Element> FiniteLattice::lower_covers(Element e) const {
  std::vector<Element> out;
  for (Element c = 0; c < size(); ++c) {
    if (!lt(c, e)) continue;
    bool cover = true;
    for (Element d = 0; d < size() && cover; ++d) {
      if (lt(c, d) && lt(d, e)) cover = false;
    }
    if (cover) out.push_back(c);
  }
  return out;
}

std::vector<Element> FiniteLattice::upper_covers(Element e) const {
  std::vector<Element> out;
  for (Element c = 0; c < size(); ++c) {
    if (!lt(e, c)) continue;
    bool cover = true;
    for (Element d = 0; d < size() && cover; ++d) {
      if (lt(e, d) && lt(d, c)) cover = false;
    }
    if (cover) out.push_back(c);
  }
  return out;
}

OrderSpec FiniteLattice::order() const {
  OrderSpec spec;
  spec.labels = labels_;
  spec.leq.assign(size(), std::vector<bool>(size(), false));
  for (Element a = 0; a < size(); ++a) {
    for (Element b = 0; b < size(); ++b) spec.leq[a][b] = leq(a, b);
  }
  return spec;
}

LatticePtr share(FiniteLattice lattice) {
  return std::make_shared<const FiniteLattice>(std::move(lattice));
}

FiniteLattice chain_lattice(std::vector<std::string> labels) {
  std::vector<std::pair<Element, Element>> pairs;
  for (Element i = 1; i < labels.size(); ++i) pairs.emplace_back(i - 1, i);
  return FiniteLattice::from_order(make_order(std::move(labels), pairs));
}

FiniteLattice chain_lattice(std::size_t count) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < count; ++i) labels.push_back(std::to_string(i));
  return chain_lattice(std::move(labels));
}

FiniteLattice boolean_lattice(std::size_t atoms) {
  if (atoms > 6) throw SizeError("boolean_lattice: at most 6 atoms");
  const std::size_t n = std::size_t{1} << atoms;
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < n; ++s) {
    std::string l = "{";
    bool first = true;
    for (std::size_t i = 0; i < atoms; ++i) {
      if (s & (std::size_t{1} << i)) {
        if (!first) l += ",";
        l += std::to_string(i);
        first = false;
      }
    }
    labels.push_back(l + "}");
  }
  std::vector<std::pair<Element, Element>> pairs;
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t i = 0; i < atoms; ++i) {
      const std::size_t bit = std::size_t{1} << i;
      if (!(s & bit)) pairs.emplace_back(s, s | bit);
    }
  }
  return FiniteLattice::from_order(make_order(std::move(labels), pairs));
}

FiniteLattice boolean4(const std::string& atom) {
  return FiniteLattice::from_order(
      make_order({"0", atom, "!" + atom, "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
}

FiniteLattice product_lattice(const FiniteLattice& left,
                              const FiniteLattice& right) {
  const std::size_t m = right.size();
  std::vector<std::string> labels;
  for (Element a = 0; a < left.size(); ++a) {
    for (Element b = 0; b < m; ++b) {
      labels.push_back("(" + left.label(a) + "," + right.label(b) + ")");
    }
  }
  std::vector<std::pair<Element, Element>> pairs;
  for (Element a = 0; a < left.size(); ++a) {
    for (Element b = 0; b < m; ++b) {
      for (Element c = 0; c < left.size(); ++c) {
        for (Element d = 0; d < m; ++d) {
          if (left.leq(a, c) && right.leq(b, d)) {
            pairs.emplace_back(a * m + b, c * m + d);
          }
        }
      }
    }
  }
  return FiniteLattice::from_order(make_order(std::move(labels), pairs));
}

LatticeHom identity_hom(const LatticePtr& lattice) {
  LatticeHom h{lattice, lattice, {}};
  for (Element e = 0; e < lattice->size(); ++e) h.map.push_back(e);
  return h;
}

LatticeHom compose(const LatticeHom& f, const LatticeHom& g) {
  if (f.target != g.source) {
    throw DomainError("compose: target of first map is not source of second");
  }
  LatticeHom h{f.source, g.target, {}};
  for (Element e = 0; e < f.source->size(); ++e) h.map.push_back(g(f(e)));
  return h;
}

std::optional<std::string> check_hom(const LatticeHom& h) {
  const FiniteLattice& s = *h.source;
  const FiniteLattice& t = *h.target;
  if (h.map.size() != s.size()) return "map size does not match source";
  for (Element e : h.map) {
    if (e >= t.size()) return "image out of range";
  }
  if (h(s.bottom()) != t.bottom()) return "bottom not preserved";
  if (h(s.top()) != t.top()) return "top not preserved";
  for (Element a = 0; a < s.size(); ++a) {
    for (Element b = 0; b < s.size(); ++b) {
      if (h(s.meet(a, b)) != t.meet(h(a), h(b))) {
        return "meet not preserved at " + s.label(a) + ", " + s.label(b);
      }
      if (h(s.join(a, b)) != t.join(h(a), h(b))) {
        return "join not preserved at " + s.label(a) + ", " + s.label(b);
      }
    }
  }
  return std::nullopt;
}

std::vector<Element> join_irreducibles(const FiniteLattice& lattice) {
  std::vector<Element> out;
  for (Element e = 0; e < lattice.size(); ++e) {
    if (e != lattice.bottom() && lattice.lower_covers(e).size() == 1) {
      out.push_back(e);
    }
  }
  return out;
}

std::vector<Element> meet_irreducibles(const FiniteLattice& lattice) {
  std::vector<Element> out;
  for (Element e = 0; e < lattice.size(); ++e) {
    if (e != lattice.top() && lattice.upper_covers(e).size() == 1) {
      out.push_back(e);
    }
  }
  return out;
}

Element kappa(const FiniteLattice& lattice, Element j) {
  const auto js = join_irreducibles(lattice);
  if (std::find(js.begin(), js.end(), j) == js.end()) {
    throw DomainError("kappa: '" + lattice.label(j) +
                      "' is not join-irreducible");
  }
  Element acc = lattice.bottom();
  for (Element a = 0; a < lattice.size(); ++a) {
    if (!lattice.leq(j, a)) acc = lattice.join(acc, a);
  }
  return acc;
}

Element kappa_inverse(const FiniteLattice& lattice, Element m) {
  for (Element j : join_irreducibles(lattice)) {
    if (kappa(lattice, j) == m) return j;
  }
  throw DomainError("kappa_inverse: '" + lattice.label(m) +
                    "' is not meet-irreducible");
}

bool PrimeFilter::contains(Element e) const {
  return std::binary_search(members.begin(), members.end(), e);
}

std::vector<PrimeFilter> prime_filters(const LatticePtr& lattice) {
  const FiniteLattice& l = *lattice;
  std::vector<PrimeFilter> out;
  for (Element g = 0; g < l.size(); ++g) {
    if (g == l.bottom()) continue;  // ↑0 is the whole lattice
    bool prime = true;
    for (Element x = 0; x < l.size() && prime; ++x) {
      for (Element y = 0; y < l.size() && prime; ++y) {
        if (l.leq(g, l.join(x, y)) && !l.leq(g, x) && !l.leq(g, y)) {
          prime = false;
        }
      }
    }
    if (!prime) continue;
    PrimeFilter f{lattice, {}, g};
    for (Element e = 0; e < l.size(); ++e) {
      if (l.leq(g, e)) f.members.push_back(e);
    }
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace glim
