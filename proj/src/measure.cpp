// Copyright 2026 The glim Authors
// SPDX-License-Identifier: Apache-2.0

#include "glim/measure.hpp"

#include <algorithm>
#include <map>

#include "glim/error.hpp"

namespace glim {

const char* kind_name(MeasureViolation::Kind kind) {
  using K = MeasureViolation::Kind;
  switch (kind) {
    case K::Size: return "size";
    case K::Range: return "range";
    case K::Monotone: return "monotone";
    case K::Bottom: return "bottom";
    case K::Top: return "top";
    case K::AdditivityLeft: return "additivity-left";
    case K::AdditivityRight: return "additivity-right";
    case K::Additivity: return "additivity";
  }
  return "unknown";
}

std::string MeasureViolation::describe(const FiniteLattice& lattice) const {
  using K = MeasureViolation::Kind;
  const std::string name = kind_name(kind);
  switch (kind) {
    case K::Size:
    case K::Bottom:
    case K::Top:
      return name;
    case K::Range:
      return name + " a=" + lattice.label(a);
    default:
      return name + " a=" + lattice.label(a) + " b=" + lattice.label(b);
  }
}

namespace {

bool left_fails(const Measure& mu, Element a, Element b) {
  const auto& L = *mu.lattice;
  const GammaValue& ma = mu(a);
  const GammaValue& mab = mu(L.meet(a, b));
  const GammaValue& mjb = mu(L.join(a, b));
  const GammaValue& mb = mu(b);
  if (mab > ma || mb > mjb) return false;  // outside the domain
  return miss(ma, mab) > mip(mjb, mb);
}

bool right_fails(const Measure& mu, Element a, Element b) {
  const auto& L = *mu.lattice;
  const GammaValue& ma = mu(a);
  const GammaValue& mab = mu(L.meet(a, b));
  const GammaValue& mjb = mu(L.join(a, b));
  const GammaValue& mb = mu(b);
  if (mab > ma || mb > mjb) return false;
  return mip(ma, mab) < miss(mjb, mb);
}

}  // namespace

std::vector<MeasureViolation> validate_measure(const Measure& mu) {
  using K = MeasureViolation::Kind;
  if (!mu.lattice) throw DomainError("measure has no lattice");
  const auto& L = *mu.lattice;
  std::vector<MeasureViolation> out;
  if (mu.values.size() != L.size()) {
    out.push_back({K::Size});
    return out;
  }
  if (mu(L.bottom()) != GammaValue::zero()) out.push_back({K::Bottom});
  if (mu(L.top()) != GammaValue::one()) out.push_back({K::Top});
  for (Element a = 0; a < L.size(); ++a) {
    for (Element b = 0; b < L.size(); ++b) {
      if (L.leq(a, b) && mu(a) > mu(b)) out.push_back({K::Monotone, a, b});
      if (left_fails(mu, a, b)) out.push_back({K::AdditivityLeft, a, b});
      if (right_fails(mu, a, b)) out.push_back({K::AdditivityRight, a, b});
    }
  }
  return out;
}

bool is_measure(const Measure& mu) { return validate_measure(mu).empty(); }

bool reproduces(const Measure& mu, const MeasureViolation& v) {
  using K = MeasureViolation::Kind;
  const auto& L = *mu.lattice;
  switch (v.kind) {
    case K::Size:
      return mu.values.size() != L.size();
    case K::Bottom:
      return mu(L.bottom()) != GammaValue::zero();
    case K::Top:
      return mu(L.top()) != GammaValue::one();
    case K::Monotone:
      return L.leq(v.a, v.b) && mu(v.a) > mu(v.b);
    case K::AdditivityLeft:
      return left_fails(mu, v.a, v.b);
    case K::AdditivityRight:
      return right_fails(mu, v.a, v.b);
    default:
      return false;
  }
}

std::vector<MeasureViolation> validate_classical(const ClassicalMeasure& m) {
  using K = MeasureViolation::Kind;
  if (!m.lattice) throw DomainError("measure has no lattice");
  const auto& L = *m.lattice;
  std::vector<MeasureViolation> out;
  if (m.values.size() != L.size()) {
    out.push_back({K::Size});
    return out;
  }
  if (m(L.bottom()) != Rational(0)) out.push_back({K::Bottom});
  if (m(L.top()) != Rational(1)) out.push_back({K::Top});
  for (Element a = 0; a < L.size(); ++a) {
    if (m(a) < Rational(0) || m(a) > Rational(1)) out.push_back({K::Range, a});
  }
  for (Element a = 0; a < L.size(); ++a) {
    for (Element b = 0; b < L.size(); ++b) {
      if (L.leq(a, b) && m(a) > m(b)) out.push_back({K::Monotone, a, b});
      if (m(a) + m(b) != m(L.join(a, b)) + m(L.meet(a, b))) {
        out.push_back({K::Additivity, a, b});
      }
    }
  }
  return out;
}

bool same_lattice(const LatticePtr& a, const LatticePtr& b) {
  if (a == b) return true;
  if (!a || !b || a->size() != b->size() || a->labels() != b->labels()) {
    return false;
  }
  for (Element x = 0; x < a->size(); ++x) {
    for (Element y = 0; y < a->size(); ++y) {
      if (a->leq(x, y) != b->leq(x, y)) return false;
    }
  }
  return true;
}

namespace {

[[noreturn]] void fail_internal(const char* what, const FiniteLattice& L,
                                const std::vector<MeasureViolation>& v) {
  throw InternalError(std::string(what) + " is not a measure: " +
                      v.front().describe(L));
}

}  // namespace

Measure pushforward(const Measure& mu, const LatticeHom& h) {
  if (!same_lattice(mu.lattice, h.target)) {
    throw DomainError("measure does not live on the homomorphism's target");
  }
  if (auto bad = check_hom(h)) {
    throw DomainError("not a lattice homomorphism: " + *bad);
  }
  Measure out{h.source, {}};
  out.values.reserve(h.source->size());
  for (Element e = 0; e < h.source->size(); ++e) out.values.push_back(mu(h(e)));
  if (auto v = validate_measure(out); !v.empty()) {
    fail_internal("pushforward", *out.lattice, v);
  }
  return out;
}

ClassicalMeasure collapse_measure(const Measure& mu) {
  ClassicalMeasure m{mu.lattice, {}};
  m.values.reserve(mu.values.size());
  for (const auto& x : mu.values) m.values.push_back(gamma_collapse(x));
  if (auto v = validate_classical(m); !v.empty()) {
    fail_internal("collapse", *m.lattice, v);
  }
  return m;
}

Measure lift_measure(const ClassicalMeasure& m) {
  if (auto v = validate_classical(m); !v.empty()) {
    throw DomainError("not a classical measure: " + v.front().describe(*m.lattice));
  }
  Measure mu{m.lattice, {}};
  mu.values.reserve(m.values.size());
  for (const auto& r : m.values) mu.values.push_back(iota_exact(r));
  if (auto v = validate_measure(mu); !v.empty()) {
    fail_internal("lift", *mu.lattice, v);
  }
  return mu;
}

FinSuppFn::FinSuppFn(std::vector<GammaValue> weights)
    : weights_(std::move(weights)) {
  if (sum(weights_) != GammaValue::one()) {
    throw DomainError("weights of a finitely supported function must sum to 1^o");
  }
}

std::vector<std::size_t> FinSuppFn::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] != GammaValue::zero()) out.push_back(i);
  }
  return out;
}

GammaValue integrate(const FinSuppFn& f, const std::vector<bool>& subset) {
  if (subset.size() != f.carrier_size()) {
    throw DomainError("subset has " + std::to_string(subset.size()) +
                      " entries, carrier has " +
                      std::to_string(f.carrier_size()));
  }
  GammaValue total;
  for (std::size_t i : f.support()) {
    if (subset[i]) total = plus(total, f.weights()[i]);
  }
  return total;
}

namespace {

std::string subset_label(const std::vector<bool>& s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!s[i]) continue;
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

}  // namespace

SubsetAlgebra make_subset_algebra(std::size_t carrier,
                                  std::vector<std::vector<bool>> subsets) {
  const std::size_t n = subsets.size();
  for (const auto& s : subsets) {
    if (s.size() != carrier) throw DomainError("subset has the wrong length");
  }
  std::map<std::vector<bool>, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (!index.emplace(subsets[i], i).second) {
      throw DomainError("subsets are not distinct");
    }
  }
  auto find = [&](const std::vector<bool>& s) -> std::optional<std::size_t> {
    const auto it = index.find(s);
    if (it == index.end()) return std::nullopt;
    return it->second;
  };
  if (!find(std::vector<bool>(carrier, false))) {
    throw DomainError("subset algebra must contain the empty set");
  }
  if (!find(std::vector<bool>(carrier, true))) {
    throw DomainError("subset algebra must contain the whole carrier");
  }
  std::vector<std::string> labels;
  std::vector<std::pair<Element, Element>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(subset_label(subsets[i]));
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<bool> meet(carrier);
      std::vector<bool> join(carrier);
      bool sub = true;
      for (std::size_t x = 0; x < carrier; ++x) {
        meet[x] = subsets[i][x] && subsets[j][x];
        join[x] = subsets[i][x] || subsets[j][x];
        if (subsets[i][x] && !subsets[j][x]) sub = false;
      }
      if (!find(meet) || !find(join)) {
        throw DomainError("subsets are not closed under intersection and union");
      }
      if (sub) pairs.emplace_back(i, j);
    }
  }
  SubsetAlgebra out;
  out.carrier = carrier;
  out.lattice =
      share(FiniteLattice::from_order(make_order(std::move(labels), pairs)));
  out.subsets = std::move(subsets);
  return out;
}

SubsetAlgebra powerset_algebra(std::size_t carrier) {
  if (carrier > 8) throw SizeError("powerset carrier is limited to 8 points");
  std::vector<std::vector<bool>> subsets;
  for (std::size_t mask = 0; mask < (std::size_t{1} << carrier); ++mask) {
    std::vector<bool> s(carrier);
    for (std::size_t x = 0; x < carrier; ++x) s[x] = (mask >> x) & 1;
    subsets.push_back(std::move(s));
  }
  return make_subset_algebra(carrier, std::move(subsets));
}

Measure integration_measure(const FinSuppFn& f, const SubsetAlgebra& algebra) {
  if (f.carrier_size() != algebra.carrier) {
    throw DomainError("function and algebra have different carriers");
  }
  Measure mu{algebra.lattice, {}};
  mu.values.reserve(algebra.subsets.size());
  for (const auto& s : algebra.subsets) mu.values.push_back(integrate(f, s));
  if (auto v = validate_measure(mu); !v.empty()) {
    fail_internal("integration measure", *mu.lattice, v);
  }
  return mu;
}

}  // namespace glim
