// Copyright 2026 The glim Authors
// SPDX-License-Identifier: Apache-2.0

#include "glim/duality.hpp"

#include "glim/error.hpp"

namespace glim {

ChainElement ChainElement::fraction(std::size_t n, std::size_t a) {
  if (n == 0) throw DomainError("chain index must be positive");
  if (a > n) {
    throw DomainError(std::to_string(a) + "/" + std::to_string(n) +
                      " is not in the chain");
  }
  return {n, a, false};
}

ChainElement ChainElement::top_of(std::size_t n) {
  if (n == 0) throw DomainError("chain index must be positive");
  return {n, 0, true};
}

std::string ChainElement::str() const {
  if (top) return "top";
  return std::to_string(a) + "/" + std::to_string(n);
}

namespace {

void same_chain(const ChainElement& u, const ChainElement& v) {
  if (u.n != v.n) {
    throw DomainError("elements of L_" + std::to_string(u.n) + " and L_" +
                      std::to_string(v.n) + " do not combine");
  }
}

ChainElement from_rank(std::size_t n, std::size_t rank) {
  return rank == n + 1 ? ChainElement::top_of(n) : ChainElement::fraction(n, rank);
}

}  // namespace

bool chain_leq(const ChainElement& u, const ChainElement& v) {
  same_chain(u, v);
  return u.rank() <= v.rank();
}

std::vector<ChainElement> chain_elements(std::size_t n) {
  std::vector<ChainElement> out;
  for (std::size_t i = 0; i <= n; ++i) out.push_back(ChainElement::fraction(n, i));
  out.push_back(ChainElement::top_of(n));
  return out;
}

ChainElement oplus(const ChainElement& u, const ChainElement& v) {
  same_chain(u, v);
  if (u.top || v.top || u.a + v.a > u.n) return ChainElement::top_of(u.n);
  return ChainElement::fraction(u.n, u.a + v.a);
}

ChainElement ominus(const ChainElement& u, const ChainElement& v) {
  same_chain(u, v);
  const std::size_t n = u.n;
  if (v.top) return ChainElement::fraction(n, 0);
  if (u.top) {
    if (v.a == 0) return ChainElement::top_of(n);
    return ChainElement::fraction(n, n - v.a + 1);
  }
  if (v.a > u.a) return ChainElement::fraction(n, 0);
  return ChainElement::fraction(n, u.a - v.a);
}

FiniteLattice chain_as_lattice(std::size_t n) {
  std::vector<std::string> labels;
  for (const auto& e : chain_elements(n)) labels.push_back(e.str());
  return chain_lattice(std::move(labels));
}

CheckResult check_adjunction(std::size_t n) {
  CheckResult r;
  const auto els = chain_elements(n);
  for (const auto& u : els) {
    for (const auto& v : els) {
      for (const auto& w : els) {
        ++r.checked;
        const bool lhs = chain_leq(ominus(u, v), w);
        const bool rhs = chain_leq(u, oplus(v, w));
        if (lhs != rhs && !r.violation) {
          r.violation = "n=" + std::to_string(n) + " u=" + u.str() +
                        " v=" + v.str() + " w=" + w.str();
        }
      }
    }
  }
  return r;
}

ChainElement embed(std::size_t m, const ChainElement& u) {
  if (m == 0) throw DomainError("embedding factor must be positive");
  if (u.top) return ChainElement::top_of(u.n * m);
  return ChainElement::fraction(u.n * m, u.a * m);
}

CheckResult check_oplus_preserved(std::size_t n, std::size_t m) {
  CheckResult r;
  const auto els = chain_elements(n);
  for (const auto& u : els) {
    for (const auto& v : els) {
      ++r.checked;
      const bool order = chain_leq(u, v) == chain_leq(embed(m, u), embed(m, v));
      const bool sum = embed(m, oplus(u, v)) == oplus(embed(m, u), embed(m, v));
      if ((!order || !sum) && !r.violation) {
        r.violation = "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                      " u=" + u.str() + " v=" + v.str() +
                      (order ? "" : " (order)") + (sum ? "" : " (oplus)");
      }
    }
  }
  return r;
}

OminusWitness find_ominus_counterexample(std::size_t n, std::size_t m) {
  if (m < 2) throw DomainError("a counterexample needs m >= 2");
  const auto els = chain_elements(n);
  for (const auto& u : els) {
    for (const auto& v : els) {
      const ChainElement lhs = embed(m, ominus(u, v));
      const ChainElement rhs = ominus(embed(m, u), embed(m, v));
      if (lhs != rhs) return {n, m, u, v, lhs, rhs};
    }
  }
  throw InternalError("embedding L_" + std::to_string(n) + " -> L_" +
                      std::to_string(n * m) + " preserves ominus");
}

std::string ChainPoint::str() const {
  return std::to_string(a) + "/" + std::to_string(n);
}

namespace {

void check_point(const ChainPoint& x, std::size_t n) {
  if (x.n != n || x.a > n) {
    throw DomainError(x.str() + " is not a point of the chain of index " +
                      std::to_string(n));
  }
}

}  // namespace

ChainPoint floor_map(std::size_t n, std::size_t m, const ChainPoint& x) {
  check_point(x, n * m);
  return {n, x.a / m};
}

ChainPoint ceiling_map(std::size_t n, std::size_t m, const ChainPoint& x) {
  check_point(x, n * m);
  return {n, (x.a + m - 1) / m};
}

ChainPoint inclusion_map(std::size_t m, const ChainPoint& y) {
  check_point(y, y.n);
  return {y.n * m, y.a * m};
}

CheckResult check_floor_ceiling(std::size_t n, std::size_t m) {
  CheckResult r;
  for (std::size_t b = 0; b <= n * m; ++b) {
    const ChainPoint x{n * m, b};
    for (std::size_t a = 0; a <= n; ++a) {
      const ChainPoint y{n, a};
      const std::size_t ey = inclusion_map(m, y).a;
      ++r.checked;
      const bool left = (ceiling_map(n, m, x).a <= a) == (b <= ey);
      const bool right = (ey <= b) == (a <= floor_map(n, m, x).a);
      if ((!left || !right) && !r.violation) {
        r.violation = "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                      " x=" + x.str() + " y=" + y.str();
      }
    }
  }
  return r;
}

PartialTable derive_partial_minus(std::size_t n) {
  const FiniteLattice L = chain_as_lattice(n);
  PartialTable t{n, std::vector<std::vector<std::optional<std::size_t>>>(
                        n + 1, std::vector<std::optional<std::size_t>>(n + 1))};
  for (std::size_t z = 0; z <= n; ++z) {
    const Element kz = kappa_inverse(L, z);
    for (std::size_t x = 0; x <= n; ++x) {
      const ChainElement d =
          ominus(from_rank(n, kz), ChainElement::fraction(n, x));
      if (d.rank() != 0) {
        const Element k = kappa(L, d.rank());
        if (k > n) throw InternalError("kappa left the meet-irreducibles");
        t.cells[z][x] = k;
      }
      const std::optional<std::size_t> direct =
          x <= z ? std::optional<std::size_t>(z - x) : std::nullopt;
      if (t.cells[z][x] != direct) {
        throw InternalError("derived minus differs from subtraction at n=" +
                            std::to_string(n) + " cell " + std::to_string(z) +
                            "," + std::to_string(x));
      }
    }
  }
  return t;
}

PartialTable derive_partial_plus(std::size_t n) {
  PartialTable t{n, std::vector<std::vector<std::optional<std::size_t>>>(
                        n + 1, std::vector<std::optional<std::size_t>>(n + 1))};
  for (std::size_t x = 0; x <= n; ++x) {
    for (std::size_t z = 0; z <= n; ++z) {
      const ChainElement s =
          oplus(ChainElement::fraction(n, x), ChainElement::fraction(n, z));
      if (!s.top) t.cells[x][z] = s.a;
      const std::optional<std::size_t> direct =
          x + z <= n ? std::optional<std::size_t>(x + z) : std::nullopt;
      if (t.cells[x][z] != direct) {
        throw InternalError("derived plus differs from addition at n=" +
                            std::to_string(n) + " cell " + std::to_string(x) +
                            "," + std::to_string(z));
      }
    }
  }
  return t;
}

CheckResult check_ominus_from_plus(std::size_t n) {
  const FiniteLattice L = chain_as_lattice(n);
  const PartialTable plus_table = derive_partial_plus(n);
  CheckResult r;
  for (const auto& u : chain_elements(n)) {
    for (const auto& v : chain_elements(n)) {
      ++r.checked;
      Element best = L.bottom();
      for (Element j = 1; j <= n + 1; ++j) {
        const Element kj = kappa(L, j);
        bool witness = false;
        for (std::size_t x = u.rank(); x <= n && !witness; ++x) {
          const auto s = plus_table.cells[x][kj];
          witness = s && kappa_inverse(L, *s) <= v.rank();
        }
        if (witness) best = L.join(best, j);
      }
      if (from_rank(n, best) != ominus(v, u) && !r.violation) {
        r.violation = "n=" + std::to_string(n) + " u=" + u.str() +
                      " v=" + v.str();
      }
    }
  }
  return r;
}

ChainPoint project_gamma(const GammaValue& x, std::size_t n) {
  if (n == 0) throw DomainError("chain index must be positive");
  const Rational scaled = x.value() * Rational(static_cast<std::int64_t>(n));
  const std::int64_t a =
      x.is_exact() ? floor_to_int(scaled) : ceil_to_int(scaled) - 1;
  return {n, static_cast<std::size_t>(a)};
}

CheckResult check_projection_cone(int k, std::size_t max_n, std::size_t max_m) {
  CheckResult r;
  const auto grid = gamma_grid(k).points;
  auto fail = [&](const std::string& what) {
    if (!r.violation) r.violation = what;
  };
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const GammaValue& x = grid[i];
      const ChainPoint p = project_gamma(x, n);
      for (std::size_t m = 1; m <= max_m; ++m) {
        ++r.checked;
        if (floor_map(n, m, project_gamma(x, n * m)) != p) {
          fail("cone n=" + std::to_string(n) + " m=" + std::to_string(m) +
               " x=" + format_gamma(x));
        }
      }
      ++r.checked;
      if (GammaValue::exact(Rational(static_cast<std::int64_t>(p.a),
                                     static_cast<std::int64_t>(n))) > x) {
        fail("projection above x=" + format_gamma(x) + " at n=" + std::to_string(n));
      }
      if (i + 1 < grid.size() && project_gamma(grid[i + 1], n).a < p.a) {
        fail("not monotone at x=" + format_gamma(x) + " n=" + std::to_string(n));
      }
    }
    for (std::size_t a = 0; a <= n; ++a) {
      ++r.checked;
      const GammaValue x = GammaValue::exact(
          Rational(static_cast<std::int64_t>(a), static_cast<std::int64_t>(n)));
      if (project_gamma(x, n).a != a) {
        fail("projection moves " + format_gamma(x) + " at n=" + std::to_string(n));
      }
    }
  }
  return r;
}

bool DualityReport::all_pass() const {
  for (const auto& l : lines) {
    if (l.failure) return false;
  }
  return witness.has_value();
}

namespace {

DualityLine make_line(std::string name, std::string scope) {
  DualityLine line;
  line.name = std::move(name);
  line.scope = std::move(scope);
  return line;
}

}  // namespace

DualityReport run_duality_suite(const DualityBounds& b) {
  DualityReport report;
  auto nm = [](std::size_t n, std::size_t m) {
    return "n<=" + std::to_string(n) + " m<=" + std::to_string(m);
  };
  auto collect = [](DualityLine& line, const CheckResult& r) {
    line.checked += r.checked;
    if (r.violation && !line.failure) line.failure = r.violation;
  };

  DualityLine adj = make_line("oplus-ominus-adjunction", "n<=" + std::to_string(b.adjunction_n));
  for (std::size_t n = 1; n <= b.adjunction_n; ++n) collect(adj, check_adjunction(n));
  report.lines.push_back(adj);

  DualityLine pres = make_line("embedding-preserves-oplus", nm(b.oplus_n, b.oplus_m));
  for (std::size_t n = 1; n <= b.oplus_n; ++n) {
    for (std::size_t m = 1; m <= b.oplus_m; ++m) {
      collect(pres, check_oplus_preserved(n, m));
    }
  }
  report.lines.push_back(pres);

  DualityLine cex = make_line("ominus-counterexample",
                  "n<=" + std::to_string(b.ominus_n) + " m=2.." +
                      std::to_string(b.ominus_m));
  for (std::size_t n = 1; n <= b.ominus_n; ++n) {
    for (std::size_t m = 2; m <= b.ominus_m; ++m) {
      ++cex.checked;
      try {
        OminusWitness w = find_ominus_counterexample(n, m);
        if (!report.witness || (n == 2 && m == 2)) report.witness = w;
      } catch (const InternalError& e) {
        if (!cex.failure) cex.failure = e.what();
      }
    }
  }
  report.lines.push_back(cex);

  DualityLine minus = make_line("derived-partial-minus", "n<=" + std::to_string(b.derived_n));
  DualityLine plus = make_line("derived-partial-plus", "n<=" + std::to_string(b.derived_n));
  DualityLine recover = make_line("ominus-from-plus", "n<=" + std::to_string(b.derived_n));
  for (std::size_t n = 1; n <= b.derived_n; ++n) {
    try {
      minus.checked += (n + 1) * (n + 1);
      derive_partial_minus(n);
    } catch (const InternalError& e) {
      if (!minus.failure) minus.failure = e.what();
    }
    try {
      plus.checked += (n + 1) * (n + 1);
      derive_partial_plus(n);
    } catch (const InternalError& e) {
      if (!plus.failure) plus.failure = e.what();
    }
    collect(recover, check_ominus_from_plus(n));
  }
  report.lines.push_back(minus);
  report.lines.push_back(plus);
  report.lines.push_back(recover);

  DualityLine fc = make_line("floor-ceiling-adjunction", nm(b.floor_n, b.floor_m));
  for (std::size_t n = 1; n <= b.floor_n; ++n) {
    for (std::size_t m = 1; m <= b.floor_m; ++m) {
      collect(fc, check_floor_ceiling(n, m));
    }
  }
  report.lines.push_back(fc);

  DualityLine cone = make_line("projection-cone",
                   "grid=" + std::to_string(b.cone_k) + " " + nm(b.cone_n, b.cone_m));
  collect(cone, check_projection_cone(b.cone_k, b.cone_n, b.cone_m));
  report.lines.push_back(cone);
  return report;
}

std::string format_duality_report(const DualityReport& report) {
  std::string out;
  for (const auto& l : report.lines) {
    if (l.failure) {
      out += "FAIL " + l.name + " " + l.scope + ": " + *l.failure + "\n";
    } else {
      out += "PASS " + l.name + " " + l.scope +
             " checked=" + std::to_string(l.checked) + "\n";
    }
  }
  if (const auto& w = report.witness) {
    out += "WITNESS n=" + std::to_string(w->n) + " m=" + std::to_string(w->m) +
           " u=" + w->u.str() + " v=" + w->v.str() +
           " i(u-v)=" + w->embedded_result.str() +
           " i(u)-i(v)=" + w->result_of_embedded.str() + "\n";
  }
  return out;
}

}  // namespace glim
