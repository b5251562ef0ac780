// Copyright 2026 The glim Authors
// SPDX-License-Identifier: Apache-2.0

#include <map>

#include "glim/error.hpp"
#include "glim/lattice.hpp"
#include "text_util.hpp"

namespace glim {

OrderSpec parse_order(std::string_view text) {
  using detail::trim;
  std::vector<std::string> labels;
  std::map<std::string, Element, std::less<>> index;
  std::vector<std::pair<Element, Element>> pairs;
  bool have_elements = false;

  // Each entry keeps the raw line so that errors can carry a column.
  struct Pending {
    std::size_t line;
    std::string_view raw_line;
    std::string_view lhs;
    std::string_view rhs;
  };
  std::vector<Pending> pending;

  for (const auto& [number, line] : detail::logical_lines(text)) {
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("expected 'elements:' or 'order:'", number, 1);
    }
    const std::string_view key = trim(line.substr(0, colon));
    const std::string_view body = line.substr(colon + 1);
    if (key == "elements") {
      if (have_elements) {
        throw ParseError("duplicate 'elements:' line", number, 1);
      }
      have_elements = true;
      for (std::string_view item : detail::split_top_level(body, ',')) {
        const std::string_view label = trim(item);
        if (label.empty()) {
          throw ParseError("empty element label", number,
                           detail::column_of(line, item));
        }
        if (index.count(label)) {
          throw ParseError("duplicate element '" + std::string(label) + "'",
                           number, detail::column_of(line, label));
        }
        index.emplace(std::string(label), labels.size());
        labels.emplace_back(label);
      }
    } else if (key == "order") {
      if (trim(body).empty()) continue;
      for (std::string_view item : detail::split_top_level(body, ',')) {
        const auto le = item.find("<=");
        if (le == std::string_view::npos) {
          throw ParseError("expected 'a<=b'", number,
                           detail::column_of(line, item));
        }
        pending.push_back(
            {number, line, trim(item.substr(0, le)), trim(item.substr(le + 2))});
      }
    } else {
      throw ParseError("unknown key '" + std::string(key) + "'", number, 1);
    }
  }
  if (!have_elements) throw ParseError("missing 'elements:' line", 0, 0);
  for (const auto& p : pending) {
    for (std::string_view side : {p.lhs, p.rhs}) {
      if (!index.count(side)) {
        throw ParseError("unknown element '" + std::string(side) + "'", p.line,
                         detail::column_of(p.raw_line, side));
      }
    }
    pairs.emplace_back(index.find(p.lhs)->second, index.find(p.rhs)->second);
  }
  return make_order(std::move(labels), pairs);
}

FiniteLattice parse_lattice(std::string_view text) {
  return FiniteLattice::from_order(parse_order(text));
}

FiniteLattice load_lattice(const std::string& path) {
  return parse_lattice(detail::read_file(path));
}

std::string format_lattice(const FiniteLattice& lattice) {
  std::string out = "elements: ";
  for (Element e = 0; e < lattice.size(); ++e) {
    if (e) out += ", ";
    out += lattice.label(e);
  }
  out += "\norder: ";
  bool first = true;
  for (Element e = 0; e < lattice.size(); ++e) {
    for (Element c : lattice.upper_covers(e)) {
      if (!first) out += ", ";
      out += lattice.label(e) + "<=" + lattice.label(c);
      first = false;
    }
  }
  return out + "\n";
}

}  // namespace glim
