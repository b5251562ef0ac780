// Copyright 2026 The glim Authors
// SPDX-License-Identifier: Apache-2.0

#include <filesystem>

#include "glim/error.hpp"
#include "glim/measure.hpp"
#include "text_util.hpp"

namespace glim {

namespace {

struct RawMeasure {
  std::string lattice_path;
  std::size_t lattice_line = 0;
  struct Entry {
    std::size_t line;
    std::size_t label_col;
    std::string label;
    GammaValue value;
  };
  std::vector<Entry> entries;
};

RawMeasure parse_raw(std::string_view text) {
  using detail::column_of;
  using detail::trim;
  RawMeasure raw;
  for (const auto& [number, line] : detail::logical_lines(text)) {
    if (line.starts_with("value")) {
      const auto open = line.find('(');
      const auto close = open == std::string_view::npos
                             ? std::string_view::npos
                             : detail::matching_close(line, open);
      if (open == std::string_view::npos || close == std::string_view::npos ||
          !trim(line.substr(5, open - 5)).empty()) {
        throw ParseError("expected 'value(label) = x'", number, 1);
      }
      const std::string_view label = trim(line.substr(open + 1, close - open - 1));
      const std::string_view rest = line.substr(close + 1);
      const auto eq = rest.find('=');
      if (eq == std::string_view::npos || !trim(rest.substr(0, eq)).empty()) {
        throw ParseError("expected '=' after 'value(...)'", number,
                         column_of(line, rest));
      }
      const std::string_view value_text = rest.substr(eq + 1);
      GammaValue v;
      try {
        v = parse_gamma(value_text);
      } catch (const ParseError& e) {
        throw ParseError(e.message(), number,
                         column_of(line, value_text) + e.column() - 1);
      }
      raw.entries.push_back({number, column_of(line, label), std::string(label), v});
      continue;
    }
    const auto colon = line.find(':');
    if (colon != std::string_view::npos && trim(line.substr(0, colon)) == "lattice") {
      if (raw.lattice_line) throw ParseError("duplicate 'lattice:' line", number, 1);
      const std::string_view path = trim(line.substr(colon + 1));
      if (path.empty()) {
        throw ParseError("empty lattice path", number, colon + 2);
      }
      raw.lattice_path = std::string(path);
      raw.lattice_line = number;
      continue;
    }
    throw ParseError("expected 'lattice: PATH' or 'value(label) = x'", number, 1);
  }
  if (!raw.lattice_line) throw ParseError("missing 'lattice:' line", 0, 0);
  return raw;
}

MeasureFile resolve(RawMeasure raw, const LatticePtr& lattice) {
  const auto& L = *lattice;
  std::vector<std::optional<GammaValue>> values(L.size());
  for (const auto& e : raw.entries) {
    const auto idx = L.find(e.label);
    if (!idx) {
      throw ParseError("unknown element '" + e.label + "'", e.line, e.label_col);
    }
    if (values[*idx]) {
      throw ParseError("element '" + e.label + "' given twice", e.line,
                       e.label_col);
    }
    values[*idx] = e.value;
  }
  MeasureFile out{std::move(raw.lattice_path), Measure{lattice, {}}};
  for (Element x = 0; x < L.size(); ++x) {
    if (!values[x]) {
      throw ParseError("no value for element '" + L.label(x) + "'", 0, 0);
    }
    out.measure.values.push_back(*values[x]);
  }
  return out;
}

}  // namespace

MeasureFile parse_measure(std::string_view text, const LatticePtr& lattice) {
  return resolve(parse_raw(text), lattice);
}

MeasureFile load_measure(const std::string& path) {
  RawMeasure raw = parse_raw(detail::read_file(path));
  std::filesystem::path lat(raw.lattice_path);
  if (lat.is_relative()) lat = std::filesystem::path(path).parent_path() / lat;
  LatticePtr lattice = share(load_lattice(lat.string()));
  return resolve(std::move(raw), lattice);
}

std::string format_measure(const Measure& mu, const std::string& lattice_path) {
  std::string out = "lattice: " + lattice_path + "\n";
  for (Element e = 0; e < mu.lattice->size(); ++e) {
    out += "value(" + mu.lattice->label(e) + ") = " + format_gamma(mu(e)) + "\n";
  }
  return out;
}

}  // namespace glim
