#include "monogenica/serialization.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace monogenica {

using nlohmann::json;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

RegionDocument region_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad region JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("region JSON must be an object");

  const std::string kind = doc.value("kind", "");
  const int n = doc.value("n", 0);
  std::vector<double> center = doc.value("center", std::vector<double>{});
  if (center.empty() && n > 0) center.assign(static_cast<std::size_t>(n), 0.0);

  RegionDocument out;
  if (kind == "ball") {
    if (!doc.contains("radius")) throw std::invalid_argument("ball region needs a radius");
    out.region = make_ball(n, std::move(center), doc["radius"].get<double>());
  } else if (kind == "box") {
    if (!doc.contains("half_widths")) {
      throw std::invalid_argument("box region needs half_widths");
    }
    out.region = make_box(n, std::move(center),
                          doc["half_widths"].get<std::vector<double>>());
  } else {
    throw std::invalid_argument("region kind must be \"ball\" or \"box\"");
  }

  if (doc.contains("resolution")) {
    const json& res = doc["resolution"];
    if (res.is_object() && res.contains("nodes")) {
      out.node_budget = res["nodes"].get<int>();
    } else if (res.is_number_integer()) {
      out.node_budget = res.get<int>();
    } else {
      throw std::invalid_argument("resolution must be {\"nodes\": count}");
    }
  }
  return out;
}

std::string region_to_json(const RegionSpec& region, std::optional<int> node_budget) {
  region.validate();
  json doc;
  doc["kind"] = region.kind == RegionKind::ball ? "ball" : "box";
  doc["n"] = region.n;
  doc["center"] = region.center;
  if (region.kind == RegionKind::ball) {
    doc["radius"] = region.radius;
  } else {
    doc["half_widths"] = region.half_widths;
  }
  if (node_budget) doc["resolution"] = json{{"nodes", *node_budget}};
  return doc.dump();
}

std::string coefficients_to_json(int n, const CoefficientMap& coeffs) {
  json entries = json::array();
  for (const auto& [mi, value] : coeffs) {
    if (mi.dim() != n) throw std::invalid_argument("coefficient dimensions disagree");
    json entry;
    entry["mi"] = mi.ks;
    entry["coeff"] = std::vector<double>(value.coeffs().begin(), value.coeffs().end());
    entries.push_back(std::move(entry));
  }
  json doc;
  doc["n"] = n;
  doc["entries"] = std::move(entries);
  return doc.dump();
}

CoefficientMap coefficients_from_json(const std::string& text, int* n_out) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad coefficient JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("entries")) {
    throw std::invalid_argument("coefficient JSON needs n and entries");
  }
  const int n = doc["n"].get<int>();
  const Signature sig = euclidean(n);
  CoefficientMap out;
  for (const json& entry : doc["entries"]) {
    MultiIndex mi{entry.at("mi").get<std::vector<int>>()};
    if (mi.dim() != n) throw std::invalid_argument("entry multi-index has wrong length");
    std::vector<double> coeff = entry.at("coeff").get<std::vector<double>>();
    if (coeff.size() != sig.coeff_count()) {
      throw std::invalid_argument("entry coefficient array must have 2^n reals");
    }
    out.emplace(std::move(mi), Multivector(sig, std::move(coeff)));
  }
  if (n_out) *n_out = n;
  return out;
}

std::string character_table_to_json(const CharacterTable& table) {
  const auto dump = [&table](const std::vector<double>& cells) {
    json rows = json::array();
    for (int i = 1; i <= table.n; ++i) {
      json row = json::array();
      for (int j = 1; j <= table.n; ++j) {
        if (i == j) {
          row.push_back(nullptr);
        } else {
          row.push_back(cells[static_cast<std::size_t>((i - 1) * table.n + (j - 1))]);
        }
      }
      rows.push_back(std::move(row));
    }
    return rows;
  };
  json doc;
  doc["n"] = table.n;
  doc["alpha"] = dump(table.alpha);
  doc["beta"] = dump(table.beta);
  return doc.dump();
}

CharacterTable character_table_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad character table JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n")) {
    throw std::invalid_argument("character table JSON needs n");
  }
  CharacterTable table = make_character_table(doc["n"].get<int>());
  const auto load = [&table, &doc](const char* key, std::vector<double>& cells) {
    if (!doc.contains(key)) throw std::invalid_argument("character table JSON incomplete");
    const json& rows = doc[key];
    if (!rows.is_array() || static_cast<int>(rows.size()) != table.n) {
      throw std::invalid_argument("character table rows have the wrong shape");
    }
    for (int i = 0; i < table.n; ++i) {
      const json& row = rows[static_cast<std::size_t>(i)];
      if (!row.is_array() || static_cast<int>(row.size()) != table.n) {
        throw std::invalid_argument("character table rows have the wrong shape");
      }
      for (int j = 0; j < table.n; ++j) {
        const json& cell = row[static_cast<std::size_t>(j)];
        if (i == j) continue;  // diagonal stays unused whatever the file says
        if (!cell.is_number()) {
          throw std::invalid_argument("off-diagonal table entries must be numbers");
        }
        cells[static_cast<std::size_t>(i * table.n + j)] = cell.get<double>();
      }
    }
  };
  load("alpha", table.alpha);
  load("beta", table.beta);
  return table;
}

void write_trace_csv(std::ostream& out, const TraceSamples& trace) {
  const BoundaryQuadrature& quad = trace.quadrature;
  const int n = quad.region.n;
  const std::size_t coeff_count = euclidean(n).coeff_count();

  out << "index";
  for (int i = 1; i <= n; ++i) out << ",x" << i;
  for (int i = 1; i <= n; ++i) out << ",nu" << i;
  out << ",weight";
  for (std::size_t c = 0; c < coeff_count; ++c) out << ",c" << c;
  out << "\n";

  for (std::size_t k = 0; k < quad.size(); ++k) {
    out << k;
    for (double v : quad.nodes[k]) out << "," << format_double(v);
    for (double v : quad.normals[k]) out << "," << format_double(v);
    out << "," << format_double(quad.weights[k]);
    for (double v : trace.values[k].coeffs()) out << "," << format_double(v);
    out << "\n";
  }
}

TraceSamples read_trace_csv(std::istream& in, const RegionSpec& region) {
  region.validate();
  const int n = region.n;
  const Signature sig = euclidean(n);
  const std::size_t coeff_count = sig.coeff_count();
  const std::size_t expected = 1 + 2 * static_cast<std::size_t>(n) + 1 + coeff_count;

  TraceSamples trace;
  trace.quadrature.region = region;

  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (!header_seen) {
      header_seen = true;  // skip the column header
      continue;
    }
    std::vector<double> cells;
    cells.reserve(expected);
    std::stringstream row(line);
    std::string cell;
    while (std::getline(row, cell, ',')) {
      try {
        cells.push_back(std::stod(cell));
      } catch (...) {
        throw std::invalid_argument("trace CSV has a non-numeric cell: " + cell);
      }
    }
    if (cells.size() != expected) {
      throw std::invalid_argument("trace CSV row has the wrong column count");
    }
    std::size_t at = 1;  // index column is redundant
    trace.quadrature.nodes.emplace_back(cells.begin() + at, cells.begin() + at + n);
    at += static_cast<std::size_t>(n);
    trace.quadrature.normals.emplace_back(cells.begin() + at, cells.begin() + at + n);
    at += static_cast<std::size_t>(n);
    trace.quadrature.weights.push_back(cells[at]);
    at += 1;
    trace.values.emplace_back(
        sig, std::vector<double>(cells.begin() + at, cells.end()));
  }
  if (trace.quadrature.size() == 0) {
    throw std::invalid_argument("trace CSV has no data rows");
  }
  return trace;
}

}  // namespace monogenica
