// Copyright 2026 The cfact Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "document.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace cfact::cli {

namespace {

const Json& require(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw std::invalid_argument(std::string("missing key '") + key + "'");
  }
  return doc.at(key);
}

Rational rational_field(const Json& value, const char* what) {
  if (!value.is_string()) {
    throw std::invalid_argument(std::string(what) +
                                " must be a \"p/q\" string");
  }
  return Rational::parse(value.get<std::string>());
}

int int_field(const Json& value, const char* what) {
  if (!value.is_number_integer()) {
    throw std::invalid_argument(std::string(what) + " must be an integer");
  }
  return value.get<int>();
}

double number_field(const Json& value, const char* what) {
  if (!value.is_number()) {
    throw std::invalid_argument(std::string(what) + " must be a number");
  }
  return value.get<double>();
}

void reject_unknown_keys(const Json& doc, const std::set<std::string>& known,
                         const std::string& where) {
  if (!doc.is_object()) {
    throw std::invalid_argument(where + " must be a JSON object");
  }
  for (const auto& [key, value] : doc.items()) {
    if (known.count(key) == 0) {
      throw std::invalid_argument("unknown key '" + key + "' in " + where);
    }
  }
}

void apply_grid(Grid& grid, const Json& doc, const std::string& id) {
  reject_unknown_keys(doc,
                      {"nmax", "r", "mk_max", "x", "max_terms", "tolerance",
                       "accuracy"},
                      "checks." + id);
  if (doc.contains("nmax")) grid.nmax = int_field(doc["nmax"], "nmax");
  if (doc.contains("r")) {
    if (!doc["r"].is_array()) throw std::invalid_argument("r must be a list");
    grid.r_set.clear();
    for (const auto& r : doc["r"]) grid.r_set.push_back(rational_field(r, "r"));
  }
  if (doc.contains("mk_max")) grid.mk_max = int_field(doc["mk_max"], "mk_max");
  if (doc.contains("x")) {
    if (!doc["x"].is_array()) throw std::invalid_argument("x must be a list");
    grid.xs.clear();
    for (const auto& x : doc["x"]) grid.xs.push_back(number_field(x, "x"));
  }
  if (doc.contains("max_terms")) {
    grid.max_terms = int_field(doc["max_terms"], "max_terms");
  }
  if (doc.contains("tolerance")) {
    grid.tolerance = number_field(doc["tolerance"], "tolerance");
  }
  if (doc.contains("accuracy")) {
    grid.accuracy = number_field(doc["accuracy"], "accuracy");
  }
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  return std::nullopt;
}

PolynomialDocument make_polynomial_document(std::string kind, unsigned n,
                                            Rational r, const Polynomial& p) {
  PolynomialDocument doc{std::move(kind), n, std::move(r), {}};
  doc.coefficients.assign(p.coeffs().begin(), p.coeffs().end());
  if (doc.coefficients.empty()) doc.coefficients.emplace_back(0);
  return doc;
}

Json to_json(const TriangleTable& table) {
  Json rows = Json::array();
  for (const auto& row : table.rows()) {
    Json cells = Json::array();
    for (const auto& v : row) cells.push_back(v.to_string());
    rows.push_back(std::move(cells));
  }
  Json doc;
  doc["kind"] = "table";
  doc["family"] = std::string(to_string(table.family()));
  doc["r"] = table.r().to_string();
  doc["nmax"] = table.nmax();
  doc["path"] = std::string(to_string(table.path()));
  doc["rows"] = std::move(rows);
  return doc;
}

Json to_json(const PolynomialDocument& poly) {
  Json coeffs = Json::array();
  for (const auto& c : poly.coefficients) coeffs.push_back(c.to_string());
  Json doc;
  doc["kind"] = "polynomial";
  doc["polynomial"] = poly.kind;
  doc["n"] = poly.n;
  doc["r"] = poly.r.to_string();
  doc["coefficients"] = std::move(coeffs);
  return doc;
}

TriangleTable table_from_json(const Json& doc) {
  if (require(doc, "kind") != "table") {
    throw std::invalid_argument("document kind is not 'table'");
  }
  const auto family = parse_family(require(doc, "family").get<std::string>());
  const auto path = parse_path(require(doc, "path").get<std::string>());
  if (!family || !path) {
    throw std::invalid_argument("unknown family or path in table document");
  }
  const Rational r = rational_field(require(doc, "r"), "r");
  const int nmax = int_field(require(doc, "nmax"), "nmax");
  const Json& rows_json = require(doc, "rows");
  if (!rows_json.is_array() ||
      rows_json.size() != static_cast<std::size_t>(nmax) + 1) {
    throw std::invalid_argument("rows must list nmax + 1 rows");
  }
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : rows_json) {
    if (!row.is_array()) throw std::invalid_argument("row must be a list");
    std::vector<Rational> cells;
    for (const auto& cell : row) cells.push_back(rational_field(cell, "cell"));
    rows.push_back(std::move(cells));
  }
  return TriangleTable(*family, r, *path, std::move(rows));
}

PolynomialDocument polynomial_from_json(const Json& doc) {
  if (require(doc, "kind") != "polynomial") {
    throw std::invalid_argument("document kind is not 'polynomial'");
  }
  PolynomialDocument poly;
  poly.kind = require(doc, "polynomial").get<std::string>();
  poly.n = static_cast<unsigned>(int_field(require(doc, "n"), "n"));
  poly.r = rational_field(require(doc, "r"), "r");
  for (const auto& c : require(doc, "coefficients")) {
    poly.coefficients.push_back(rational_field(c, "coefficient"));
  }
  return poly;
}

std::string to_csv(const TriangleTable& table) {
  std::ostringstream out;
  out << "n";
  for (int k = 0; k <= table.nmax(); ++k) out << ",k" << k;
  out << "\n";
  for (int n = 0; n <= table.nmax(); ++n) {
    out << n;
    for (int k = 0; k <= table.nmax(); ++k) {
      out << ",";
      if (k <= n) out << table.at(n, k).to_string();
    }
    out << "\n";
  }
  return out.str();
}

std::string to_csv(const PolynomialDocument& doc) {
  std::ostringstream out;
  out << "k,coefficient\n";
  for (std::size_t k = 0; k < doc.coefficients.size(); ++k) {
    out << k << "," << doc.coefficients[k].to_string() << "\n";
  }
  return out.str();
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json report_to_json(const std::vector<CheckReport>& reports,
                    bool include_timing) {
  Json checks = Json::array();
  Json warnings = Json::array();
  for (const auto& report : reports) {
    Json entry;
    entry["id"] = report.id;
    entry["identity"] = report.identity;
    entry["grid"] = report.grid;
    entry["scope"] = report.scope;
    entry["status"] = std::string(to_string(report.status));
    entry["cells_checked"] = report.cells_checked;
    if (report.counterexample) {
      Json cell = Json::object();
      for (const auto& [name, value] : report.counterexample->cell) {
        cell[name] = value;
      }
      entry["counterexample"] = {{"cell", std::move(cell)},
                                 {"lhs", report.counterexample->lhs},
                                 {"rhs", report.counterexample->rhs}};
    } else {
      entry["counterexample"] = nullptr;
    }
    if (include_timing) entry["elapsed_ms"] = report.elapsed_ms;
    if (report.status == CheckStatus::Vacuous) {
      warnings.push_back(report.id + ": empty grid, vacuous pass");
    }
    checks.push_back(std::move(entry));
  }
  if (reports.empty()) warnings.push_back("no checks configured");
  Json doc;
  doc["kind"] = "check_report";
  const bool any_pass =
      std::any_of(reports.begin(), reports.end(), [](const auto& r) {
        return r.status == CheckStatus::Pass;
      });
  doc["status"] = !all_passed(reports) ? "fail" : any_pass ? "pass" : "vacuous";
  doc["checks"] = std::move(checks);
  doc["warnings"] = std::move(warnings);
  return doc;
}

SuiteConfig config_from_json(const Json& doc) {
  reject_unknown_keys(doc, {"base", "series_order", "checks", "fault"},
                      "config");
  SuiteConfig config;
  if (doc.contains("base")) {
    const Json& base = doc["base"];
    if (base == "default") {
      config = SuiteConfig::defaults();
    } else if (base != "empty") {
      throw std::invalid_argument("base must be \"default\" or \"empty\"");
    }
  }
  if (doc.contains("series_order")) {
    const int order = int_field(doc["series_order"], "series_order");
    if (order < 1) throw std::invalid_argument("series_order must be >= 1");
    config.series_order = static_cast<std::size_t>(order);
  }
  if (doc.contains("checks")) {
    const Json& checks = doc["checks"];
    if (!checks.is_object()) {
      throw std::invalid_argument("checks must be an object keyed by id");
    }
    const auto& ids = check_ids();
    for (const auto& [id, grid_doc] : checks.items()) {
      if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
        throw std::invalid_argument("unknown check id '" + id + "'");
      }
      apply_grid(config.grids[id], grid_doc, id);
    }
  }
  if (doc.contains("fault")) {
    const Json& fault = doc["fault"];
    reject_unknown_keys(fault, {"n", "k"}, "fault");
    config.fault = FaultCell{int_field(require(fault, "n"), "fault.n"),
                             int_field(require(fault, "k"), "fault.k")};
  }
  return config;
}

FaultCell parse_fault(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    throw std::invalid_argument("fault cell must be 'n,k'");
  }
  FaultCell cell;
  const auto parse = [](std::string_view part, int& out) {
    const auto [ptr, ec] =
        std::from_chars(part.data(), part.data() + part.size(), out);
    if (ec != std::errc{} || ptr != part.data() + part.size() || out < 0) {
      throw std::invalid_argument("fault cell must be 'n,k'");
    }
  };
  parse(text.substr(0, comma), cell.n);
  parse(text.substr(comma + 1), cell.k);
  return cell;
}

}  // namespace cfact::cli
