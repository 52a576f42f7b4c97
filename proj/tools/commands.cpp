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

#include "commands.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "cfact/bell.hpp"
#include "cfact/central_numbers.hpp"
#include "cfact/first_kind.hpp"
#include "cfact/identity_suite.hpp"
#include "cfact/tables.hpp"

namespace cfact::cli {

namespace {

Format require_format(const std::string& name) {
  const auto format = parse_format(name);
  if (!format) {
    throw std::invalid_argument("unknown format '" + name +
                                "' (expected json or csv)");
  }
  return *format;
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

Polynomial build_polynomial(const std::string& kind, unsigned n,
                            const Rational& r) {
  if (kind == "central_bell") return central_bell_poly(n);
  if (kind == "r_central_bell") return r_central_bell_poly(n, r);
  if (kind == "central_factorial") return central_factorial_poly(n).shift(r);
  if (kind == "falling_factorial") return falling_factorial_poly(n, r);
  throw std::invalid_argument(
      "unknown polynomial kind '" + kind +
      "' (expected central_bell, r_central_bell, central_factorial or "
      "falling_factorial)");
}

}  // namespace

int cmd_table(const TableOptions& options, std::ostream& out,
              std::ostream& err) {
  try {
    const auto family = parse_family(options.family);
    if (!family) {
      throw std::invalid_argument("unknown family '" + options.family +
                                  "' (expected T, Tr, t, tr, S2 or S1r)");
    }
    if (options.nmax < 0) throw std::invalid_argument("nmax must be >= 0");
    Path path = supported_paths(*family).front();
    if (!options.path.empty()) {
      const auto parsed = parse_path(options.path);
      if (!parsed) {
        throw std::invalid_argument("unknown path '" + options.path + "'");
      }
      path = *parsed;
    }
    const Format format = require_format(options.format);
    const TriangleTable table =
        make_table(*family, options.nmax, Rational::parse(options.r), path,
                   options.order);
    out << (format == Format::Json ? dump(to_json(table)) : to_csv(table));
    return kExitOk;
  } catch (const std::exception& e) {
    err << "cfact table: " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_poly(const PolyOptions& options, std::ostream& out,
             std::ostream& err) {
  try {
    if (options.n < 0) throw std::invalid_argument("n must be >= 0");
    const Format format = require_format(options.format);
    const Rational r = Rational::parse(options.r);
    const auto n = static_cast<unsigned>(options.n);
    const PolynomialDocument doc = make_polynomial_document(
        options.kind, n, r, build_polynomial(options.kind, n, r));
    out << (format == Format::Json ? dump(to_json(doc)) : to_csv(doc));
    return kExitOk;
  } catch (const std::exception& e) {
    err << "cfact poly: " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_check(const CheckOptions& options, std::ostream& out,
              std::ostream& err) {
  SuiteConfig config;
  try {
    if (options.config_path.empty()) {
      config = SuiteConfig::defaults();
    } else {
      std::ifstream in(options.config_path);
      if (!in) {
        throw std::invalid_argument("cannot read config '" +
                                    options.config_path + "'");
      }
      std::stringstream buffer;
      buffer << in.rdbuf();
      const std::string text = buffer.str();
      // An empty file is an empty configuration.
      config = config_from_json(
          text.find_first_not_of(" \t\r\n") == std::string::npos
              ? Json::object()
              : Json::parse(text));
    }
    if (!options.inject_fault.empty()) {
      config.fault = parse_fault(options.inject_fault);
    }
  } catch (const std::exception& e) {
    err << "cfact check: malformed configuration: " << e.what() << "\n";
    return kExitUsage;
  }

  std::vector<CheckReport> reports;
  try {
    reports = run_all(config);
  } catch (const std::exception& e) {
    err << "cfact check: " << e.what() << "\n";
    return kExitUsage;
  }

  const Json doc = report_to_json(reports, options.timings);
  out << dump(doc);
  for (const auto& report : reports) {
    err << to_string(report.status) << "  " << report.id << "  ["
        << report.grid << "]\n";
    if (report.counterexample) {
      err << "    counterexample:";
      for (const auto& [name, value] : report.counterexample->cell) {
        err << " " << name << "=" << value;
      }
      err << "  lhs=" << report.counterexample->lhs
          << "  rhs=" << report.counterexample->rhs << "\n";
    }
  }
  for (const auto& warning : doc["warnings"]) {
    err << "warning: " << warning.get<std::string>() << "\n";
  }
  return all_passed(reports) ? kExitOk : kExitCheckFailed;
}

int cmd_dobinski(const DobinskiOptions& options, std::ostream& out,
                 std::ostream& err) {
  try {
    if (options.n < 0) throw std::invalid_argument("n must be >= 0");
    if (options.format != "text" && options.format != "json") {
      throw std::invalid_argument("format must be text or json");
    }
    const auto n = static_cast<unsigned>(options.n);
    const DobinskiResult result =
        dobinski_eval(n, options.x, options.max_terms, options.tolerance);
    const Rational exact =
        central_bell_poly(n).evaluate(Rational(mpq_class(options.x)));
    const double error = std::fabs(result.value - exact.to_double());
    if (options.format == "json") {
      Json doc;
      doc["kind"] = "dobinski";
      doc["n"] = n;
      doc["x"] = options.x;
      doc["value"] = result.value;
      doc["terms_used"] = result.terms_used;
      doc["last_term_magnitude"] = result.last_term_magnitude;
      doc["last_diagonal_bound"] = result.last_diagonal_bound;
      doc["converged"] = result.converged;
      doc["exact"] = exact.to_string();
      doc["abs_error"] = error;
      out << dump(doc);
    } else {
      out << "n                   " << n << "\n"
          << "x                   " << format_double(options.x) << "\n"
          << "value               " << format_double(result.value) << "\n"
          << "terms_used          " << result.terms_used << "\n"
          << "last_term_magnitude "
          << format_double(result.last_term_magnitude) << "\n"
          << "last_diagonal_bound "
          << format_double(result.last_diagonal_bound) << "\n"
          << "converged           " << (result.converged ? "yes" : "no")
          << "\n"
          << "exact               " << exact.to_string() << " ("
          << format_double(exact.to_double()) << ")\n"
          << "abs_error           " << format_double(error) << "\n";
    }
    if (!result.converged) {
      err << "warning: max_terms reached before the tolerance was met\n";
    }
    return kExitOk;
  } catch (const std::exception& e) {
    err << "cfact dobinski: " << e.what() << "\n";
    return kExitUsage;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact central factorial numbers, r-central Bell polynomials "
               "and identity checks"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "Write the document to a file");

  TableOptions table;
  auto* table_cmd = app.add_subcommand("table", "Emit an exact triangle");
  table_cmd->add_option("--family", table.family, "T, Tr, t, tr, S2 or S1r")
      ->required();
  table_cmd->add_option("--nmax", table.nmax, "Largest row index");
  table_cmd->add_option("--r", table.r, "Exact rational r, e.g. 1/2");
  table_cmd->add_option("--path", table.path,
                        "direct, convolution, gf, poly or recurrence");
  table_cmd->add_option("--format", table.format, "json or csv");
  table_cmd->add_option("--order", table.order,
                        "Series truncation order for gf paths");
  table_cmd->add_option("--out", out_path, "Write the document to a file");

  PolyOptions poly;
  auto* poly_cmd = app.add_subcommand("poly", "Emit an exact polynomial");
  poly_cmd
      ->add_option("--kind", poly.kind,
                   "central_bell, r_central_bell, central_factorial or "
                   "falling_factorial")
      ->required();
  poly_cmd->add_option("--n", poly.n, "Index n")->required();
  poly_cmd->add_option("--r", poly.r, "Exact rational r (shift)");
  poly_cmd->add_option("--format", poly.format, "json or csv");
  poly_cmd->add_option("--out", out_path, "Write the document to a file");

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Run the identity suite");
  check_cmd->add_option("--config", check.config_path, "JSON grid config");
  check_cmd->add_option("--inject-fault", check.inject_fault,
                        "Perturb T(n,k) by +1, given as n,k");
  check_cmd->add_flag("!--no-timings", check.timings,
                      "Omit elapsed times from the report");
  check_cmd->add_option("--out", out_path, "Write the report to a file");

  DobinskiOptions dob;
  auto* dob_cmd =
      app.add_subcommand("dobinski", "Evaluate the Dobinski-type series");
  dob_cmd->add_option("--n", dob.n, "Index n")->required();
  dob_cmd->add_option("--x", dob.x, "Evaluation point x > 0")->required();
  dob_cmd->add_option("--max-terms", dob.max_terms, "Diagonal cap");
  dob_cmd->add_option("--tolerance", dob.tolerance, "Stopping threshold");
  dob_cmd->add_option("--format", dob.format, "text or json");
  dob_cmd->add_option("--out", out_path, "Write the result to a file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      err << "cfact: cannot write '" << out_path << "'\n";
      return kExitUsage;
    }
    sink = &file;
  }

  if (*table_cmd) return cmd_table(table, *sink, err);
  if (*poly_cmd) return cmd_poly(poly, *sink, err);
  if (*check_cmd) return cmd_check(check, *sink, err);
  return cmd_dobinski(dob, *sink, err);
}

}  // namespace cfact::cli
