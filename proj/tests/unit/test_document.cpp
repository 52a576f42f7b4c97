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

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cfact/bell.hpp"
#include "cfact/tables.hpp"
#include "commands.hpp"

using cfact::Family;
using cfact::Path;
using cfact::Rational;
namespace cli = cfact::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("document: table JSON round trip is byte-stable") {
  for (const Family f : {Family::T, Family::Tr, Family::t, Family::tr,
                         Family::S2, Family::S1r}) {
    for (const Path p : cfact::supported_paths(f)) {
      const auto table = cfact::make_table(f, 9, Rational(-3, 2), p);
      const std::string first = cli::dump(cli::to_json(table));
      const auto parsed = cli::table_from_json(cli::Json::parse(first));
      CHECK(parsed.same_values(table));
      CHECK(parsed.family() == f);
      CHECK(parsed.path() == p);
      CHECK(parsed.r() == table.r());
      CHECK(cli::dump(cli::to_json(parsed)) == first);
    }
  }
}

TEST_CASE("document: polynomial JSON round trip is byte-stable") {
  const auto doc = cli::make_polynomial_document(
      "r_central_bell", 4, Rational(1, 2),
      cfact::r_central_bell_poly(4, Rational(1, 2)));
  const std::string first = cli::dump(cli::to_json(doc));
  const auto parsed = cli::polynomial_from_json(cli::Json::parse(first));
  CHECK(parsed.coefficients == doc.coefficients);
  CHECK(parsed.r == doc.r);
  CHECK(cli::dump(cli::to_json(parsed)) == first);

  const auto zero = cli::make_polynomial_document("x", 0, 0, cfact::Polynomial());
  CHECK(zero.coefficients == std::vector<Rational>{Rational(0)});
}

TEST_CASE("document: schema errors are rejected") {
  const auto table = cfact::make_table(Family::T, 2, 0, Path::Direct);
  cli::Json doc = cli::to_json(table);
  doc["rows"][1][0] = "0.5";
  CHECK_THROWS_AS(cli::table_from_json(doc), std::invalid_argument);
  doc = cli::to_json(table);
  doc["family"] = "Q";
  CHECK_THROWS_AS(cli::table_from_json(doc), std::invalid_argument);
  doc = cli::to_json(table);
  doc["rows"][2] = cli::Json::array({"1"});
  CHECK_THROWS(cli::table_from_json(doc));
  CHECK_THROWS_AS(cli::polynomial_from_json(cli::to_json(table)),
                  std::invalid_argument);
}

TEST_CASE("document: CSV layout") {
  const auto table = cfact::make_table(Family::T, 3, 0, Path::Direct);
  CHECK(cli::to_csv(table) ==
        "n,k0,k1,k2,k3\n"
        "0,1,,,\n"
        "1,0,1,,\n"
        "2,0,0,1,\n"
        "3,0,1/4,0,1\n");
  const auto doc = cli::make_polynomial_document(
      "central_bell", 3, 0, cfact::central_bell_poly(3));
  CHECK(cli::to_csv(doc) == "k,coefficient\n0,0\n1,1/4\n2,0\n3,1\n");
}

TEST_CASE("document: configuration parsing") {
  auto config = cli::config_from_json(cli::Json::object());
  CHECK(config.grids.empty());
  CHECK_FALSE(config.fault.has_value());

  config = cli::config_from_json(cli::Json::parse(R"({"base": "default"})"));
  CHECK(config.grids.size() == cfact::check_ids().size());

  config = cli::config_from_json(cli::Json::parse(R"({
    "series_order": 32,
    "checks": {"thm7": {"nmax": 10, "mk_max": 8, "r": ["0", "1", "3"]},
               "dobinski": {"nmax": 4, "x": [0.5, 2], "max_terms": 50}},
    "fault": {"n": 5, "k": 3}
  })"));
  CHECK(config.series_order == 32);
  REQUIRE(config.grids.size() == 2);
  CHECK(config.grids["thm7"].mk_max == 8);
  CHECK(config.grids["thm7"].r_set ==
        std::vector<Rational>{Rational(0), Rational(1), Rational(3)});
  CHECK(config.grids["dobinski"].xs == std::vector<double>{0.5, 2.0});
  CHECK(config.grids["dobinski"].max_terms == 50);
  REQUIRE(config.fault.has_value());
  CHECK(config.fault->n == 5);
  CHECK(config.fault->k == 3);

  for (const char* bad : {
           R"({"checks": {"thm99": {}}})",
           R"({"checks": {"thm1": {"nmax": "3"}}})",
           R"({"checks": {"thm1": {"r": [0.5]}}})",
           R"({"checks": {"thm1": {"depth": 3}}})",
           R"({"base": "everything"})",
           R"({"colour": 1})",
           R"({"fault": {"n": 1}})",
           R"([1, 2])",
       }) {
    CAPTURE(bad);
    CHECK_THROWS_AS(cli::config_from_json(cli::Json::parse(bad)),
                    std::invalid_argument);
  }

  CHECK(cli::parse_fault("3,1").n == 3);
  CHECK(cli::parse_fault("3,1").k == 1);
  CHECK_THROWS_AS(cli::parse_fault("3"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_fault("a,1"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_fault("-1,0"), std::invalid_argument);
}

TEST_CASE("cli: table and poly commands") {
  auto r = run({"table", "--family", "T", "--nmax", "3"});
  CHECK(r.code == cli::kExitOk);
  const auto doc = cli::Json::parse(r.out);
  CHECK(doc["rows"][3][1] == "1/4");
  CHECK(doc["kind"] == "table");

  r = run({"table", "--family", "T", "--nmax", "0"});
  CHECK(cli::Json::parse(r.out)["rows"] == cli::Json::parse(R"([["1"]])"));

  const auto rec = run({"table", "--family", "tr", "--r", "1/2", "--nmax", "8",
                        "--path", "recurrence"});
  const auto poly = run({"table", "--family", "tr", "--r", "1/2", "--nmax",
                         "8", "--path", "poly"});
  auto a = cli::Json::parse(rec.out);
  auto b = cli::Json::parse(poly.out);
  CHECK(a["rows"] == b["rows"]);

  r = run({"poly", "--kind", "central_bell", "--n", "3"});
  CHECK(cli::Json::parse(r.out)["coefficients"] ==
        cli::Json::parse(R"(["0","1/4","0","1"])"));
  r = run({"poly", "--kind", "central_bell", "--n", "0"});
  CHECK(cli::Json::parse(r.out)["coefficients"] ==
        cli::Json::parse(R"(["1"])"));
  r = run({"poly", "--kind", "r_central_bell", "--n", "2", "--r", "1"});
  CHECK(cli::Json::parse(r.out)["coefficients"] ==
        cli::Json::parse(R"(["1","2","1"])"));
  r = run({"poly", "--kind", "falling_factorial", "--n", "2", "--format",
           "csv"});
  CHECK(r.out == "k,coefficient\n0,0\n1,-1\n2,1\n");
}

TEST_CASE("cli: usage errors exit with 2") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"table", "--family", "Z"}).code == cli::kExitUsage);
  CHECK(run({"table", "--family", "T", "--nmax", "-1"}).code ==
        cli::kExitUsage);
  CHECK(run({"table", "--family", "T", "--nmax", "50", "--path", "gf"}).code ==
        cli::kExitUsage);
  CHECK(run({"table", "--family", "T", "--r", "1/0"}).code == cli::kExitUsage);
  CHECK(run({"table", "--family", "T", "--format", "xml"}).code ==
        cli::kExitUsage);
  CHECK(run({"poly", "--kind", "mystery", "--n", "2"}).code ==
        cli::kExitUsage);
  CHECK(run({"dobinski", "--n", "2", "--x", "-1"}).code == cli::kExitUsage);
  CHECK(run({"dobinski", "--n", "2", "--x", "abc"}).code == cli::kExitUsage);
  CHECK(run({"check", "--config", "/nonexistent/cfg.json"}).code ==
        cli::kExitUsage);
  const auto bad = write_temp("cfact_bad_config.json", "{ not json");
  CHECK(run({"check", "--config", bad}).code == cli::kExitUsage);
  CHECK(run({"check", "--inject-fault", "x"}).code == cli::kExitUsage);
}

TEST_CASE("cli: check exit codes") {
  auto r = run({"check", "--no-timings"});
  CHECK(r.code == cli::kExitOk);
  auto doc = cli::Json::parse(r.out);
  CHECK(doc["status"] == "pass");
  CHECK_FALSE(doc["checks"][0].contains("elapsed_ms"));
  // fixed ordering makes the untimed report reproducible
  CHECK(run({"check", "--no-timings"}).out == r.out);

  r = run({"check", "--inject-fault", "3,1"});
  CHECK(r.code == cli::kExitCheckFailed);
  doc = cli::Json::parse(r.out);
  CHECK(doc["status"] == "fail");
  CHECK(doc["checks"][0]["counterexample"]["cell"]["n"] == "3");
  CHECK(r.err.find("counterexample") != std::string::npos);

  const auto empty = write_temp("cfact_empty_config.json", "");
  r = run({"check", "--config", empty});
  CHECK(r.code == cli::kExitOk);
  doc = cli::Json::parse(r.out);
  CHECK(doc["status"] == "vacuous");
  CHECK_FALSE(doc["warnings"].empty());
  CHECK(r.err.find("warning") != std::string::npos);

  const auto custom = write_temp(
      "cfact_custom_config.json",
      R"({"checks": {"thm4": {"nmax": 6, "r": ["0", "1/3"]}}})");
  r = run({"check", "--config", custom});
  CHECK(r.code == cli::kExitOk);
  doc = cli::Json::parse(r.out);
  REQUIRE(doc["checks"].size() == 1);
  CHECK(doc["checks"][0]["scope"] == "extended");
}

TEST_CASE("cli: dobinski output") {
  auto r = run({"dobinski", "--n", "3", "--x", "1", "--format", "json"});
  CHECK(r.code == cli::kExitOk);
  const auto doc = cli::Json::parse(r.out);
  CHECK(doc["exact"] == "5/4");
  CHECK(doc["abs_error"].get<double>() <= 1e-9);
  CHECK(doc["terms_used"].get<int>() >= 1);

  r = run({"dobinski", "--n", "0", "--x", "1"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("exact               1 ") != std::string::npos);

  r = run({"dobinski", "--n", "5", "--x", "2", "--max-terms", "2"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.err.find("max_terms") != std::string::npos);
}

TEST_CASE("cli: --out writes the document to a file") {
  const auto path =
      (std::filesystem::temp_directory_path() / "cfact_out_table.json").string();
  std::remove(path.c_str());
  const auto r = run({"table", "--family", "S2", "--nmax", "4", "--out", path});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(cli::Json::parse(text.str())["rows"][4][2] == "7");
}
