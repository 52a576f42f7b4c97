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

// Wire formats for the cfact tool. Exact values always travel as "p/q"
// strings (q omitted when 1); see docs/formats.md for the schemas.

#ifndef CFACT_TOOLS_DOCUMENT_HPP
#define CFACT_TOOLS_DOCUMENT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cfact/identity_suite.hpp"
#include "cfact/polynomial.hpp"
#include "cfact/triangle.hpp"

namespace cfact::cli {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv };

std::optional<Format> parse_format(std::string_view name);

/// Serialized form of a polynomial emitted by the poly command.
struct PolynomialDocument {
  std::string kind;
  unsigned n = 0;
  Rational r;
  /// Constant term first; the zero polynomial is {0}.
  std::vector<Rational> coefficients;
};

PolynomialDocument make_polynomial_document(std::string kind, unsigned n,
                                            Rational r, const Polynomial& p);

Json to_json(const TriangleTable& table);
Json to_json(const PolynomialDocument& doc);
/// Inverse of to_json; throws std::invalid_argument on schema errors.
TriangleTable table_from_json(const Json& doc);
PolynomialDocument polynomial_from_json(const Json& doc);

std::string to_csv(const TriangleTable& table);
std::string to_csv(const PolynomialDocument& doc);

/// Two-space indented JSON followed by a newline.
std::string dump(const Json& doc);

Json report_to_json(const std::vector<CheckReport>& reports,
                    bool include_timing);

/// Reads a suite configuration. Without "base": "default" the grid starts
/// empty and only the checks listed under "checks" run. Throws
/// std::invalid_argument on malformed input.
SuiteConfig config_from_json(const Json& doc);

/// Parses "n,k".
FaultCell parse_fault(std::string_view text);

}  // namespace cfact::cli

#endif  // CFACT_TOOLS_DOCUMENT_HPP
