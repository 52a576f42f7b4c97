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

#ifndef CFACT_TRIANGLE_HPP
#define CFACT_TRIANGLE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cfact/rational.hpp"

namespace cfact {

/// Number families held in a TriangleTable.
///
///   T    central factorial numbers of the second kind T(n,k)
///   Tr   extended r-central, second kind T_r(n+r,k+r)
///   t    central factorial numbers of the first kind t(n,k)
///   tr   extended r-central, first kind t_r(n+r,k+r)
///   S2   Stirling numbers of the second kind
///   S1r  r-Stirling numbers of the first kind S_{1,r}(n+r,k+r)
enum class Family { T, Tr, t, tr, S2, S1r };

/// How a table was computed.
enum class Path {
  Direct,              // explicit alternating sum
  Convolution,         // binomial convolution with T(l,k)
  GeneratingFunction,  // EGF coefficient extraction
  Polynomial,          // coefficient of a basis polynomial
  Recurrence,
};

std::string_view to_string(Family family);
std::string_view to_string(Path path);
std::optional<Family> parse_family(std::string_view name);
std::optional<Path> parse_path(std::string_view name);
/// Whether the family carries an r parameter.
bool is_r_family(Family family);

/// Exact values of a triangle on 0 <= k <= n <= nmax.
///
/// For r-families a cell (n,k) holds the symbol with arguments (n+r, k+r);
/// r is metadata. Cells with k > n are zero and are not stored.
class TriangleTable {
 public:
  /// rows[n] must have exactly n + 1 entries.
  TriangleTable(Family family, Rational r, Path path,
                std::vector<std::vector<Rational>> rows);

  Family family() const { return family_; }
  const Rational& r() const { return r_; }
  Path path() const { return path_; }
  int nmax() const { return static_cast<int>(rows_.size()) - 1; }

  /// Zero for k > n; throws std::out_of_range for n outside 0..nmax.
  Rational at(int n, int k) const;
  const std::vector<Rational>& row(int n) const;
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }

  /// Copy with cell (n,k) shifted by delta; used for fault injection.
  TriangleTable perturbed(int n, int k, const Rational& delta) const;

  /// Cell-wise value equality, ignoring the path tag.
  bool same_values(const TriangleTable& other) const {
    return rows_ == other.rows_;
  }

 private:
  Family family_;
  Rational r_;
  Path path_;
  std::vector<std::vector<Rational>> rows_;
};

}  // namespace cfact

#endif  // CFACT_TRIANGLE_HPP
