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

// Grid-based machine checks of the identities connecting the number and
// polynomial families. Every check evaluates two independent computation
// paths cell by cell and reports the first (smallest) disagreement.

#ifndef CFACT_IDENTITY_SUITE_HPP
#define CFACT_IDENTITY_SUITE_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cfact/central_numbers.hpp"
#include "cfact/rational.hpp"

namespace cfact {

enum class CheckStatus { Pass, Fail, Vacuous };

std::string_view to_string(CheckStatus status);

struct Counterexample {
  /// Named coordinates in comparison order, e.g. {{"n","3"},{"k","1"}}.
  std::vector<std::pair<std::string, std::string>> cell;
  std::string lhs;
  std::string rhs;
};

struct CheckReport {
  std::string id;
  std::string identity;
  std::string grid;
  /// "stated" when the grid stays inside the stated parameter domain,
  /// "extended" when it uses non-integer or negative r for an identity
  /// stated for nonnegative integer r.
  std::string scope;
  CheckStatus status = CheckStatus::Vacuous;
  std::size_t cells_checked = 0;
  std::optional<Counterexample> counterexample;
  double elapsed_ms = 0.0;
};

/// Parameter grid for one check. Fields a check does not use are ignored.
/// A negative nmax means an empty grid.
struct Grid {
  int nmax = -1;
  std::vector<Rational> r_set;
  /// Bound on m + k for thm7.
  int mk_max = -1;
  /// Evaluation points for dobinski.
  std::vector<double> xs;
  int max_terms = 200;
  double tolerance = 1e-12;
  /// Allowed |approximation - exact| for dobinski.
  double accuracy = 1e-9;
};

struct FaultCell {
  int n = 0;
  int k = 0;
};

struct SuiteConfig {
  /// Check id -> grid. Only listed checks run.
  std::map<std::string, Grid> grids;
  std::size_t series_order = kDefaultSeriesOrder;
  /// When set, T(n,k) is shifted by +1 in the T table the checks read.
  std::optional<FaultCell> fault;

  static SuiteConfig defaults();
};

/// The default r test set {0, 1/2, 1, 2, 5, -3/2}.
std::vector<Rational> default_r_set();

/// Every check id, in run order.
const std::vector<std::string>& check_ids();

CheckReport check_thm1(const Grid& grid, const SuiteConfig& config);
CheckReport check_thm2(const Grid& grid, const SuiteConfig& config);
CheckReport check_thm3(const Grid& grid, const SuiteConfig& config);
CheckReport check_thm4(const Grid& grid, const SuiteConfig& config);
CheckReport check_thm5(const Grid& grid, const SuiteConfig& config);
CheckReport check_thm6(const Grid& grid, const SuiteConfig& config);
CheckReport check_thm7(const Grid& grid, const SuiteConfig& config);
CheckReport check_thm8(const Grid& grid, const SuiteConfig& config);
CheckReport check_bell_difference(const Grid& grid, const SuiteConfig& config);
CheckReport check_recurrence(const Grid& grid, const SuiteConfig& config);
CheckReport check_first_kind_gf(const Grid& grid, const SuiteConfig& config);
CheckReport check_t_gf(const Grid& grid, const SuiteConfig& config);
CheckReport check_s2_paths(const Grid& grid, const SuiteConfig& config);
CheckReport check_s1r_paths(const Grid& grid, const SuiteConfig& config);
CheckReport check_inverse_relations(const Grid& grid,
                                    const SuiteConfig& config);
CheckReport check_gf_inverse(const Grid& grid, const SuiteConfig& config);
CheckReport check_parity(const Grid& grid, const SuiteConfig& config);
CheckReport check_dobinski(const Grid& grid, const SuiteConfig& config);

/// Runs one check by id; throws std::invalid_argument for an unknown id.
CheckReport run_check(const std::string& id, const Grid& grid,
                      const SuiteConfig& config);

/// Runs every check listed in config.grids, in check_ids() order.
std::vector<CheckReport> run_all(const SuiteConfig& config);

/// True iff no report failed. Vacuous reports do not fail the suite.
bool all_passed(const std::vector<CheckReport>& reports);

}  // namespace cfact

#endif  // CFACT_IDENTITY_SUITE_HPP
