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

#ifndef CFACT_TOOLS_COMMANDS_HPP
#define CFACT_TOOLS_COMMANDS_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "document.hpp"

namespace cfact::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct TableOptions {
  std::string family = "T";
  int nmax = 10;
  std::string r = "0";
  /// Empty selects the family's default path.
  std::string path;
  std::string format = "json";
  std::size_t order = 40;
};

struct PolyOptions {
  std::string kind = "central_bell";
  int n = 0;
  std::string r = "0";
  std::string format = "json";
};

struct CheckOptions {
  /// Empty runs the built-in default suite.
  std::string config_path;
  /// "n,k"; perturbs T(n,k) in the suite's T table.
  std::string inject_fault;
  bool timings = true;
};

struct DobinskiOptions {
  int n = 0;
  double x = 1.0;
  int max_terms = 200;
  double tolerance = 1e-12;
  std::string format = "text";
};

/// Each command writes its document to out and diagnostics to err and
/// returns the process exit status. Invalid arguments yield kExitUsage.
int cmd_table(const TableOptions& options, std::ostream& out,
              std::ostream& err);
int cmd_poly(const PolyOptions& options, std::ostream& out, std::ostream& err);
int cmd_check(const CheckOptions& options, std::ostream& out,
              std::ostream& err);
int cmd_dobinski(const DobinskiOptions& options, std::ostream& out,
                 std::ostream& err);

/// Full command line dispatch (args excludes the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace cfact::cli

#endif  // CFACT_TOOLS_COMMANDS_HPP
