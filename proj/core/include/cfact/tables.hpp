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

#ifndef CFACT_TABLES_HPP
#define CFACT_TABLES_HPP

#include <cstddef>
#include <vector>

#include "cfact/central_numbers.hpp"
#include "cfact/first_kind.hpp"

namespace cfact {

/// Paths that can build the given family, default first.
std::vector<Path> supported_paths(Family family);

/// Builds any family's table by the requested path. The r argument is
/// ignored (stored as 0) for T, t and S2. Throws std::invalid_argument for
/// an unsupported family/path pair or nmax beyond the series order.
TriangleTable make_table(Family family, int nmax, const Rational& r,
                         Path path, std::size_t order = kDefaultSeriesOrder);

}  // namespace cfact

#endif  // CFACT_TABLES_HPP
