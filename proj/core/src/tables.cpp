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

#include "cfact/tables.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cfact {

std::vector<Path> supported_paths(Family family) {
  switch (family) {
    case Family::T:
    case Family::Tr:
      return {Path::Direct, Path::Convolution, Path::GeneratingFunction};
    case Family::S2:
      return {Path::Recurrence, Path::GeneratingFunction};
    case Family::S1r:
    case Family::t:
      return {Path::Polynomial, Path::GeneratingFunction};
    case Family::tr:
      return {Path::Polynomial, Path::GeneratingFunction, Path::Recurrence};
  }
  return {};
}

TriangleTable make_table(Family family, int nmax, const Rational& r,
                         Path path, std::size_t order) {
  const auto paths = supported_paths(family);
  if (std::find(paths.begin(), paths.end(), path) == paths.end()) {
    throw std::invalid_argument("family " + std::string(to_string(family)) +
                                " has no '" + std::string(to_string(path)) +
                                "' path");
  }
  const Rational shift = is_r_family(family) ? r : Rational(0);
  switch (family) {
    case Family::T:
    case Family::Tr:
      if (path == Path::Direct) {
        return second_kind_direct_table(family, nmax, shift);
      }
      if (path == Path::Convolution) {
        return second_kind_convolution_table(family, nmax, shift);
      }
      return triangle_via_gf(family, nmax, shift, order);
    case Family::S2:
      return path == Path::Recurrence ? stirling2_table(nmax)
                                      : triangle_via_gf(family, nmax, 0, order);
    case Family::S1r:
      return path == Path::Polynomial
                 ? r_stirling1_table(nmax, shift)
                 : triangle_via_gf(family, nmax, shift, order);
    case Family::t:
      return path == Path::Polynomial
                 ? first_kind_poly_table(family, nmax, 0)
                 : central_factorial_first_gf_table(nmax, order);
    case Family::tr:
      if (path == Path::Polynomial) {
        return first_kind_poly_table(family, nmax, shift);
      }
      if (path == Path::Recurrence) {
        return r_central_factorial_first_recurrence_table(nmax, shift);
      }
      return r_central_factorial_first_gf_table(nmax, shift, order);
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace cfact
