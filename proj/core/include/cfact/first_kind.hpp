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

#ifndef CFACT_FIRST_KIND_HPP
#define CFACT_FIRST_KIND_HPP

#include <cstddef>

#include "cfact/central_numbers.hpp"

namespace cfact {

/// t/2 + sqrt(1 + t^2/4).
Series central_factorial_base(std::size_t order);
/// 2 log(t/2 + sqrt(1 + t^2/4)), the compositional inverse of
/// e^{t/2} - e^{-t/2}.
Series central_log_kernel(std::size_t order);

/// t(n,k): coefficient of x^k in x^[n]. Throws when k > n.
Rational central_factorial_first(unsigned n, unsigned k);

/// t_r(n+r,k+r): coefficient of x^k in (x+r)^[n]. Throws when k > n.
Rational r_central_factorial_first(unsigned n, unsigned k, const Rational& r);

/// t or tr table from the coefficients of (x+r)^[n].
TriangleTable first_kind_poly_table(Family family, int nmax,
                                    const Rational& r);

/// t table from (1/k!) (2 log(t/2 + sqrt(1+t^2/4)))^k.
TriangleTable central_factorial_first_gf_table(
    int nmax, std::size_t order = kDefaultSeriesOrder);

/// tr table from (1/k!) (t/2 + sqrt(1+t^2/4))^{2r} (2 log(...))^k.
TriangleTable r_central_factorial_first_gf_table(
    int nmax, const Rational& r, std::size_t order = kDefaultSeriesOrder);

/// tr table from the two-step recurrence
///
///   t_r(n+1+r, k+r) = t_r(n-1+r, k-2+r) + 2r t_r(n-1+r, k-1+r)
///                     + (r^2 - ((n-1)/2)^2) t_r(n-1+r, k+r)
///
/// seeded with the rows of (x+r)^[0] = 1 and (x+r)^[1] = x + r.
TriangleTable r_central_factorial_first_recurrence_table(int nmax,
                                                         const Rational& r);

}  // namespace cfact

#endif  // CFACT_FIRST_KIND_HPP
