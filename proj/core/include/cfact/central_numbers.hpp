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

// Second-kind families: central factorial numbers T(n,k), their extended
// r-central version T_r(n+r,k+r), Stirling numbers S2(n,k) and the
// r-Stirling numbers of the first kind S_{1,r}(n+r,k+r), together with the
// factorial-basis polynomials and the central difference operator.

#ifndef CFACT_CENTRAL_NUMBERS_HPP
#define CFACT_CENTRAL_NUMBERS_HPP

#include <cstddef>

#include "cfact/polynomial.hpp"
#include "cfact/rational.hpp"
#include "cfact/series.hpp"
#include "cfact/triangle.hpp"

namespace cfact {

inline constexpr std::size_t kDefaultSeriesOrder = 40;

/// x^[n] = x (x + n/2 - 1) ... (x - n/2 + 1), with x^[0] = 1.
Polynomial central_factorial_poly(unsigned n);

/// (x + shift)(x + shift - 1) ... (x + shift - n + 1).
Polynomial falling_factorial_poly(unsigned n, const Rational& shift);

/// e^{t/2} - e^{-t/2} truncated at the given order.
Series central_difference_kernel(std::size_t order);

/// T(n,k) from (1/k!) sum_l C(k,l) (-1)^{k-l} (l - k/2)^n. Zero for n < k.
Rational central_factorial_second(unsigned n, unsigned k);

/// T_r(n+r,k+r) from (1/k!) sum_l C(k,l) (-1)^{k-l} (l + r - k/2)^n.
/// Zero for n < k.
Rational r_central_factorial_second(unsigned n, unsigned k, const Rational& r);

/// T_r(n+r,k+r) = sum_{l=k}^{n} C(n,l) T(l,k) r^{n-l}.
/// Throws std::invalid_argument when n < k.
Rational r_central_factorial_second_convolution(unsigned n, unsigned k,
                                                const Rational& r);
/// Same convolution, reading T(l,k) from a precomputed T table.
Rational r_central_factorial_second_convolution(const TriangleTable& t_table,
                                                unsigned n, unsigned k,
                                                const Rational& r);

/// S2(n,k) by the recurrence S2(n,k) = k S2(n-1,k) + S2(n-1,k-1).
Rational stirling2(unsigned n, unsigned k);

/// Coefficient of x^k in (x + r)_n. Throws std::invalid_argument when k > n.
/// Follows the falling-factorial definition literally, so values may be
/// negative.
Rational r_stirling1(unsigned n, unsigned k, const Rational& r);

/// delta^k p evaluated at a point, where delta f(x) = f(x+1/2) - f(x-1/2).
Rational central_difference(unsigned k, const Polynomial& p,
                            const Rational& at);

/// T or Tr table by the explicit alternating sum.
TriangleTable second_kind_direct_table(Family family, int nmax,
                                       const Rational& r);
/// T or Tr table by the binomial convolution over a direct T table.
TriangleTable second_kind_convolution_table(Family family, int nmax,
                                            const Rational& r);
/// S2 table by its recurrence.
TriangleTable stirling2_table(int nmax);
/// S1r table from the coefficients of (x + r)_n.
TriangleTable r_stirling1_table(int nmax, const Rational& r);

/// T, Tr, S2 or S1r table by EGF coefficient extraction from the family's
/// generating series (built at the given truncation order):
///
///   T    (1/k!) (e^{t/2} - e^{-t/2})^k
///   Tr   (1/k!) e^{rt} (e^{t/2} - e^{-t/2})^k
///   S2   (1/k!) (e^t - 1)^k
///   S1r  (1/k!) (1+t)^r log(1+t)^k
///
/// Throws std::invalid_argument if nmax > order or the family is first-kind.
TriangleTable triangle_via_gf(Family family, int nmax, const Rational& r,
                              std::size_t order = kDefaultSeriesOrder);

}  // namespace cfact

#endif  // CFACT_CENTRAL_NUMBERS_HPP
