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

#ifndef CFACT_BELL_HPP
#define CFACT_BELL_HPP

#include <vector>

#include "cfact/polynomial.hpp"
#include "cfact/rational.hpp"

namespace cfact {

/// B_n^(c)(x) = sum_k T(n,k) x^k.
Polynomial central_bell_poly(unsigned n);

/// B_n^(c,r)(x) = sum_k T_r(n+r,k+r) x^k.
Polynomial r_central_bell_poly(unsigned n, const Rational& r);

/// sum_l C(n,l) B_{n-l}^(c)(x) r^l.
Polynomial r_central_bell_via_binomial(unsigned n, const Rational& r);

/// sum_{l<=n} sum_{m<=l} x^m C(n,l) S2(l,m) (r - m/2)^{n-l}.
Polynomial r_central_bell_via_stirling(unsigned n, const Rational& r);

/// sum_k x^k (1/k!) (delta^k x^n)|_{x=r}.
Polynomial r_central_bell_via_difference(unsigned n, const Rational& r);

/// B_n^(c,r)(x) for n = 0..nmax at a fixed rational x, read off the EGF
/// e^{rt} e^{x (e^{t/2} - e^{-t/2})}.
std::vector<Rational> r_central_bell_gf_values(unsigned nmax,
                                               const Rational& r,
                                               const Rational& x);

struct DobinskiResult {
  double value = 0.0;
  /// Number of anti-diagonals m = l + j summed (m = 0 .. terms_used - 1).
  int terms_used = 0;
  /// |d_M| for the last diagonal sum d_M that was added.
  double last_term_magnitude = 0.0;
  /// sum_j |term(M, j)| for the last diagonal; the stopping quantity.
  double last_diagonal_bound = 0.0;
  bool converged = false;
};

/// Evaluates B_n^(c)(x) from the double series
///
///   sum_{l,j>=0} C(l+j,j) (-1)^j (1/(l+j)!) ((l-j)/2)^n x^{l+j}
///
/// summed along anti-diagonals m = l + j. Stops after diagonal m >= 1 once
/// the diagonal's absolute mass sum_j |term| drops below the tolerance and
/// is smaller than the previous diagonal's, or after max_terms diagonals.
/// Throws std::invalid_argument for x <= 0 or max_terms < 1.
DobinskiResult dobinski_eval(unsigned n, double x, int max_terms = 200,
                             double tolerance = 1e-12);

}  // namespace cfact

#endif  // CFACT_BELL_HPP
