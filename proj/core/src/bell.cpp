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

#include "cfact/bell.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "cfact/central_numbers.hpp"
#include "cfact/series.hpp"

namespace cfact {

Polynomial central_bell_poly(unsigned n) {
  std::vector<Rational> c(n + 1);
  for (unsigned k = 0; k <= n; ++k) c[k] = central_factorial_second(n, k);
  return Polynomial(std::move(c));
}

Polynomial r_central_bell_poly(unsigned n, const Rational& r) {
  std::vector<Rational> c(n + 1);
  for (unsigned k = 0; k <= n; ++k) c[k] = r_central_factorial_second(n, k, r);
  return Polynomial(std::move(c));
}

Polynomial r_central_bell_via_binomial(unsigned n, const Rational& r) {
  Polynomial sum;
  for (unsigned l = 0; l <= n; ++l) {
    sum += central_bell_poly(n - l) * (binomial(n, l) * r.pow(l));
  }
  return sum;
}

Polynomial r_central_bell_via_stirling(unsigned n, const Rational& r) {
  const TriangleTable s2 = stirling2_table(static_cast<int>(n));
  std::vector<Rational> c(n + 1);
  for (unsigned l = 0; l <= n; ++l) {
    const Rational outer = binomial(n, l);
    for (unsigned m = 0; m <= l; ++m) {
      const Rational& s = s2.row(static_cast<int>(l))[m];
      if (s.is_zero()) continue;
      c[m] += outer * s * (r - Rational(static_cast<long>(m), 2)).pow(n - l);
    }
  }
  return Polynomial(std::move(c));
}

Polynomial r_central_bell_via_difference(unsigned n, const Rational& r) {
  const Polynomial power = Polynomial::monomial(n);
  std::vector<Rational> c(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    c[k] = central_difference(k, power, r) / factorial(k);
  }
  return Polynomial(std::move(c));
}

std::vector<Rational> r_central_bell_gf_values(unsigned nmax,
                                               const Rational& r,
                                               const Rational& x) {
  const std::size_t order = nmax < 1 ? 1 : nmax;
  const Series t = Series::identity(order);
  const Series exponent =
      add(scale(t, r), scale(central_difference_kernel(order), x));
  const Series gf = exp(exponent);
  std::vector<Rational> values(nmax + 1);
  for (unsigned n = 0; n <= nmax; ++n) values[n] = egf_coeff(gf, n);
  return values;
}

DobinskiResult dobinski_eval(unsigned n, double x, int max_terms,
                             double tolerance) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::invalid_argument("dobinski_eval: x must be positive");
  }
  if (max_terms < 1) {
    throw std::invalid_argument("dobinski_eval: max_terms must be >= 1");
  }
  const long double log_x = std::log(static_cast<long double>(x));
  long double total = 0.0L;
  long double previous_bound = std::numeric_limits<long double>::infinity();

  DobinskiResult result;
  for (int m = 0; m < max_terms; ++m) {
    long double diagonal = 0.0L;
    long double bound = 0.0L;
    for (int j = 0; j <= m; ++j) {
      const int twice_base = m - 2 * j;  // 2 * (l - j) / 2 with l = m - j
      if (twice_base == 0 && n > 0) continue;
      // x^m / (j! (m-j)!) * |(m-2j)/2|^n, in log space to avoid overflow.
      long double log_mag = m * log_x - std::lgamma(j + 1.0L) -
                            std::lgamma(m - j + 1.0L);
      if (n > 0) {
        log_mag += n * std::log(std::fabs(twice_base / 2.0L));
      }
      const long double mag = std::exp(log_mag);
      const bool negative =
          (j % 2 == 1) != (twice_base < 0 && n % 2 == 1);
      diagonal += negative ? -mag : mag;
      bound += mag;
    }
    total += diagonal;
    result.terms_used = m + 1;
    result.last_term_magnitude = static_cast<double>(std::fabs(diagonal));
    result.last_diagonal_bound = static_cast<double>(bound);
    if (m >= 1 && bound < tolerance && bound < previous_bound) {
      result.converged = true;
      break;
    }
    previous_bound = bound;
  }
  result.value = static_cast<double>(total);
  return result;
}

}  // namespace cfact
