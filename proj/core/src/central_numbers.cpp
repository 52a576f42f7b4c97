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

#include "cfact/central_numbers.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cfact {

namespace {

using Rows = std::vector<std::vector<Rational>>;

Rows empty_rows(int nmax) {
  if (nmax < 0) throw std::invalid_argument("nmax must be >= 0");
  Rows rows(static_cast<std::size_t>(nmax) + 1);
  for (std::size_t n = 0; n < rows.size(); ++n) rows[n].resize(n + 1);
  return rows;
}

Rational signed_binomial(unsigned k, unsigned l) {
  Rational c = binomial(k, l);
  return (k - l) % 2 == 0 ? c : -c;
}

void require_second_kind(Family family, const char* what) {
  if (family != Family::T && family != Family::Tr) {
    throw std::invalid_argument(std::string(what) + ": family " +
                                std::string(to_string(family)) +
                                " is not T or Tr");
  }
}

// Fills rows[n][k] = n! [t^n] prefactor * kernel^k / k!.
Rows extract_egf_triangle(const Series& prefactor, const Series& kernel,
                          int nmax) {
  Rows rows = empty_rows(nmax);
  Series power = Series::constant(1, kernel.order());
  for (int k = 0; k <= nmax; ++k) {
    if (k > 0) power = mul(power, kernel);
    const Series term =
        scale(mul(prefactor, power),
              Rational(1) / factorial(static_cast<unsigned>(k)));
    for (int n = k; n <= nmax; ++n) {
      rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
          egf_coeff(term, static_cast<std::size_t>(n));
    }
  }
  return rows;
}

}  // namespace

Polynomial central_factorial_poly(unsigned n) {
  if (n == 0) return Polynomial::constant(1);
  Polynomial p = Polynomial::monomial(1);
  for (unsigned j = 1; j < n; ++j) {
    // x + n/2 - j
    p = p * Polynomial::linear(Rational(static_cast<long>(n) - 2L * j, 2));
  }
  return p;
}

Polynomial falling_factorial_poly(unsigned n, const Rational& shift) {
  Polynomial p = Polynomial::constant(1);
  for (unsigned j = 0; j < n; ++j) {
    p = p * Polynomial::linear(shift - Rational(static_cast<long>(j)));
  }
  return p;
}

Series central_difference_kernel(std::size_t order) {
  const Series t = Series::identity(order);
  return sub(exp(scale(t, Rational(1, 2))), exp(scale(t, Rational(-1, 2))));
}

Rational central_factorial_second(unsigned n, unsigned k) {
  if (n < k) return Rational(0);
  Rational sum;
  for (unsigned l = 0; l <= k; ++l) {
    sum += signed_binomial(k, l) *
           Rational(2L * l - static_cast<long>(k), 2).pow(n);
  }
  return sum / factorial(k);
}

Rational r_central_factorial_second(unsigned n, unsigned k,
                                    const Rational& r) {
  if (n < k) return Rational(0);
  Rational sum;
  for (unsigned l = 0; l <= k; ++l) {
    const Rational point =
        Rational(static_cast<long>(l)) + r - Rational(static_cast<long>(k), 2);
    sum += signed_binomial(k, l) * point.pow(n);
  }
  return sum / factorial(k);
}

Rational r_central_factorial_second_convolution(unsigned n, unsigned k,
                                                const Rational& r) {
  if (n < k) {
    throw std::invalid_argument("convolution form needs n >= k");
  }
  Rational sum;
  for (unsigned l = k; l <= n; ++l) {
    sum += binomial(n, l) * central_factorial_second(l, k) * r.pow(n - l);
  }
  return sum;
}

Rational r_central_factorial_second_convolution(const TriangleTable& t_table,
                                                unsigned n, unsigned k,
                                                const Rational& r) {
  if (n < k) {
    throw std::invalid_argument("convolution form needs n >= k");
  }
  Rational sum;
  for (unsigned l = k; l <= n; ++l) {
    sum += binomial(n, l) *
           t_table.at(static_cast<int>(l), static_cast<int>(k)) * r.pow(n - l);
  }
  return sum;
}

Rational stirling2(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  return stirling2_table(static_cast<int>(n))
      .at(static_cast<int>(n), static_cast<int>(k));
}

Rational r_stirling1(unsigned n, unsigned k, const Rational& r) {
  if (k > n) throw std::invalid_argument("r_stirling1: k > n");
  return falling_factorial_poly(n, r).coeff(k);
}

Rational central_difference(unsigned k, const Polynomial& p,
                            const Rational& at) {
  Rational sum;
  for (unsigned l = 0; l <= k; ++l) {
    const Rational point = at + Rational(static_cast<long>(l)) -
                           Rational(static_cast<long>(k), 2);
    sum += signed_binomial(k, l) * p.evaluate(point);
  }
  return sum;
}

TriangleTable second_kind_direct_table(Family family, int nmax,
                                       const Rational& r) {
  require_second_kind(family, "second_kind_direct_table");
  const Rational shift = family == Family::T ? Rational(0) : r;
  Rows rows = empty_rows(nmax);
  for (int n = 0; n <= nmax; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto un = static_cast<unsigned>(n);
      const auto uk = static_cast<unsigned>(k);
      rows[un][uk] = family == Family::T
                         ? central_factorial_second(un, uk)
                         : r_central_factorial_second(un, uk, shift);
    }
  }
  return TriangleTable(family, shift, Path::Direct, std::move(rows));
}

TriangleTable second_kind_convolution_table(Family family, int nmax,
                                            const Rational& r) {
  require_second_kind(family, "second_kind_convolution_table");
  const Rational shift = family == Family::T ? Rational(0) : r;
  const TriangleTable base = second_kind_direct_table(Family::T, nmax, 0);
  Rows rows = empty_rows(nmax);
  for (int n = 0; n <= nmax; ++n) {
    for (int k = 0; k <= n; ++k) {
      rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
          r_central_factorial_second_convolution(
              base, static_cast<unsigned>(n), static_cast<unsigned>(k), shift);
    }
  }
  return TriangleTable(family, shift, Path::Convolution, std::move(rows));
}

TriangleTable stirling2_table(int nmax) {
  Rows rows = empty_rows(nmax);
  rows[0][0] = 1;
  for (std::size_t n = 1; n < rows.size(); ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      const Rational stay =
          k < n ? Rational(static_cast<long>(k)) * rows[n - 1][k] : Rational(0);
      rows[n][k] = stay + rows[n - 1][k - 1];
    }
  }
  return TriangleTable(Family::S2, 0, Path::Recurrence, std::move(rows));
}

TriangleTable r_stirling1_table(int nmax, const Rational& r) {
  Rows rows = empty_rows(nmax);
  for (int n = 0; n <= nmax; ++n) {
    const Polynomial p = falling_factorial_poly(static_cast<unsigned>(n), r);
    for (int k = 0; k <= n; ++k) {
      rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
          p.coeff(static_cast<std::size_t>(k));
    }
  }
  return TriangleTable(Family::S1r, r, Path::Polynomial, std::move(rows));
}

TriangleTable triangle_via_gf(Family family, int nmax, const Rational& r,
                              std::size_t order) {
  if (nmax < 0) throw std::invalid_argument("nmax must be >= 0");
  if (static_cast<std::size_t>(nmax) > order) {
    throw std::invalid_argument(
        "triangle_via_gf: nmax " + std::to_string(nmax) +
        " exceeds series order " + std::to_string(order));
  }
  // Order 0 cannot host t itself; one extra order changes nothing below it.
  const std::size_t work = order < 1 ? 1 : order;
  const Series t = Series::identity(work);
  const Series one = Series::constant(1, work);
  switch (family) {
    case Family::T:
      return TriangleTable(
          family, 0, Path::GeneratingFunction,
          extract_egf_triangle(one, central_difference_kernel(work), nmax));
    case Family::Tr:
      return TriangleTable(family, r, Path::GeneratingFunction,
                           extract_egf_triangle(exp(scale(t, r)),
                                                central_difference_kernel(work),
                                                nmax));
    case Family::S2:
      return TriangleTable(family, 0, Path::GeneratingFunction,
                           extract_egf_triangle(one, sub(exp(t), one), nmax));
    case Family::S1r: {
      const Series one_plus_t = add(one, t);
      return TriangleTable(family, r, Path::GeneratingFunction,
                           extract_egf_triangle(pow_rational(one_plus_t, r),
                                                log(one_plus_t), nmax));
    }
    case Family::t:
    case Family::tr:
      break;
  }
  throw std::invalid_argument("triangle_via_gf: first-kind family " +
                              std::string(to_string(family)) +
                              " is built by the first_kind module");
}

}  // namespace cfact
