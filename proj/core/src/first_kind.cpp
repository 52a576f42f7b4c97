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

#include "cfact/first_kind.hpp"

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

std::size_t checked_order(int nmax, std::size_t order) {
  if (nmax < 0) throw std::invalid_argument("nmax must be >= 0");
  if (static_cast<std::size_t>(nmax) > order) {
    throw std::invalid_argument("first-kind gf table: nmax " +
                                std::to_string(nmax) +
                                " exceeds series order " +
                                std::to_string(order));
  }
  return order < 1 ? 1 : order;
}

TriangleTable gf_table(Family family, int nmax, const Rational& r,
                       std::size_t order) {
  const std::size_t work = checked_order(nmax, order);
  const Series kernel = central_log_kernel(work);
  const Series prefactor =
      r.is_zero() ? Series::constant(1, work)
                  : pow_rational(central_factorial_base(work), Rational(2) * r);
  Rows rows = empty_rows(nmax);
  Series power = Series::constant(1, work);
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
  return TriangleTable(family, family == Family::t ? Rational(0) : r,
                       Path::GeneratingFunction, std::move(rows));
}

}  // namespace

Series central_factorial_base(std::size_t order) {
  const Series t = Series::identity(order);
  const Series one = Series::constant(1, order);
  const Series quarter_t2 = scale(mul(t, t), Rational(1, 4));
  return add(scale(t, Rational(1, 2)), sqrt(add(one, quarter_t2)));
}

Series central_log_kernel(std::size_t order) {
  return scale(log(central_factorial_base(order)), 2);
}

Rational central_factorial_first(unsigned n, unsigned k) {
  if (k > n) throw std::invalid_argument("central_factorial_first: k > n");
  return central_factorial_poly(n).coeff(k);
}

Rational r_central_factorial_first(unsigned n, unsigned k, const Rational& r) {
  if (k > n) throw std::invalid_argument("r_central_factorial_first: k > n");
  return central_factorial_poly(n).shift(r).coeff(k);
}

TriangleTable first_kind_poly_table(Family family, int nmax,
                                    const Rational& r) {
  if (family != Family::t && family != Family::tr) {
    throw std::invalid_argument("first_kind_poly_table: family " +
                                std::string(to_string(family)) +
                                " is not t or tr");
  }
  const Rational shift = family == Family::t ? Rational(0) : r;
  Rows rows = empty_rows(nmax);
  for (int n = 0; n <= nmax; ++n) {
    const Polynomial p =
        central_factorial_poly(static_cast<unsigned>(n)).shift(shift);
    for (int k = 0; k <= n; ++k) {
      rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
          p.coeff(static_cast<std::size_t>(k));
    }
  }
  return TriangleTable(family, shift, Path::Polynomial, std::move(rows));
}

TriangleTable central_factorial_first_gf_table(int nmax, std::size_t order) {
  return gf_table(Family::t, nmax, 0, order);
}

TriangleTable r_central_factorial_first_gf_table(int nmax, const Rational& r,
                                                 std::size_t order) {
  return gf_table(Family::tr, nmax, r, order);
}

TriangleTable r_central_factorial_first_recurrence_table(int nmax,
                                                         const Rational& r) {
  Rows rows = empty_rows(nmax);
  rows[0][0] = 1;
  if (nmax >= 1) {
    rows[1][0] = r;
    rows[1][1] = 1;
  }
  const Rational two_r = Rational(2) * r;
  const Rational r_squared = r * r;
  // Row m = n + 1 from row n - 1.
  for (int m = 2; m <= nmax; ++m) {
    const int n = m - 1;
    const auto& prev = rows[static_cast<std::size_t>(n - 1)];
    const auto cell = [&prev](int k) {
      return k >= 0 && k < static_cast<int>(prev.size())
                 ? prev[static_cast<std::size_t>(k)]
                 : Rational(0);
    };
    const Rational shrink =
        r_squared - Rational(static_cast<long>(n) - 1, 2).pow(2);
    auto& out = rows[static_cast<std::size_t>(m)];
    for (int k = 0; k <= m; ++k) {
      out[static_cast<std::size_t>(k)] =
          cell(k - 2) + two_r * cell(k - 1) + shrink * cell(k);
    }
  }
  return TriangleTable(Family::tr, r, Path::Recurrence, std::move(rows));
}

}  // namespace cfact
