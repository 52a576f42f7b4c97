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

#include "cfact/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cfact {

Series Series::from_coeffs(std::vector<Rational> coeffs) {
  if (coeffs.empty()) {
    throw std::invalid_argument("Series: coefficient list is empty");
  }
  return Series(std::move(coeffs));
}

Series Series::zero(std::size_t order) {
  return Series(std::vector<Rational>(order + 1));
}

Series Series::constant(const Rational& value, std::size_t order) {
  std::vector<Rational> c(order + 1);
  c[0] = value;
  return Series(std::move(c));
}

Series Series::identity(std::size_t order) {
  if (order < 1) throw std::invalid_argument("Series: t needs order >= 1");
  std::vector<Rational> c(order + 1);
  c[1] = 1;
  return Series(std::move(c));
}

Series Series::truncate(std::size_t order) const {
  if (order > this->order()) {
    throw std::invalid_argument("Series: cannot extend order " +
                                std::to_string(this->order()) + " to " +
                                std::to_string(order));
  }
  return Series(std::vector<Rational>(coeffs_.begin(),
                                      coeffs_.begin() + order + 1));
}

namespace {

std::size_t common_order(const Series& a, const Series& b) {
  return std::min(a.order(), b.order());
}

void require_constant(const Series& a, long expected, const char* op) {
  if (a[0] != Rational(expected)) {
    throw std::domain_error(std::string("Series::") + op +
                            ": constant term must be " +
                            std::to_string(expected) + ", got " +
                            a[0].to_string());
  }
}

}  // namespace

Series add(const Series& a, const Series& b) {
  const std::size_t n = common_order(a, b);
  std::vector<Rational> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) c[i] = a[i] + b[i];
  return Series::from_coeffs(std::move(c));
}

Series sub(const Series& a, const Series& b) {
  const std::size_t n = common_order(a, b);
  std::vector<Rational> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) c[i] = a[i] - b[i];
  return Series::from_coeffs(std::move(c));
}

Series scale(const Series& a, const Rational& s) {
  std::vector<Rational> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : c) x *= s;
  return Series::from_coeffs(std::move(c));
}

Series mul(const Series& a, const Series& b) {
  const std::size_t n = common_order(a, b);
  std::vector<Rational> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (b[j].is_zero()) continue;
      c[i + j] += a[i] * b[j];
    }
  }
  return Series::from_coeffs(std::move(c));
}

Series pow(const Series& a, unsigned k) {
  Series result = Series::constant(1, a.order());
  Series base = a;
  while (k != 0) {
    if (k & 1U) result = mul(result, base);
    k >>= 1U;
    if (k != 0) base = mul(base, base);
  }
  return result;
}

// b = exp(a) satisfies b' = a' b, so n b_n = sum_{k=1}^{n} k a_k b_{n-k}.
Series exp(const Series& a) {
  require_constant(a, 0, "exp");
  const std::size_t n = a.order();
  std::vector<Rational> b(n + 1);
  b[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    Rational acc;
    for (std::size_t k = 1; k <= m; ++k) {
      if (a[k].is_zero()) continue;
      acc += Rational(static_cast<long>(k)) * a[k] * b[m - k];
    }
    b[m] = acc / Rational(static_cast<long>(m));
  }
  return Series::from_coeffs(std::move(b));
}

// b = log(a) satisfies a b' = a', so
// m b_m = m a_m - sum_{k=1}^{m-1} k b_k a_{m-k}.
Series log(const Series& a) {
  require_constant(a, 1, "log");
  const std::size_t n = a.order();
  std::vector<Rational> b(n + 1);
  for (std::size_t m = 1; m <= n; ++m) {
    Rational acc = Rational(static_cast<long>(m)) * a[m];
    for (std::size_t k = 1; k < m; ++k) {
      if (a[m - k].is_zero()) continue;
      acc -= Rational(static_cast<long>(k)) * b[k] * a[m - k];
    }
    b[m] = acc / Rational(static_cast<long>(m));
  }
  return Series::from_coeffs(std::move(b));
}

Series sqrt(const Series& a) {
  require_constant(a, 1, "sqrt");
  const std::size_t n = a.order();
  std::vector<Rational> b(n + 1);
  b[0] = 1;
  const Rational half(1, 2);
  for (std::size_t m = 1; m <= n; ++m) {
    Rational acc = a[m];
    for (std::size_t k = 1; k < m; ++k) acc -= b[k] * b[m - k];
    b[m] = acc * half;
  }
  return Series::from_coeffs(std::move(b));
}

Series pow_rational(const Series& a, const Rational& q) {
  require_constant(a, 1, "pow_rational");
  return exp(scale(log(a), q));
}

// Horner in the outer coefficients; inner^k has valuation >= k so the
// truncation is exact.
Series compose(const Series& outer, const Series& inner) {
  require_constant(inner, 0, "compose");
  const std::size_t n = common_order(outer, inner);
  const Series g = inner.truncate(n);
  Series acc = Series::constant(outer[n], n);
  for (std::size_t i = n; i-- > 0;) {
    acc = add(mul(acc, g), Series::constant(outer[i], n));
  }
  return acc;
}

Rational egf_coeff(const Series& a, std::size_t n) {
  if (n > a.order()) {
    throw std::out_of_range("egf_coeff: n = " + std::to_string(n) +
                            " exceeds series order " +
                            std::to_string(a.order()));
  }
  return factorial(static_cast<unsigned>(n)) * a[n];
}

}  // namespace cfact
