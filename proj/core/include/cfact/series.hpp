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

#ifndef CFACT_SERIES_HPP
#define CFACT_SERIES_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "cfact/rational.hpp"

namespace cfact {

/// Truncated formal power series c_0 + c_1 t + ... + c_N t^N over the
/// rationals, exact modulo t^{N+1}.
///
/// Coefficients are raw (ordinary). Binary operations produce a result at
/// the smaller of the two input orders. Exponential generating function
/// semantics are confined to egf_coeff().
class Series {
 public:
  /// Throws std::invalid_argument on an empty list.
  static Series from_coeffs(std::vector<Rational> coeffs);
  static Series zero(std::size_t order);
  static Series constant(const Rational& value, std::size_t order);
  /// The series t; order must be at least 1.
  static Series identity(std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  std::span<const Rational> coeffs() const { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }

  /// Restriction to a lower order; throws if order exceeds the current one.
  Series truncate(std::size_t order) const;

  friend bool operator==(const Series&, const Series&) = default;

 private:
  explicit Series(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

  std::vector<Rational> coeffs_;
};

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series scale(const Series& a, const Rational& c);
Series mul(const Series& a, const Series& b);
/// a^k by repeated multiplication; a^0 is the constant 1.
Series pow(const Series& a, unsigned k);

/// exp(a); requires a zero constant term.
Series exp(const Series& a);
/// log(a); requires constant term 1.
Series log(const Series& a);
/// The square root with constant term 1; requires constant term 1.
Series sqrt(const Series& a);
/// a^q = exp(q log a); requires constant term 1.
Series pow_rational(const Series& a, const Rational& q);
/// outer(inner(t)); requires inner to have a zero constant term.
Series compose(const Series& outer, const Series& inner);

/// n! times the coefficient of t^n. Throws std::out_of_range if n > order.
Rational egf_coeff(const Series& a, std::size_t n);

}  // namespace cfact

#endif  // CFACT_SERIES_HPP
