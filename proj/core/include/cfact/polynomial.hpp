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

#ifndef CFACT_POLYNOMIAL_HPP
#define CFACT_POLYNOMIAL_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "cfact/rational.hpp"

namespace cfact {

/// Dense univariate polynomial over the rationals, index = power of x.
///
/// Canonical form has no trailing zero coefficients; the zero polynomial
/// stores no coefficients and has degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& value);
  /// x^n
  static Polynomial monomial(std::size_t n);
  /// x + c
  static Polynomial linear(const Rational& c);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Rational> coeffs() const { return coeffs_; }
  /// Coefficient of x^k; zero above the degree.
  Rational coeff(std::size_t k) const;

  Rational evaluate(const Rational& x) const;
  /// p(x + c), by exact binomial re-expansion.
  Polynomial shift(const Rational& c) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    return a -= b;
  }
  friend Polynomial operator*(Polynomial a, const Rational& s) {
    return a *= s;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

}  // namespace cfact

#endif  // CFACT_POLYNOMIAL_HPP
