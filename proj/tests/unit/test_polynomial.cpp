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

#include <doctest.h>

#include <vector>

#include "cfact/polynomial.hpp"
#include "oracles.hpp"

using cfact::Polynomial;
using cfact::Rational;

namespace {

Polynomial random_poly(oracle::RandomRationals& gen, std::size_t degree) {
  return Polynomial(gen.series(degree, gen.next()));
}

// sum_k c_k x^k with explicit powers.
Rational evaluate_by_powers(const Polynomial& p, const Rational& x) {
  Rational out(0);
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    out += p.coeffs()[k] * x.pow(static_cast<long>(k));
  }
  return out;
}

}  // namespace

TEST_CASE("polynomial: canonical form drops trailing zeros") {
  const Polynomial p({Rational(1), Rational(2), Rational(0), Rational(0)});
  CHECK(p.degree() == 1);
  CHECK(p.coeff(5) == Rational(0));
  CHECK(Polynomial({Rational(0)}).is_zero());
  CHECK(Polynomial().degree() == -1);
  CHECK(Polynomial::constant(0).is_zero());
  CHECK(Polynomial::monomial(3).degree() == 3);
  CHECK(Polynomial::linear(Rational(1, 2)) ==
        Polynomial({Rational(1, 2), Rational(1)}));
  const Polynomial q = Polynomial::monomial(2) - Polynomial::monomial(2);
  CHECK(q.is_zero());
}

TEST_CASE("polynomial: products and shifts") {
  // (x - 1/2)(x + 1/2) = x^2 - 1/4
  const Polynomial p =
      Polynomial::linear(Rational(-1, 2)) * Polynomial::linear(Rational(1, 2));
  CHECK(p == Polynomial({Rational(-1, 4), Rational(0), Rational(1)}));
  CHECK(p.evaluate(Rational(1, 2)) == Rational(0));
  // (x+1)^2 - 1/4
  CHECK(p.shift(1) == Polynomial({Rational(3, 4), Rational(2), Rational(1)}));
  CHECK((p * Rational(4)).coeff(0) == Rational(-1));
  CHECK((p * Polynomial()).is_zero());
}

TEST_CASE("polynomial property: evaluation, shift and ring laws") {
  oracle::RandomRationals gen(31);
  for (int trial = 0; trial < 30; ++trial) {
    const Polynomial a = random_poly(gen, gen.order(0, 8));
    const Polynomial b = random_poly(gen, gen.order(0, 8));
    const Rational x = gen.next();
    const Rational c = gen.next();
    CHECK(a.evaluate(x) == evaluate_by_powers(a, x));
    CHECK(a.shift(c).evaluate(x) == a.evaluate(x + c));
    CHECK(a.shift(c).shift(-c) == a);
    CHECK((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
    CHECK((a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x));
    CHECK(a * b == b * a);
  }
}
