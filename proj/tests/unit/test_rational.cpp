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

#include <stdexcept>

#include "cfact/rational.hpp"
#include "oracles.hpp"

using cfact::Rational;

TEST_CASE("rational: lowest terms and sign normalization") {
  CHECK(Rational(6, 8).to_string() == "3/4");
  CHECK(Rational(3, -6).to_string() == "-1/2");
  CHECK(Rational(0, -5).to_string() == "0");
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(10, 5).is_integer());
  CHECK(Rational(10, 5).to_string() == "2");
}

TEST_CASE("rational: exact arithmetic") {
  const Rational a(1, 3);
  const Rational b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));
  CHECK(Rational(-3, 2).pow(3) == Rational(-27, 8));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(0).pow(0) == Rational(1));
  CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("rational: division by zero is an error") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
}

TEST_CASE("rational: parse accepts p and p/q only") {
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-3/2") == Rational(-3, 2));
  CHECK(Rational::parse("4/6") == Rational(2, 3));
  CHECK(Rational::parse("123456789012345678901234567890").to_string() ==
        "123456789012345678901234567890");
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
}

TEST_CASE("rational: wire form round-trips on random values") {
  oracle::RandomRationals gen(7);
  for (int i = 0; i < 200; ++i) {
    const Rational v = gen.next() * gen.next().pow(5) + gen.next();
    CHECK(Rational::parse(v.to_string()) == v);
  }
}

TEST_CASE("rational: factorial and binomial agree with product formulas") {
  for (unsigned n = 0; n <= 25; ++n) {
    CHECK(cfact::factorial(n) == oracle::fact(n));
    for (unsigned k = 0; k <= n + 1; ++k) {
      CHECK(cfact::binomial(n, k) == oracle::choose(n, k));
    }
  }
}
