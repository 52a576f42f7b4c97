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
#include <vector>

#include "cfact/series.hpp"
#include "oracles.hpp"

using cfact::Rational;
using cfact::Series;

namespace {

Series from(const oracle::Coeffs& c) { return Series::from_coeffs(c); }

Series two_sinh_half(std::size_t order) {
  return from(oracle::two_sinh_half(order));
}

Series one_plus_t(std::size_t order) {
  return cfact::add(Series::constant(1, order), Series::identity(order));
}

// sum_k a^k / k! with naive products.
oracle::Coeffs exp_by_definition(const oracle::Coeffs& a) {
  oracle::Coeffs out(a.size());
  for (unsigned k = 0; k < a.size(); ++k) {
    const auto p = oracle::naive_pow(a, k);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += p[i] / oracle::fact(k);
  }
  return out;
}

}  // namespace

TEST_CASE("series: from_coeffs keeps order and coefficients") {
  const Series one = Series::from_coeffs({Rational(1)});
  CHECK(one.order() == 0);
  CHECK(one[0] == Rational(1));

  const Series t = Series::from_coeffs({Rational(0), Rational(1)});
  CHECK(t == Series::identity(1));

  // e^{t/2} - e^{-t/2} = t + t^3/24 + ...
  const Series s =
      Series::from_coeffs({Rational(0), Rational(1), Rational(0), Rational(1, 24)});
  CHECK(s == two_sinh_half(3));
  // and its half, sinh(t/2)
  const Series half = Series::from_coeffs(
      {Rational(0), Rational(1, 2), Rational(0), Rational(1, 48)});
  CHECK(cfact::scale(two_sinh_half(3), Rational(1, 2)) == half);

  CHECK_THROWS_AS(Series::from_coeffs({}), std::invalid_argument);
  CHECK_THROWS_AS(Series::identity(0), std::invalid_argument);
}

TEST_CASE("series: ring operations") {
  const Series t = Series::identity(2);
  const Series t2 = cfact::mul(t, t);
  CHECK(t2.order() == 2);
  CHECK(t2 == Series::from_coeffs({Rational(0), Rational(0), Rational(1)}));

  const Series s = two_sinh_half(4);
  CHECK(cfact::mul(s, s) ==
        Series::from_coeffs({Rational(0), Rational(0), Rational(1), Rational(0),
                             Rational(1, 12)}));
  CHECK(cfact::mul(s, s) == from(oracle::naive_mul(oracle::two_sinh_half(4),
                                                    oracle::two_sinh_half(4))));

  CHECK(cfact::add(s, cfact::scale(s, -1)) == Series::zero(4));
}

TEST_CASE("series: binary operations truncate to the smaller order") {
  const Series a = two_sinh_half(3);
  const Series b = two_sinh_half(7);
  CHECK(cfact::add(a, b).order() == 3);
  CHECK(cfact::mul(b, a).order() == 3);
  CHECK(cfact::compose(b, a).order() == 3);
  CHECK(cfact::add(a, b) == cfact::scale(a, 2));
}

TEST_CASE("series: exp") {
  const std::size_t order = 10;
  const Series e = cfact::exp(Series::identity(order));
  for (std::size_t n = 0; n <= order; ++n) {
    CHECK(e[n] == Rational(1) / oracle::fact(static_cast<unsigned>(n)));
  }
  CHECK(cfact::exp(Series::zero(5)) == Series::constant(1, 5));

  // exp(t + t^3/24) = 1 + t + t^2/2 + (1/6 + 1/24) t^3
  const Series es = cfact::exp(two_sinh_half(3));
  CHECK(es == Series::from_coeffs({Rational(1), Rational(1), Rational(1, 2),
                                   Rational(1, 6) + Rational(1, 24)}));
  CHECK(cfact::exp(two_sinh_half(12)) ==
        from(exp_by_definition(oracle::two_sinh_half(12))));

  CHECK_THROWS_AS(cfact::exp(Series::constant(1, 3)), std::domain_error);
}

TEST_CASE("series: log") {
  const std::size_t order = 9;
  const Series l = cfact::log(one_plus_t(order));
  CHECK(l[0] == Rational(0));
  for (std::size_t n = 1; n <= order; ++n) {
    const long sign = n % 2 == 1 ? 1 : -1;
    CHECK(l[n] == Rational(sign, static_cast<long>(n)));
  }
  CHECK(cfact::log(cfact::exp(Series::identity(8))) == Series::identity(8));

  const Series u = Series::from_coeffs(
      {Rational(1), Rational(0), Rational(1, 4), Rational(0), Rational(0)});
  CHECK(cfact::log(u) == Series::from_coeffs({Rational(0), Rational(0),
                                              Rational(1, 4), Rational(0),
                                              Rational(-1, 32)}));

  CHECK_THROWS_AS(cfact::log(Series::constant(2, 3)), std::domain_error);
  CHECK_THROWS_AS(cfact::log(Series::zero(3)), std::domain_error);
}

TEST_CASE("series: sqrt") {
  CHECK(cfact::sqrt(Series::constant(1, 4)) == Series::constant(1, 4));

  const Series u = Series::from_coeffs(
      {Rational(1), Rational(0), Rational(1, 4), Rational(0), Rational(0)});
  CHECK(cfact::sqrt(u) == Series::from_coeffs({Rational(1), Rational(0),
                                               Rational(1, 8), Rational(0),
                                               Rational(-1, 128)}));

  // binomial series (1 + t^2/4)^{1/2} at higher order
  const std::size_t order = 16;
  oracle::Coeffs expected(order + 1);
  for (unsigned j = 0; 2 * j <= order; ++j) {
    expected[2 * j] = oracle::choose(Rational(1, 2), j) * Rational(1, 4).pow(j);
  }
  oracle::Coeffs base(order + 1);
  base[0] = 1;
  base[2] = Rational(1, 4);
  CHECK(cfact::sqrt(from(base)) == from(expected));

  const Series a = Series::from_coeffs(
      {Rational(1), Rational(1), Rational(0), Rational(1), Rational(0),
       Rational(0)});
  const Series root = cfact::sqrt(a);
  CHECK(cfact::mul(root, root) == a);

  CHECK_THROWS_AS(cfact::sqrt(Series::constant(4, 2)), std::domain_error);
}

TEST_CASE("series: pow_rational") {
  const std::size_t order = 6;
  const Series x = one_plus_t(order);
  CHECK(cfact::pow_rational(x, 2) ==
        cfact::add(cfact::mul(x, x), Series::zero(order)));
  CHECK(cfact::pow_rational(x, 2) ==
        Series::from_coeffs({Rational(1), Rational(2), Rational(1), Rational(0),
                             Rational(0), Rational(0), Rational(0)}));
  CHECK(cfact::pow_rational(x, Rational(1, 2)) == cfact::sqrt(x));
  CHECK(cfact::mul(cfact::pow_rational(x, -1), x) == Series::constant(1, order));

  // generalized binomial theorem as the independent route
  for (const Rational q : {Rational(1, 3), Rational(-5, 2), Rational(7, 4)}) {
    oracle::Coeffs expected(order + 1);
    for (unsigned j = 0; j <= order; ++j) expected[j] = oracle::choose(q, j);
    CHECK(cfact::pow_rational(x, q) == from(expected));
  }

  CHECK_THROWS_AS(cfact::pow_rational(Series::zero(3), Rational(1, 2)),
                  std::domain_error);
}

TEST_CASE("series: compose") {
  const std::size_t order = 30;
  const Series t = Series::identity(order);
  const Series one = Series::constant(1, order);
  // f(t) = 2 log(t/2 + sqrt(1 + t^2/4)) assembled here from primitives
  const Series inner_sqrt =
      cfact::sqrt(cfact::add(one, cfact::scale(cfact::mul(t, t), Rational(1, 4))));
  const Series f = cfact::scale(
      cfact::log(cfact::add(cfact::scale(t, Rational(1, 2)), inner_sqrt)), 2);
  const Series f_inv = two_sinh_half(order);
  CHECK(cfact::compose(f, f_inv) == t);
  CHECK(cfact::compose(f_inv, f) == t);

  oracle::RandomRationals gen(11);
  const Series a = from(gen.series(8, gen.next()));
  CHECK(cfact::compose(a, Series::identity(8)) == a);
  const Series g = from(gen.series(8, 0));
  CHECK(cfact::compose(Series::identity(8), g) == g);

  // composition against exp: exp(g) == compose(exp(t), g)
  CHECK(cfact::compose(cfact::exp(Series::identity(8)), g) == cfact::exp(g));

  CHECK_THROWS_AS(cfact::compose(a, one), std::domain_error);
}

TEST_CASE("series: egf_coeff") {
  CHECK(cfact::egf_coeff(cfact::exp(Series::identity(8)), 5) == Rational(1));
  CHECK(cfact::egf_coeff(two_sinh_half(3), 3) == Rational(1, 4));
  CHECK(cfact::egf_coeff(Series::zero(6), 4) == Rational(0));
  CHECK_THROWS_AS(cfact::egf_coeff(Series::zero(3), 4), std::out_of_range);
}

TEST_CASE("series property: ring laws on random series") {
  oracle::RandomRationals gen(1234);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = gen.order(0, 12);
    const Series a = from(gen.series(n, gen.next()));
    const Series b = from(gen.series(n, gen.next()));
    const Series c = from(gen.series(n, gen.next()));
    CHECK(cfact::add(a, b) == cfact::add(b, a));
    CHECK(cfact::mul(a, b) == cfact::mul(b, a));
    CHECK(cfact::add(cfact::add(a, b), c) == cfact::add(a, cfact::add(b, c)));
    CHECK(cfact::mul(cfact::mul(a, b), c) == cfact::mul(a, cfact::mul(b, c)));
    CHECK(cfact::mul(a, cfact::add(b, c)) ==
          cfact::add(cfact::mul(a, b), cfact::mul(a, c)));
  }
}

TEST_CASE("series property: exp and log are inverse") {
  oracle::RandomRationals gen(99);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = gen.order(1, 12);
    const Series a = from(gen.series(n, 1));
    const Series b = from(gen.series(n, 0));
    CHECK(cfact::exp(cfact::log(a)) == a);
    CHECK(cfact::log(cfact::exp(b)) == b);
  }
}

TEST_CASE("series property: sqrt squares back, powers add") {
  oracle::RandomRationals gen(5);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = gen.order(1, 10);
    const Series a = from(gen.series(n, 1));
    const Series root = cfact::sqrt(a);
    CHECK(cfact::mul(root, root) == a);
    const Rational p = gen.next();
    const Rational q = gen.next();
    CHECK(cfact::mul(cfact::pow_rational(a, p), cfact::pow_rational(a, q)) ==
          cfact::pow_rational(a, p + q));
  }
}

TEST_CASE("series property: truncation consistency") {
  oracle::RandomRationals gen(2024);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t big = gen.order(4, 12);
    const std::size_t small = gen.order(1, big - 1);
    const Series a = from(gen.series(big, 1));
    const Series g = from(gen.series(big, 0));
    const Series h = from(gen.series(big, gen.next()));
    const auto check = [&](const Series& at_big, const Series& at_small) {
      CHECK(at_big.truncate(small) == at_small);
    };
    const Series as = a.truncate(small);
    const Series gs = g.truncate(small);
    const Series hs = h.truncate(small);
    check(cfact::mul(a, h), cfact::mul(as, hs));
    check(cfact::exp(g), cfact::exp(gs));
    check(cfact::log(a), cfact::log(as));
    check(cfact::sqrt(a), cfact::sqrt(as));
    check(cfact::pow_rational(a, Rational(2, 3)),
          cfact::pow_rational(as, Rational(2, 3)));
    check(cfact::compose(h, g), cfact::compose(hs, gs));
  }
  CHECK_THROWS_AS(Series::zero(2).truncate(3), std::invalid_argument);
}
