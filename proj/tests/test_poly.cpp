#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crag/poly.hpp"

using namespace crag;

namespace {

QPoly circle2() {
  // x^2 + y^2 - 1
  QPoly p(2);
  p.add_term({2, 0}, 1);
  p.add_term({0, 2}, 1);
  p.add_term({0, 0}, -1);
  return p;
}

std::vector<Rational> pt(std::initializer_list<Rational> xs) { return xs; }

}  // namespace

TEST_CASE("evaluate: unit circle fixtures") {
  QPoly p = circle2();
  CHECK(p.evaluate(pt({1, 0})) == 0);
  CHECK(p.evaluate(pt({0, 0})) == -1);
  QPoly xy = QPoly::variable(2, 0) * QPoly::variable(2, 1);
  CHECK(xy.evaluate(pt({Rational(2, 3), Rational(3, 2)})) == 1);
  CHECK_THROWS_AS(p.evaluate(pt({1})), Error);
}

TEST_CASE("partial derivatives") {
  QPoly p = circle2();
  QPoly px = p.derivative(0);
  QPoly expect = QPoly::variable(2, 0).scaled(2);
  CHECK(px == expect);

  QPoly q = QPoly::variable(2, 0) * QPoly::variable(2, 1) * QPoly::variable(2, 1);
  CHECK(q.derivative(1) == QPoly::variable(2, 0).scaled(2) * QPoly::variable(2, 1));

  QPoly y3 = QPoly::variable(2, 1).pow(3);
  CHECK(y3.derivative(0).is_zero());
  CHECK_THROWS_AS(p.derivative(5), Error);
}

TEST_CASE("homogenize examples and round trip") {
  // p = x (n=1), E=4 -> X0^3 X1
  QPoly x = QPoly::variable(1, 0);
  QPoly h = x.homogenize(4);
  QPoly expect = QPoly::variable(2, 0).pow(3) * QPoly::variable(2, 1);
  CHECK(h == expect);

  QPoly c = circle2();
  QPoly hc = c.homogenize(2);
  QPoly e(3);
  e.add_term({0, 2, 0}, 1);
  e.add_term({0, 0, 2}, 1);
  e.add_term({2, 0, 0}, -1);
  CHECK(hc == e);

  QPoly xp1 = QPoly::variable(1, 0) + QPoly::constant(1, 1);
  QPoly h1 = xp1.homogenize(1);
  CHECK(h1 == QPoly::variable(2, 1) + QPoly::variable(2, 0));

  CHECK_THROWS_AS(c.homogenize(1), Error);
  CHECK_THROWS_AS(QPoly::zero(2).homogenize(3), Error);
}

TEST_CASE("homogenize: output homogeneous, dehomogenize recovers input") {
  SplitMix64 rng(7);
  for (int iter = 0; iter < 40; ++iter) {
    int n = 1 + static_cast<int>(rng.below(3));
    QPoly p(n);
    int terms = 1 + static_cast<int>(rng.below(5));
    for (int t = 0; t < terms; ++t) {
      Exponents e(n);
      for (int i = 0; i < n; ++i) e[i] = static_cast<unsigned>(rng.below(4));
      p.add_term(e, Rational(rng.symmetric_nonzero(9)));
    }
    if (p.is_zero()) continue;
    int E = p.degree() + static_cast<int>(rng.below(3));
    QPoly h = p.homogenize(E);
    for (const auto& [e, cc] : h.terms()) {
      int tot = 0;
      for (unsigned v : e) tot += static_cast<int>(v);
      CHECK(tot == E);
    }
    CHECK(h.dehomogenize() == p);
  }
}

TEST_CASE("combine") {
  QPoly x = QPoly::variable(2, 0), y = QPoly::variable(2, 1);
  QPoly sos = combine<Rational>({x, y}, CombineMode::SumOfSquares);
  CHECK(sos == x * x + y * y);
  CHECK(sos.evaluate(pt({0, 0})) == 0);

  QPoly x1 = QPoly::variable(1, 0);
  QPoly prod = combine<Rational>({x1, x1 - QPoly::constant(1, 1)}, CombineMode::Product);
  CHECK(prod.evaluate(pt({0})) == 0);
  CHECK(prod.evaluate(pt({1})) == 0);
  CHECK(prod.evaluate(pt({2})) != 0);

  QPoly sq = combine<Rational>({x1 - QPoly::constant(1, 1)}, CombineMode::SumOfSquares);
  CHECK(sq == (x1 - QPoly::constant(1, 1)) * (x1 - QPoly::constant(1, 1)));
  CHECK_THROWS_AS(combine<Rational>(std::vector<QPoly>{}, CombineMode::Product), Error);
}

TEST_CASE("ring identities at random points") {
  SplitMix64 rng(99);
  for (int iter = 0; iter < 60; ++iter) {
    int n = 1 + static_cast<int>(rng.below(3));
    auto rand_poly = [&]() {
      QPoly p(n);
      int terms = 1 + static_cast<int>(rng.below(4));
      for (int t = 0; t < terms; ++t) {
        Exponents e(n);
        for (int i = 0; i < n; ++i) e[i] = static_cast<unsigned>(rng.below(3));
        p.add_term(e, make_rat(rng.symmetric_nonzero(7), 1 + static_cast<long>(rng.below(3))));
      }
      return p;
    };
    QPoly p = rand_poly(), q = rand_poly();
    std::vector<Rational> x(n);
    for (int i = 0; i < n; ++i)
      x[i] = make_rat(rng.symmetric_nonzero(11), 1 + static_cast<long>(rng.below(4)));
    CHECK((p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x));
    CHECK((p + q).evaluate(x) == p.evaluate(x) + q.evaluate(x));
  }
}

TEST_CASE("inversion transform fixtures") {
  // p = y in R^2, center (0,1) -> x^2 + y^2 - y
  QPoly y = QPoly::variable(2, 1);
  QPoly f = inversion_transform(y, pt({0, 1}));
  QPoly expect(2);
  expect.add_term({2, 0}, 1);
  expect.add_term({0, 2}, 1);
  expect.add_term({0, 1}, -1);
  CHECK(primitive_part(f) == primitive_part(expect));

  // p = x - 1 in R^1, center 0 -> x - x^2 (zero set {0,1})
  QPoly xm1 = QPoly::variable(1, 0) - QPoly::constant(1, 1);
  QPoly g = inversion_transform(xm1, pt({0}));
  CHECK(g.evaluate(pt({0})) == 0);
  CHECK(g.evaluate(pt({1})) == 0);
  CHECK(g.degree() == 2);

  // center on the variety is rejected
  CHECK_THROWS_AS(inversion_transform(xm1, pt({1})), Error);
}

TEST_CASE("inversion transform: zero sets correspond under iota") {
  SplitMix64 rng(1234);
  QPoly c = circle2();
  std::vector<Rational> center = pt({2, 0});  // off the circle
  QPoly f = inversion_transform(c, center);
  for (int iter = 0; iter < 30; ++iter) {
    std::vector<Rational> x = {make_rat(rng.symmetric_nonzero(8), 1 + static_cast<long>(rng.below(5))),
                               make_rat(rng.symmetric_nonzero(8), 1 + static_cast<long>(rng.below(5)))};
    if (x == center) continue;
    // iota(x) = center + (x - center)/||x - center||^2
    Rational r2 = (x[0] - center[0]) * (x[0] - center[0]) + (x[1] - center[1]) * (x[1] - center[1]);
    std::vector<Rational> ix = {center[0] + (x[0] - center[0]) / r2,
                                center[1] + (x[1] - center[1]) / r2};
    CHECK((f.evaluate(x) == 0) == (c.evaluate(ix) == 0));
    // also spot-check the value relation f(x) = r2^d * c(iota(x))
    CHECK(f.evaluate(x) == pow_rat(r2, 2) * c.evaluate(ix));
  }
}

TEST_CASE("substitute and extend") {
  QPoly p = circle2();
  QPoly sub = p.substitute(1, QPoly::constant(2, Rational(1)));
  CHECK(sub == QPoly::variable(2, 0) * QPoly::variable(2, 0));
  QPoly ext = p.extend(1);
  CHECK(ext.nvars() == 3);
  CHECK(ext.evaluate(pt({1, 0, 5})) == 0);
}

TEST_CASE("gaussian rational arithmetic") {
  GaussianRational i(Rational(0), Rational(1));
  CHECK(i * i == GaussianRational(Rational(-1)));
  GaussianRational z(Rational(1, 2), Rational(-3));
  CHECK(z * conj(z) == GaussianRational(norm2(z)));
  CHECK((z / z) == GaussianRational(Rational(1)));

  GPoly p(1);
  p.add_term({2}, GaussianRational(Rational(1)));
  p.add_term({0}, GaussianRational(Rational(1)));  // x^2 + 1
  std::vector<GaussianRational> at = {i};
  CHECK(p.evaluate(at).is_zero());
}
