#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crag/univariate.hpp"

using namespace crag;

namespace {
UPoly upoly(std::initializer_list<long> cs) {
  std::vector<Rational> v;
  for (long c : cs) v.emplace_back(c);
  return UPoly(std::move(v));
}
}  // namespace

TEST_CASE("sturm counts: spec fixtures") {
  CHECK(sturm_count_all(upoly({-1, 0, 1})) == 2);   // x^2 - 1
  CHECK(sturm_count_all(upoly({1, 0, 1})) == 0);    // x^2 + 1
  CHECK(sturm_count_all(upoly({1, -2, 1})) == 1);   // (x-1)^2, distinct roots
}

TEST_CASE("sturm counts on intervals") {
  UPoly p = upoly({0, -1, 0, 1});  // x^3 - x = x(x-1)(x+1)
  SturmChain s = SturmChain::build(p);
  CHECK(s.count_roots_all() == 3);
  CHECK(s.count_roots(Rational(0), Rational(2)) == 1);          // (0, 2]
  CHECK(s.count_roots(Rational(-2), Rational(0)) == 2);         // (-2, 0] includes -1, 0
  CHECK(s.count_roots_below(Rational(-1)) == 1);
}

TEST_CASE("isolation finds all roots with disjoint intervals") {
  UPoly p = upoly({0, -1, 0, 1});
  auto roots = isolate_real_roots(p);
  REQUIRE(roots.size() == 3);
  for (size_t i = 0; i + 1 < roots.size(); ++i) CHECK(roots[i].hi <= roots[i + 1].lo);
  // refine and check values near -1, 0, 1
  UPoly sf = squarefree_part(p);
  std::vector<Rational> expect = {Rational(-1), Rational(0), Rational(1)};
  for (size_t i = 0; i < 3; ++i) {
    refine_root(sf, roots[i], Rational(1, 1024));
    CHECK(roots[i].exact);
    CHECK(roots[i].value == expect[i]);
  }
}

TEST_CASE("isolation of irrational roots: x^2 - 2") {
  UPoly p = upoly({-2, 0, 1});
  auto roots = isolate_real_roots(p);
  REQUIRE(roots.size() == 2);
  UPoly sf = squarefree_part(p);
  for (auto& r : roots) {
    refine_root(sf, r, Rational(1, 100));
    CHECK_FALSE(r.exact);
    CHECK(r.hi - r.lo <= Rational(1, 100));
  }
  // each interval brackets +-sqrt(2): lo^2 - 2 and hi^2 - 2 change sign
  for (const auto& r : roots) CHECK(sign(r.lo * r.lo - 2) * sign(r.hi * r.hi - 2) < 0);
  CHECK(roots[0].hi < 0);
  CHECK(roots[1].lo > 0);
}

TEST_CASE("squarefree decomposition (Yun)") {
  // (x-1)^2 (x+2)
  UPoly p = upoly({1, -2, 1}) * upoly({2, 1});
  auto dec = squarefree_decomposition(p);
  REQUIRE(dec.size() == 2);
  CHECK(dec[0].degree() == 1);  // multiplicity-1 part: x+2
  CHECK(dec[1].degree() == 1);  // multiplicity-2 part: x-1
  CHECK(dec[0].eval(Rational(-2)) == 0);
  CHECK(dec[1].eval(Rational(1)) == 0);
}

TEST_CASE("property: sturm count matches isolation on random squarefree polys") {
  SplitMix64 rng(2024);
  int done = 0;
  for (int iter = 0; done < 200 && iter < 400; ++iter) {
    int deg = 1 + static_cast<int>(rng.below(8));
    std::vector<Rational> c(deg + 1);
    for (int i = 0; i <= deg; ++i) c[i] = Rational(static_cast<long>(rng.below(101)) - 50);
    if (c[deg] == 0) c[deg] = 1;
    UPoly p(std::move(c));
    if (p.is_zero() || p.degree() < 1) continue;
    ++done;
    auto roots = isolate_real_roots(p);
    CHECK(static_cast<int>(roots.size()) == sturm_count_all(p));
    for (size_t i = 0; i + 1 < roots.size(); ++i) CHECK(roots[i].hi <= roots[i + 1].lo);
  }
  CHECK(done == 200);
}

TEST_CASE("simplest rational in interval") {
  CHECK(simplest_rational_in(Rational(1, 3), Rational(1, 2)) == Rational(1, 2));
  CHECK(simplest_rational_in(Rational(-1, 2), Rational(1, 3)) == Rational(0));
  CHECK(simplest_rational_in(Rational(7, 5), Rational(3, 2)) == Rational(3, 2));
  CHECK(simplest_rational_in(Rational(13, 10), Rational(7, 5)) == Rational(4, 3));
}
