#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crag/zerodim.hpp"

using namespace crag;

namespace {

QPoly parsep(int nvars, std::initializer_list<std::pair<std::vector<unsigned>, long>> terms) {
  QPoly p(nvars);
  for (auto& [e, c] : terms) p.add_term(e, Rational(c));
  return p;
}

QPoly circle() { return parsep(2, {{{2, 0}, 1}, {{0, 2}, 1}, {{0, 0}, -1}}); }

}  // namespace

TEST_CASE("sturm_count spec fixtures") {
  QPoly x2m1 = parsep(1, {{{2}, 1}, {{0}, -1}});
  QPoly x2p1 = parsep(1, {{{2}, 1}, {{0}, 1}});
  QPoly sq = parsep(1, {{{2}, 1}, {{1}, -2}, {{0}, 1}});
  CHECK(sturm_count(x2m1) == 2);
  CHECK(sturm_count(x2p1) == 0);
  CHECK(sturm_count(sq) == 1);
  CHECK_THROWS_AS(sturm_count(QPoly::zero(1)), Error);
}

TEST_CASE("is_zero_dimensional") {
  QPoly xmy = parsep(2, {{{1, 0}, 1}, {{0, 1}, -1}});
  CHECK(is_zero_dimensional(PolySystem::complex(2, {circle(), xmy})));
  CHECK_FALSE(is_zero_dimensional(PolySystem::complex(2, {circle()})));
  CHECK(is_zero_dimensional(PolySystem::complex(1, {QPoly::constant(1, Rational(1))})));
}

TEST_CASE("eliminant fixtures") {
  // {x^2 + y^2 - 1, y}: eliminant has the two intersection values
  QPoly y = QPoly::variable(2, 1);
  Eliminant e = eliminant(PolySystem::complex(2, {circle(), y}), 42);
  CHECK(e.q.degree() == 2);

  // {x - 3}
  QPoly xm3 = parsep(1, {{{1}, 1}, {{0}, -3}});
  Eliminant e2 = eliminant(PolySystem::complex(1, {xm3}), 42);
  CHECK(e2.q.degree() == 1);

  // {x^2, y^2}: single solution (the origin)
  QPoly x2 = parsep(2, {{{2, 0}, 1}});
  QPoly y2 = parsep(2, {{{0, 2}, 1}});
  Eliminant e3 = eliminant(PolySystem::complex(2, {x2, y2}), 42);
  CHECK(e3.q.degree() == 1);
}

TEST_CASE("count_points spec fixtures") {
  QPoly xmy = parsep(2, {{{1, 0}, 1}, {{0, 1}, -1}});
  CHECK(count_points(PolySystem::complex(2, {circle(), xmy})) == CountResult::finite(2));

  QPoly x2p1 = parsep(1, {{{2}, 1}, {{0}, 1}});
  CHECK(count_points(PolySystem::complex(1, {x2p1})) == CountResult::finite(2));
  CHECK(count_points(PolySystem::real(1, {x2p1})) == CountResult::finite(0));
  CHECK(count_points(PolySystem::real(2, {circle()})) == CountResult::inf());
}

TEST_CASE("count_points edge conventions") {
  // empty system over R^n (n>=1) is infinite; over R^0 it is 1
  PolySystem empty1;
  empty1.field = Field::Real;
  empty1.nvars = 1;
  CHECK(count_points(empty1) == CountResult::inf());
  PolySystem empty0;
  empty0.field = Field::Real;
  empty0.nvars = 0;
  CHECK(count_points(empty0) == CountResult::finite(1));
  // unit ideal: empty set
  CHECK(count_points(PolySystem::complex(2, {QPoly::constant(2, Rational(1))})) ==
        CountResult::finite(0));
}

TEST_CASE("real solving: two transversal curves") {
  // circle and line x = y: two real points
  QPoly xmy = parsep(2, {{{1, 0}, 1}, {{0, 1}, -1}});
  CHECK(count_points(PolySystem::real(2, {circle(), xmy})) == CountResult::finite(2));

  auto boxes = isolate_real_points(PolySystem::real(2, {circle(), xmy}), Rational(1, 100));
  REQUIRE(boxes.size() == 2);
  for (const auto& b : boxes) {
    CHECK(b.box.size() == 2);
    // both coordinates equal and near +-sqrt(1/2)
    CHECK(b.box[0].width() <= Rational(1, 100));
  }
  CHECK(boxes_disjoint(boxes[0].box, boxes[1].box));
}

TEST_CASE("isolate fixtures from the spec") {
  // {x^2 - 2}: two boxes
  QPoly x2m2 = parsep(1, {{{2}, 1}, {{0}, -2}});
  auto b1 = isolate_real_points(PolySystem::real(1, {x2m2}), Rational(1, 100));
  REQUIRE(b1.size() == 2);
  CHECK(b1[0].box[0].hi < 0);
  CHECK(b1[1].box[0].lo > 0);

  // {x, y}: one rational box at the origin
  auto b2 = isolate_real_points(
      PolySystem::real(2, {QPoly::variable(2, 0), QPoly::variable(2, 1)}), Rational(1, 100));
  REQUIRE(b2.size() == 1);
  CHECK(b2[0].rational);
  CHECK(b2[0].point == std::vector<Rational>{Rational(0), Rational(0)});

  // {x^2 + 1}: no real points
  QPoly x2p1 = parsep(1, {{{2}, 1}, {{0}, 1}});
  CHECK(isolate_real_points(PolySystem::real(1, {x2p1}), Rational(1, 100)).empty());
}

TEST_CASE("real solving handles branch splits: {xy, x - y}") {
  QPoly xy = parsep(2, {{{1, 1}, 1}});
  QPoly xmy = parsep(2, {{{1, 0}, 1}, {{0, 1}, -1}});
  CHECK(count_points(PolySystem::real(2, {xy, xmy})) == CountResult::finite(1));
  // {xy} alone is one-dimensional
  CHECK(count_points(PolySystem::real(2, {xy})) == CountResult::inf());
}

TEST_CASE("negative_eigenvalues fixtures") {
  QMat d(2, 2);
  d << Rational(2), Rational(0), Rational(0), Rational(-3);
  CHECK(negative_eigenvalues(d) == 1);
  QMat offdiag(2, 2);
  offdiag << Rational(0), Rational(1), Rational(1), Rational(0);
  CHECK(negative_eigenvalues(offdiag) == 1);
  QMat eye = QMat::Zero(3, 3);
  for (int i = 0; i < 3; ++i) eye(i, i) = 1;
  CHECK(negative_eigenvalues(eye) == 0);
  QMat notsym(2, 2);
  notsym << Rational(0), Rational(1), Rational(2), Rational(0);
  CHECK_THROWS_AS(negative_eigenvalues(notsym), Error);
}

TEST_CASE("inertia identity on random symmetric matrices") {
  SplitMix64 rng(5150);
  for (int iter = 0; iter < 200; ++iter) {
    int n = 1 + static_cast<int>(rng.below(5));
    QMat m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        Rational v = make_rat(rng.symmetric_nonzero(9), 1 + static_cast<long>(rng.below(3)));
        if (rng.below(4) == 0) v = 0;
        m(i, j) = v;
        m(j, i) = v;
      }
    int neg = negative_eigenvalues(m);
    QMat mneg = m;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) mneg(i, j) = -m(i, j);
    int pos = negative_eigenvalues(mneg);
    int ker = matrix_kernel_dim(m);
    CHECK(neg + pos + ker == n);
  }
}

TEST_CASE("count invariance under linear change of variables") {
  SplitMix64 rng(777);
  int checked = 0;
  for (int iter = 0; iter < 60 && checked < 25; ++iter) {
    // random zero-dim system: {q1(x), q2(y)} sheared
    UPoly q1, q2;
    {
      std::vector<Rational> c1(3), c2(3);
      for (auto* c : {&c1, &c2})
        for (auto& v : *c) v = Rational(rng.symmetric_nonzero(5));
      q1 = UPoly(c1);
      q2 = UPoly(c2);
      if (q1.degree() < 1 || q2.degree() < 1) continue;
    }
    QPoly p1 = q1.to_sparse(2, 0), p2 = q2.to_sparse(2, 1);
    CountResult before = count_points(PolySystem::complex(2, {p1, p2}));
    // invertible substitution x -> x + 2y, y -> y
    QPoly sub = QPoly::variable(2, 0) + QPoly::variable(2, 1).scaled(2);
    QPoly t1 = p1.substitute(0, sub), t2 = p2.substitute(0, sub);
    CountResult after = count_points(PolySystem::complex(2, {t1, t2}));
    CHECK(before == after);
    ++checked;
  }
  CHECK(checked >= 20);
}

TEST_CASE("complex count of a single univariate equals distinct roots") {
  SplitMix64 rng(31337);
  for (int iter = 0; iter < 40; ++iter) {
    int deg = 1 + static_cast<int>(rng.below(6));
    std::vector<Rational> c(static_cast<size_t>(deg) + 1);
    for (auto& v : c) v = Rational(rng.symmetric_nonzero(9));
    UPoly p(c);
    if (p.degree() < 1) continue;
    QPoly sp = p.to_sparse(1, 0);
    CountResult r = count_points(PolySystem::complex(1, {sp}));
    CHECK(r == CountResult::finite(squarefree_part(p).degree()));
  }
}
