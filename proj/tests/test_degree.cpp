#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crag/degree.hpp"

using namespace crag;

namespace {
QPoly circle() {
  QPoly p(2);
  p.add_term({2, 0}, 1);
  p.add_term({0, 2}, 1);
  p.add_term({0, 0}, -1);
  return p;
}
}  // namespace

TEST_CASE("slice: fixtures") {
  AffineSubspace line;
  line.n = 2;
  line.d = 1;
  line.a = {Rational(-1), Rational(0), Rational(1)};  // y - 1 = 0
  PolySystem s = slice(PolySystem::complex(2, {circle()}), line);
  CHECK(s.polys.size() == 2);

  AffineSubspace codim0;
  codim0.n = 2;
  codim0.d = 0;
  PolySystem s0 = slice(PolySystem::complex(2, {circle()}), codim0);
  CHECK(s0.polys.size() == 1);

  AffineSubspace wrong;
  wrong.n = 3;
  wrong.d = 0;
  CHECK_THROWS_AS(slice(PolySystem::complex(2, {circle()}), wrong), Error);
}

TEST_CASE("dimension fixtures") {
  CHECK(dimension(PolySystem::complex(2, {circle()}), 42) == 1);
  CHECK(dimension(PolySystem::complex(2, {QPoly::variable(2, 0), QPoly::variable(2, 1)}), 42) == 0);
  CHECK(dimension(PolySystem::complex(2, {QPoly::constant(2, Rational(1))}), 42) == -1);
  // the whole space: all-zero system
  CHECK(dimension(PolySystem::complex(2, {QPoly::zero(2)}), 42) == 2);
}

TEST_CASE("transversality certificates") {
  // Z(y - x^2) with the line y = 1: two smooth transversal points
  QPoly par(2);
  par.add_term({0, 1}, 1);
  par.add_term({2, 0}, -1);
  AffineSubspace l1;
  l1.n = 2;
  l1.d = 1;
  l1.a = {Rational(-1), Rational(0), Rational(1)};  // y - 1
  TransversalityCertificate c1 = transversality_check(PolySystem::complex(2, {par}), l1);
  CHECK(c1.verdict);
  CHECK(c1.point_count == 2);

  // tangent line y = 0: fails
  AffineSubspace l0;
  l0.n = 2;
  l0.d = 1;
  l0.a = {Rational(0), Rational(0), Rational(1)};  // y
  TransversalityCertificate c0 = transversality_check(PolySystem::complex(2, {par}), l0);
  CHECK_FALSE(c0.verdict);
  CHECK_FALSE(c0.smooth_ok);

  // circle with the line x = 2: two smooth complex points, no infinity issue
  AffineSubspace lx2;
  lx2.n = 2;
  lx2.d = 1;
  lx2.a = {Rational(-2), Rational(1), Rational(0)};  // x - 2
  TransversalityCertificate c2 = transversality_check(PolySystem::complex(2, {circle()}), lx2);
  CHECK(c2.verdict);
  CHECK(c2.point_count == 2);
}

TEST_CASE("geometric_degree fixtures") {
  DegreeResult circ = geometric_degree(PolySystem::complex(2, {circle()}), 42);
  CHECK(circ.dim == 1);
  CHECK(circ.degree == 2);
  CHECK(circ.certified);

  QPoly xy(2);
  xy.add_term({1, 1}, 1);
  DegreeResult lines = geometric_degree(PolySystem::complex(2, {xy}), 42);
  CHECK(lines.dim == 1);
  CHECK(lines.degree == 2);

  QPoly xm3(1);
  xm3.add_term({1}, 1);
  xm3.add_term({0}, -3);
  DegreeResult pt = geometric_degree(PolySystem::complex(1, {xm3}), 42);
  CHECK(pt.dim == 0);
  CHECK(pt.degree == 1);

  DegreeResult empty = geometric_degree(PolySystem::complex(1, {QPoly::constant(1, Rational(1))}), 42);
  CHECK(empty.dim == -1);
  CHECK(empty.degree == 0);
}

TEST_CASE("degree of products of random affine forms") {
  SplitMix64 rng(31415);
  for (int k = 1; k <= 4; ++k) {
    // product of k random affine forms in C^2, pairwise nonproportional
    QPoly prod = QPoly::constant(2, Rational(1));
    std::vector<std::pair<long, long>> dirs;
    for (int i = 0; i < k; ++i) {
      long a = 0, b = 0;
      while (true) {
        a = rng.symmetric_nonzero(6);
        b = rng.symmetric_nonzero(6);
        bool fresh = true;
        for (auto& [pa, pb] : dirs) fresh = fresh && (pa * b != pb * a);
        if (fresh) break;
      }
      dirs.emplace_back(a, b);
      QPoly form = QPoly::variable(2, 0).scaled(Rational(a)) +
                   QPoly::variable(2, 1).scaled(Rational(b)) +
                   QPoly::constant(2, Rational(rng.symmetric_nonzero(9)));
      prod = prod * form;
    }
    DegreeResult r = geometric_degree(PolySystem::complex(2, {prod}), 271 + static_cast<uint64_t>(k));
    CHECK(r.dim == 1);
    CHECK(r.degree == k);
    CHECK(r.certified);
  }
}

TEST_CASE("degree determinism and seed stability") {
  for (uint64_t seed : {7ULL, 8ULL, 9ULL}) {
    DegreeResult a = geometric_degree(PolySystem::complex(2, {circle()}), seed);
    DegreeResult b = geometric_degree(PolySystem::complex(2, {circle()}), seed);
    CHECK(a.degree == b.degree);
    CHECK(a.degree == 2);
    CHECK(a.certified);
  }
}
