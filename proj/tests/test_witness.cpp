#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crag/poly.hpp"
#include "crag/witness.hpp"

using namespace crag;

TEST_CASE("alpha sequence fixtures") {
  auto a = alpha_sequence(2, 1, 1);
  REQUIRE(a.size() == 2);
  CHECK(a[0] == 2);
  CHECK(a[1] == 9);

  auto b = alpha_sequence(3, 2, 2);
  REQUIRE(b.size() == 3);
  CHECK(b[0] == 4);
  CHECK(b[1] == 193);
  CHECK(b[2] == 1340965);

  auto c = alpha_sequence(1, 3, 5);
  REQUIRE(c.size() == 1);
  CHECK(c[0] == 8);
}

TEST_CASE("alpha sequence is strictly increasing and bit-budgeted") {
  auto a = alpha_sequence(6, 1, 1);
  for (size_t i = 0; i + 1 < a.size(); ++i) CHECK(a[i] < a[i + 1]);
  WitnessOptions tight;
  tight.alpha_bit_budget = 64;
  CHECK_THROWS_AS(alpha_sequence(20, 8, 6, tight), Error);
}

TEST_CASE("alpha non-vanishing property (Lemma guarantee, sampled)") {
  // 200 seeded nonzero integer polynomials h in 3 variables, deg <= 3,
  // |coeff| < 16, evaluated at alpha_sequence(3, 4, 3): no vanishing.
  auto alpha = alpha_sequence(3, 4, 3);
  std::vector<Rational> at = {Rational(alpha[0]), Rational(alpha[1]), Rational(alpha[2])};
  SplitMix64 rng(4242);
  int built = 0;
  while (built < 200) {
    QPoly h(3);
    int terms = 1 + static_cast<int>(rng.below(6));
    for (int t = 0; t < terms; ++t) {
      Exponents e(3);
      unsigned total = 0;
      for (int i = 0; i < 3; ++i) {
        e[i] = static_cast<unsigned>(rng.below(4));
        total += e[i];
      }
      if (total > 3) continue;
      long c = static_cast<long>(rng.below(31)) - 15;
      h.add_term(e, Rational(c));
    }
    if (h.is_zero()) continue;
    ++built;
    CHECK(h.evaluate(at) != 0);
  }
}

TEST_CASE("qe bounds fixtures") {
  QeBounds b = qe_bounds(1, 2, 1, 3, 2, 1);
  CHECK(b.constant_factor == 2);
  CHECK(b.log_d == 11);  // ceil(2*2*log2(6))

  QeBounds c = qe_bounds(1, 1, 1, 1, 2, 1);
  CHECK(c.log_m == 2);  // ceil(2*1*1*log2(2))
}

TEST_CASE("qe bounds monotonicity probes") {
  SplitMix64 rng(9);
  for (int iter = 0; iter < 50; ++iter) {
    long k = 1 + static_cast<long>(rng.below(4));
    long n = 1 + static_cast<long>(rng.below(6));
    long w = 1 + static_cast<long>(rng.below(3));
    long m = 1 + static_cast<long>(rng.below(8));
    long delta = 2 + static_cast<long>(rng.below(6));
    long ell = 1 + static_cast<long>(rng.below(8));
    QeBounds base = qe_bounds(k, n, w, m, delta, ell);
    CHECK(qe_bounds(k, n, w, 2 * m, delta, ell).log_d >= base.log_d);
    CHECK(qe_bounds(k, n, w, m, 2 * delta, ell).log_d >= base.log_d);
    CHECK(qe_bounds(k, n + 1, w, m, delta, ell).log_d >= base.log_d);
    CHECK(qe_bounds(k, n, w, 2 * m, delta, ell).log_m >= base.log_m);
    CHECK(qe_bounds(k + 1, n, w, m, delta, ell).log_m >= base.log_m);
  }
}

TEST_CASE("witness sequences") {
  // PaperSLP with derived (L, D) = (1, 1): blocks of alpha_sequence(6, 1, 1)
  QeBounds tiny;
  tiny.log_d = 0;
  tiny.log_l = 0;
  WitnessSequence ws = witness_sequence(1, 2, WitnessMode::PaperSLP, 0, &tiny);
  REQUIRE(ws.vectors.size() == 3);
  auto flat = alpha_sequence(6, 1, 1);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j) {
      CHECK(ws.vectors[static_cast<size_t>(i)][static_cast<size_t>(j)] ==
            Rational(flat[static_cast<size_t>(2 * i + j)]));
      // PaperSLP outputs are integers
      CHECK(ws.vectors[static_cast<size_t>(i)][static_cast<size_t>(j)].get_den() == 1);
    }

  WitnessSequence r1 = witness_sequence(1, 2, WitnessMode::SeededRandom, 42, nullptr);
  WitnessSequence r2 = witness_sequence(1, 2, WitnessMode::SeededRandom, 42, nullptr);
  REQUIRE(r1.vectors.size() == 3);
  CHECK(r1.vectors == r2.vectors);  // determinism

  WitnessSequence p0 = witness_sequence(0, 3, WitnessMode::SeededRandom, 7, nullptr);
  CHECK(p0.vectors.size() == 1);
}

TEST_CASE("majority") {
  CHECK(majority<int>({2, 2, 3}) == 2);
  CHECK(majority<int>({5}) == 5);
  CHECK_THROWS_AS(majority<int>({1, 2, 3}), Error);
  CHECK_THROWS_AS(majority<int>({}), Error);
  std::vector<Int> xs = {Int(4), Int(4), Int(1), Int(4), Int(2)};
  CHECK(majority(xs) == 4);
}
