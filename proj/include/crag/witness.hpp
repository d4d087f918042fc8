#ifndef CRAG_WITNESS_HPP
#define CRAG_WITNESS_HPP

#include <vector>

#include "crag/rational.hpp"
#include "crag/errors.hpp"

namespace crag {

struct WitnessOptions {
  size_t alpha_bit_budget = 1u << 20;  // total bits across the alpha vector
  int retry_budget = 16;               // seeds seed, seed+1, ... on failure
};

// alpha_1 = 2^L, alpha_j = 1 + alpha_1 (D+1)^(j-1) alpha_{j-1}^D.
// Guarantee: h(alpha) != 0 for every nonzero integer polynomial h with
// deg <= D and |coefficients| < 2^L. Values grow doubly exponentially;
// the bit budget turns runaway requests into BitBudgetExceeded.
inline std::vector<Int> alpha_sequence(int k, unsigned long L, unsigned long D,
                                       const WitnessOptions& opt = {}) {
  require(k >= 1 && L >= 1 && D >= 1, ErrorCode::InvariantViolation,
          "alpha_sequence needs k, L, D >= 1");
  std::vector<Int> alpha;
  alpha.reserve(static_cast<size_t>(k));
  require(L < opt.alpha_bit_budget, ErrorCode::BitBudgetExceeded, "alpha_1 too large");
  Int a1 = pow_int(Int(2), L);
  alpha.push_back(a1);
  size_t total_bits = bit_size(a1);
  Int dp1_pow(1);  // (D+1)^(j-1)
  for (int j = 2; j <= k; ++j) {
    dp1_pow *= Int(D + 1);
    // predicted size: bits(a1) + bits((D+1)^(j-1)) + D*bits(alpha_{j-1})
    size_t predicted = bit_size(a1) + bit_size(dp1_pow) + D * bit_size(alpha.back()) + 2;
    require(total_bits + predicted <= opt.alpha_bit_budget, ErrorCode::BitBudgetExceeded,
            "alpha_sequence exceeds the configured bit budget");
    Int prev_pow;
    mpz_pow_ui(prev_pow.get_mpz_t(), alpha.back().get_mpz_t(), D);
    Int next = 1 + a1 * dp1_pow * prev_pow;
    total_bits += bit_size(next);
    alpha.push_back(std::move(next));
  }
  return alpha;
}

// Parameter bounds of the quantifier-elimination theorem, evaluated with a
// configured constant policy (default: the 2^O(w) factor is 2^w, block
// sizes are the even split ceil(n/w)).
struct QeBounds {
  long log_d = 0, log_l = 0, log_m = 0;
  long k = 0, n = 0, w = 0, m = 0, delta = 0, ell = 0;
  long constant_factor = 0;  // the 2^O(w) policy value actually used

  Int derived_degree(const WitnessOptions& opt = {}) const {
    require(static_cast<size_t>(log_d) < opt.alpha_bit_budget, ErrorCode::BitBudgetExceeded,
            "derived degree too large");
    return pow_int(Int(2), static_cast<unsigned long>(log_d));
  }
  Int derived_bitsize(const WitnessOptions& opt = {}) const {
    require(static_cast<size_t>(log_l) < opt.alpha_bit_budget, ErrorCode::BitBudgetExceeded,
            "derived bit-size too large");
    return pow_int(Int(2), static_cast<unsigned long>(log_l));
  }
};

namespace wdetail {
// ceil(x * log2(N)) computed exactly as the bit position of N^x
inline long ceil_xlog2(long x, const Int& N) {
  require(x >= 0 && N >= 1, ErrorCode::InvariantViolation, "ceil_xlog2 domain");
  if (x == 0 || N == 1) return 0;
  Int p;
  mpz_pow_ui(p.get_mpz_t(), N.get_mpz_t(), static_cast<unsigned long>(x));
  size_t bits = bit_size(p);  // 2^(bits-1) <= p < 2^bits
  // exact power of two: log2 is integral
  if (mpz_scan1(p.get_mpz_t(), 0) == bits - 1) return static_cast<long>(bits - 1);
  return static_cast<long>(bits);
}
}  // namespace wdetail

inline QeBounds qe_bounds(long k, long n, long w, long m, long delta, long ell) {
  require(k >= 1 && n >= 1 && w >= 1 && m >= 1 && ell >= 1, ErrorCode::InvariantViolation,
          "qe_bounds inputs must be >= 1");
  require(delta >= 2, ErrorCode::InvariantViolation, "qe_bounds requires delta >= 2");
  QeBounds b;
  b.k = k;
  b.n = n;
  b.w = w;
  b.m = m;
  b.delta = delta;
  b.ell = ell;
  require(w < 32, ErrorCode::BitBudgetExceeded, "qe_bounds: quantifier block count");
  b.constant_factor = 1L << w;  // constant policy: 2^O(w) := 2^w
  // even split: n_i = ceil(n/w), so prod n_i = ceil(n/w)^w
  long ni = (n + w - 1) / w;
  Int prod_ni;
  mpz_pow_ui(prod_ni.get_mpz_t(), Int(ni).get_mpz_t(), static_cast<unsigned long>(w));
  require(bit_size(prod_ni) < 40, ErrorCode::BitBudgetExceeded, "qe_bounds: block product");
  long pn = static_cast<long>(prod_ni.get_si());
  Int md(m * delta);
  b.log_d = wdetail::ceil_xlog2(b.constant_factor * pn, md);
  // log L <= 2^O(w) (prod n_i) log(m delta) + log(k + ell): one ceiling over
  // the sum, i.e. the bit position of md^x * (k + ell)
  {
    Int p;
    mpz_pow_ui(p.get_mpz_t(), md.get_mpz_t(),
               static_cast<unsigned long>(b.constant_factor * pn));
    p *= Int(k + ell);
    size_t bits = bit_size(p);
    b.log_l = (mpz_scan1(p.get_mpz_t(), 0) == bits - 1) ? static_cast<long>(bits - 1)
                                                        : static_cast<long>(bits);
  }
  b.log_m = wdetail::ceil_xlog2(b.constant_factor * k * pn, md);
  return b;
}

enum class WitnessMode { PaperSLP, SeededRandom };

// 2p+1 candidate parameter vectors. PaperSLP vectors are the alpha-recursion
// integers (certified generic for bounded formulas); SeededRandom vectors
// are small rationals that downstream algorithms must pair with an explicit
// certificate check.
struct WitnessSequence {
  std::vector<std::vector<Rational>> vectors;
  WitnessMode mode = WitnessMode::SeededRandom;
  uint64_t seed = 0;
  int p = 0;
};

inline WitnessSequence witness_sequence(int p, int k, WitnessMode mode, uint64_t seed,
                                        const QeBounds* bounds = nullptr,
                                        const WitnessOptions& opt = {}) {
  require(p >= 0 && k >= 1, ErrorCode::InvariantViolation, "witness_sequence p, k");
  WitnessSequence ws;
  ws.mode = mode;
  ws.seed = seed;
  ws.p = p;
  int count = 2 * p + 1;
  if (mode == WitnessMode::PaperSLP) {
    require(bounds != nullptr, ErrorCode::InvariantViolation,
            "PaperSLP witnesses need qe bounds");
    Int D = bounds->derived_degree(opt);
    Int L = bounds->derived_bitsize(opt);
    require(D.fits_ulong_p() && L.fits_ulong_p(), ErrorCode::BitBudgetExceeded,
            "PaperSLP bounds too large");
    std::vector<Int> flat =
        alpha_sequence(k * count, L.get_ui(), D.get_ui(), opt);
    for (int i = 0; i < count; ++i) {
      std::vector<Rational> v;
      for (int j = 0; j < k; ++j) v.emplace_back(flat[static_cast<size_t>(i * k + j)]);
      ws.vectors.push_back(std::move(v));
    }
    return ws;
  }
  SplitMix64 rng(seed);
  for (int i = 0; i < count; ++i) {
    std::vector<Rational> v;
    for (int j = 0; j < k; ++j) {
      long num = static_cast<long>(rng.below(1u << 16)) + 1;
      long den = static_cast<long>(rng.below(1u << 8)) + 1;
      if (rng.below(2)) num = -num;
      v.push_back(make_rat(num, den));
    }
    ws.vectors.push_back(std::move(v));
  }
  return ws;
}

// Strict majority value; NoMajority signals witness failure and the caller
// retries with the next seed.
template <class T>
T majority(const std::vector<T>& values) {
  require(!values.empty(), ErrorCode::EmptyInput, "majority of nothing");
  for (const T& cand : values) {
    size_t c = 0;
    for (const T& v : values) c += (v == cand);
    if (2 * c > values.size()) return cand;
  }
  fail(ErrorCode::NoMajority, "no strict majority");
}

}  // namespace crag

#endif
