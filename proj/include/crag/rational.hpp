#ifndef CRAG_RATIONAL_HPP
#define CRAG_RATIONAL_HPP

#include <gmpxx.h>

#include <Eigen/Core>
#include <cstdint>
#include <string>

#include "crag/errors.hpp"

namespace crag {

// Exact scalars. GMP keeps rationals canonical (reduced, positive
// denominator), which is exactly the Rational invariant we need.
using Int = mpz_class;
using Rational = mpq_class;

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Int& z) { return sgn(z); }

// mpq_class(num, den) does not canonicalize; route constructions through
// this when numerator/denominator are not known to be coprime.
inline Rational make_rat(const Int& num, const Int& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}
inline Rational make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rational pow_rat(const Rational& base, unsigned long e) {
  Rational r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), e);
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), e);
  return r;
}

inline Int rat_floor(const Rational& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Int rat_ceil(const Rational& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline size_t bit_size(const Int& z) { return mpz_sizeinbase(z.get_mpz_t(), 2); }

inline size_t bit_size(const Rational& q) {
  return bit_size(Int(q.get_num())) + bit_size(Int(q.get_den()));
}

// Simplest rational in the closed interval [lo, hi] (Stern-Brocot descent).
// Used to probe isolating intervals for exact rational roots.
inline Rational simplest_rational_in(const Rational& lo, const Rational& hi) {
  require(lo <= hi, ErrorCode::Internal, "simplest_rational_in: empty interval");
  if (lo > 0) {
    Int fl = rat_ceil(lo);
    if (Rational(fl) <= hi) return Rational(fl);
    Int a = rat_floor(lo);
    Rational flo = lo - Rational(a), fhi = hi - Rational(a);
    // recurse on reciprocal of the fractional parts
    Rational inner = simplest_rational_in(1 / fhi, 1 / flo);
    return Rational(a) + 1 / inner;
  }
  if (hi < 0) return -simplest_rational_in(-hi, -lo);
  return Rational(0);
}

// Round q to a fraction with denominator 2^bits, directed.
inline Rational dyadic_round(const Rational& q, unsigned bits, bool up) {
  Int scale = pow_int(Int(2), bits);
  Rational s = q * Rational(scale);
  Int z = up ? rat_ceil(s) : rat_floor(s);
  return make_rat(z, scale);
}

// Complex rationals, encoded by real and imaginary part.
struct GaussianRational {
  Rational re, im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(const Rational& r) : re(r), im(0) {}
  GaussianRational(long r) : re(r), im(0) {}
  GaussianRational(int r) : re(r), im(0) {}
  GaussianRational(const Rational& r, const Rational& i) : re(r), im(i) {}

  bool is_zero() const { return re == 0 && im == 0; }

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = r;
    im = i;
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    Rational n2 = o.re * o.re + o.im * o.im;
    require(n2 != 0, ErrorCode::Internal, "gaussian division by zero");
    Rational r = (re * o.re + im * o.im) / n2;
    Rational i = (im * o.re - re * o.im) / n2;
    re = r;
    im = i;
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
  // deterministic ordering for canonical containers (not an arithmetic order)
  friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  }
};

inline GaussianRational conj(const GaussianRational& z) { return {z.re, -z.im}; }
inline Rational norm2(const GaussianRational& z) { return z.re * z.re + z.im * z.im; }

// Coefficient concept helpers shared by the templated polynomial layer.
inline bool coeff_is_zero(const Rational& c) { return c == 0; }
inline bool coeff_is_zero(const GaussianRational& c) { return c.is_zero(); }
inline std::string coeff_to_string(const Rational& c) { return c.get_str(); }
inline std::string coeff_to_string(const GaussianRational& c) {
  return c.re.get_str() + (sgn(c.im) >= 0 ? "+" : "") + c.im.get_str() + "i";
}

// splitmix64: the deterministic generator behind every seeded schedule.
struct SplitMix64 {
  uint64_t state;
  explicit SplitMix64(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in [0, n)
  uint64_t below(uint64_t n) { return next() % n; }
  // nonzero integer in [-m, m]
  long symmetric_nonzero(long m) {
    long v = static_cast<long>(below(static_cast<uint64_t>(2 * m))) - m;
    return v >= 0 ? v + 1 : v;
  }
};

}  // namespace crag

namespace Eigen {

template <>
struct NumTraits<crag::Rational> : GenericNumTraits<crag::Rational> {
  using Real = crag::Rational;
  using NonInteger = crag::Rational;
  using Nested = crag::Rational;
  using Literal = long;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 64,
    MulCost = 64,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<crag::GaussianRational> : GenericNumTraits<crag::GaussianRational> {
  using Real = crag::Rational;
  using NonInteger = crag::GaussianRational;
  using Nested = crag::GaussianRational;
  using Literal = long;
  enum {
    IsComplex = 1,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 128,
    MulCost = 256,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
};

}  // namespace Eigen

#endif
