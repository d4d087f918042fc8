#ifndef CRAG_INTERVAL_HPP
#define CRAG_INTERVAL_HPP

#include <Eigen/Core>
#include <vector>

#include "crag/poly.hpp"

namespace crag {

// Closed interval with rational endpoints. All operations are exact
// enclosures; "certified" statements about signs are theorems.
struct QInterval {
  Rational lo, hi;

  QInterval() : lo(0), hi(0) {}
  QInterval(const Rational& v) : lo(v), hi(v) {}
  QInterval(long v) : lo(v), hi(v) {}
  QInterval(int v) : lo(v), hi(v) {}
  QInterval(const Rational& l, const Rational& h) : lo(l), hi(h) {
    require(l <= h, ErrorCode::Internal, "interval endpoints out of order");
  }

  bool is_point() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return lo <= 0 && 0 <= hi; }
  // -1, +1 when certified; 0 when the interval straddles zero
  int sign_certified() const { return lo > 0 ? 1 : (hi < 0 ? -1 : 0); }

  bool subset_of(const QInterval& o) const { return o.lo <= lo && hi <= o.hi; }
  bool strict_subset_of(const QInterval& o) const { return o.lo < lo && hi < o.hi; }
  bool intersects(const QInterval& o) const { return !(hi < o.lo || o.hi < lo); }

  QInterval operator-() const { return {-hi, -lo}; }
  QInterval& operator+=(const QInterval& o) {
    lo += o.lo;
    hi += o.hi;
    return *this;
  }
  QInterval& operator-=(const QInterval& o) { return *this += -o; }
  friend QInterval operator+(QInterval a, const QInterval& b) { return a += b; }
  friend QInterval operator-(QInterval a, const QInterval& b) { return a -= b; }
  friend QInterval operator*(const QInterval& a, const QInterval& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    Rational lo = std::min(std::min(p1, p2), std::min(p3, p4));
    Rational hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return {lo, hi};
  }
  QInterval& operator*=(const QInterval& o) { return *this = *this * o; }
  // division by an interval certified away from zero
  friend QInterval operator/(const QInterval& a, const QInterval& b) {
    require(b.sign_certified() != 0, ErrorCode::Internal, "interval division by straddling zero");
    QInterval inv(std::min(1 / b.lo, 1 / b.hi), std::max(1 / b.lo, 1 / b.hi));
    return a * inv;
  }
  friend bool operator==(const QInterval& a, const QInterval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
  friend bool operator!=(const QInterval& a, const QInterval& b) { return !(a == b); }

  QInterval pow(unsigned k) const {
    if (k == 0) return QInterval(Rational(1));
    if (k == 1) return *this;
    if (k % 2 == 1 || lo >= 0) {
      Rational l = pow_rat(lo, k), h = pow_rat(hi, k);
      if (l > h) std::swap(l, h);
      if (k % 2 == 0 && contains_zero()) l = 0;
      return {l, h};
    }
    // even power straddling or negative
    Rational al = pow_rat(lo, k), ah = pow_rat(hi, k);
    Rational h = std::max(al, ah);
    Rational l = contains_zero() ? Rational(0) : std::min(al, ah);
    return {l, h};
  }

  QInterval hull(const QInterval& o) const {
    return {std::min(lo, o.lo), std::max(hi, o.hi)};
  }

  // outward rounding to denominators 2^bits: keeps exactness (enclosure
  // only widens) while capping coefficient growth during refinement loops
  QInterval round_out(unsigned bits) const {
    return {dyadic_round(lo, bits, false), dyadic_round(hi, bits, true)};
  }
};

using Box = std::vector<QInterval>;

inline QInterval interval_eval(const QPoly& p, const Box& x) {
  require(static_cast<int>(x.size()) == p.nvars(), ErrorCode::DimensionMismatch,
          "interval_eval box size");
  QInterval acc(Rational(0));
  for (const auto& [e, c] : p.terms()) {
    QInterval t{c};
    for (int i = 0; i < p.nvars(); ++i)
      if (e[i]) t *= x[i].pow(e[i]);
    acc += t;
  }
  return acc;
}

inline Box box_hull(const Box& a, const Box& b) {
  require(a.size() == b.size(), ErrorCode::Internal, "box_hull size");
  Box r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i].hull(b[i]);
  return r;
}

inline bool boxes_disjoint(const Box& a, const Box& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (!a[i].intersects(b[i])) return true;
  return false;
}

inline Rational box_max_width(const Box& b) {
  Rational w(0);
  for (const auto& iv : b) w = std::max(w, iv.width());
  return w;
}

inline std::vector<Rational> box_mid(const Box& b) {
  std::vector<Rational> m(b.size());
  for (size_t i = 0; i < b.size(); ++i) m[i] = b[i].mid();
  return m;
}

}  // namespace crag

namespace Eigen {
template <>
struct NumTraits<crag::QInterval> : GenericNumTraits<crag::QInterval> {
  using Real = crag::QInterval;
  using NonInteger = crag::QInterval;
  using Nested = crag::QInterval;
  using Literal = long;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 128,
    MulCost = 256,
  };
  static inline Real epsilon() { return Real(crag::Rational(0)); }
  static inline Real dummy_precision() { return Real(crag::Rational(0)); }
};
}  // namespace Eigen

#endif
