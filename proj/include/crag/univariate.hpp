#ifndef CRAG_UNIVARIATE_HPP
#define CRAG_UNIVARIATE_HPP

#include <optional>
#include <vector>

#include "crag/poly.hpp"

namespace crag {

// Dense univariate polynomial over Q. Workhorse for Sturm sequences,
// eliminant analysis and real root isolation. Coefficients c[i] of x^i,
// trailing zeros trimmed.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

  static UPoly zero() { return UPoly(); }
  static UPoly constant(const Rational& a) { return UPoly({a}); }
  static UPoly x() { return UPoly({Rational(0), Rational(1)}); }

  static UPoly from_sparse(const QPoly& p, int var) {
    std::vector<Rational> c;
    for (const auto& [e, coef] : p.terms()) {
      for (int i = 0; i < p.nvars(); ++i)
        require(i == var || e[i] == 0, ErrorCode::Internal,
                "from_sparse: polynomial is not univariate in the given variable");
      unsigned k = e[var];
      if (c.size() <= k) c.resize(k + 1, Rational(0));
      c[k] += coef;
    }
    return UPoly(std::move(c));
  }

  QPoly to_sparse(int nvars, int var) const {
    QPoly p(nvars);
    Exponents e(nvars, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      e[var] = static_cast<unsigned>(i);
      p.add_term(e, c_[i]);
    }
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? kDegreeOfZero : static_cast<int>(c_.size()) - 1; }
  const Rational& leading() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<Rational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UPoly(std::move(d));
  }

  UPoly operator-() const {
    std::vector<Rational> d(c_);
    for (auto& v : d) v = -v;
    return UPoly(std::move(d));
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rational> d(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) d[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) d[i] += b.c_[i];
    return UPoly(std::move(d));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<Rational> d(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(d));
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  UPoly scaled(const Rational& s) const {
    std::vector<Rational> d(c_);
    for (auto& v : d) v *= s;
    return UPoly(std::move(d));
  }

  // Monic remainder of *this by d (exact rational arithmetic).
  UPoly rem(const UPoly& d) const {
    require(!d.is_zero(), ErrorCode::ZeroPolynomial, "rem by zero");
    UPoly r = *this;
    while (!r.is_zero() && r.degree() >= d.degree()) {
      Rational q = r.leading() / d.leading();
      int shift = r.degree() - d.degree();
      for (int i = 0; i <= d.degree(); ++i)
        r.c_[i + shift] -= q * d.c_[i];
      r.trim();
    }
    return r;
  }

  UPoly divexact(const UPoly& d) const {
    require(!d.is_zero(), ErrorCode::ZeroPolynomial, "divexact by zero");
    UPoly r = *this;
    std::vector<Rational> q(r.is_zero() ? 0 : std::max(0, r.degree() - d.degree() + 1),
                            Rational(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
      Rational f = r.leading() / d.leading();
      int shift = r.degree() - d.degree();
      q[shift] = f;
      for (int i = 0; i <= d.degree(); ++i) r.c_[i + shift] -= f * d.c_[i];
      r.trim();
    }
    require(r.is_zero(), ErrorCode::Internal, "divexact: not divisible");
    return UPoly(std::move(q));
  }

  // Positive-content normalization: integer coefficients, content 1,
  // leading coefficient sign preserved. Positive scaling only, so sign
  // sequences (Sturm) are unaffected.
  UPoly normalized() const {
    if (is_zero()) return *this;
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& v : c_) {
      if (v == 0) continue;
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_num_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (scale < 0) scale = -scale;
    return scaled(scale);
  }

  size_t max_coeff_bits() const {
    size_t b = 0;
    for (const auto& v : c_) b = std::max(b, bit_size(v));
    return b;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

// gcd via Euclidean remainders with content renormalization (primitive PRS).
inline UPoly upoly_gcd(UPoly a, UPoly b) {
  a = a.normalized();
  b = b.normalized();
  while (!b.is_zero()) {
    UPoly r = a.rem(b).normalized();
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(1 / a.leading());  // monic
}

inline UPoly squarefree_part(const UPoly& p) {
  require(!p.is_zero(), ErrorCode::ZeroPolynomial, "squarefree_part(0)");
  if (p.degree() == 0) return UPoly::constant(Rational(1));
  UPoly g = upoly_gcd(p, p.derivative());
  if (g.degree() <= 0) return p.normalized();
  return p.divexact(g).normalized();
}

// Yun's algorithm: p ~ prod_i out[i-1]^i with every out[i] squarefree.
inline std::vector<UPoly> squarefree_decomposition(const UPoly& p) {
  require(!p.is_zero(), ErrorCode::ZeroPolynomial, "squarefree_decomposition(0)");
  std::vector<UPoly> out;
  if (p.degree() == 0) return out;
  UPoly a = p.normalized();
  UPoly g = upoly_gcd(a, a.derivative());
  if (g.degree() <= 0) {
    out.push_back(a);
    return out;
  }
  UPoly w = a.divexact(g);
  UPoly y = a.derivative().divexact(g);
  UPoly z = y - w.derivative();
  while (!z.is_zero()) {
    UPoly f = upoly_gcd(w, z);
    out.push_back(f);
    w = w.divexact(f);
    y = z.divexact(f);
    z = y - w.derivative();
  }
  out.push_back(w);
  return out;
}

// Sturm chain of the squarefree part: signed Euclidean remainders.
struct SturmChain {
  std::vector<UPoly> seq;

  static SturmChain build(const UPoly& p) {
    require(!p.is_zero(), ErrorCode::ZeroPolynomial, "sturm of zero");
    SturmChain s;
    UPoly p0 = squarefree_part(p);
    if (p0.degree() <= 0) {
      s.seq.push_back(p0);
      return s;
    }
    s.seq.push_back(p0);
    s.seq.push_back(p0.derivative().normalized());
    while (s.seq.back().degree() > 0) {
      UPoly r = (-(s.seq[s.seq.size() - 2].rem(s.seq.back()))).normalized();
      if (r.is_zero()) break;
      s.seq.push_back(std::move(r));
    }
    return s;
  }

  int variations_at(const Rational& x) const {
    int v = 0, prev = 0;
    for (const auto& q : seq) {
      int s = sign(q.eval(x));
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  }

  int variations_at_inf(int dir) const {  // dir = +1 or -1
    int v = 0, prev = 0;
    for (const auto& q : seq) {
      if (q.is_zero()) continue;
      int s = sign(q.leading());
      if (dir < 0 && (q.degree() & 1)) s = -s;
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  }

  // distinct real roots in (a, b]
  int count_roots(const Rational& a, const Rational& b) const {
    return variations_at(a) - variations_at(b);
  }
  int count_roots_all() const { return variations_at_inf(-1) - variations_at_inf(+1); }
  int count_roots_below(const Rational& b) const {  // (-inf, b]
    return variations_at_inf(-1) - variations_at(b);
  }
};

inline int sturm_count_all(const UPoly& p) { return SturmChain::build(p).count_roots_all(); }

inline Rational cauchy_root_bound(const UPoly& p) {
  require(!p.is_zero(), ErrorCode::ZeroPolynomial, "cauchy bound of zero");
  Rational m(0);
  for (int i = 0; i < p.degree(); ++i) {
    Rational a = rat_abs(p.coeff(i) / p.leading());
    if (a > m) m = a;
  }
  return m + 1;
}

// Isolating interval for one real root. If exact, the root is the rational
// `value` and lo == hi == value. Otherwise p changes sign on (lo, hi) and
// the (squarefree) polynomial has exactly one root there, lo/hi non-roots.
struct RootInterval {
  Rational lo, hi;
  bool exact = false;
  Rational value;  // meaningful when exact

  Rational mid() const { return exact ? value : Rational((lo + hi) / 2); }
  Rational width() const { return exact ? Rational(0) : Rational(hi - lo); }
  bool contains(const Rational& x) const { return exact ? x == value : (lo < x && x < hi); }
};

namespace detail {
inline void isolate_rec(const UPoly& p, const SturmChain& chain, const Rational& lo,
                        const Rational& hi, int count, std::vector<RootInterval>& out) {
  if (count == 0) return;
  if (count == 1 && sign(p.eval(lo)) * sign(p.eval(hi)) < 0) {
    out.push_back({lo, hi, false, Rational(0)});
    return;
  }
  Rational mid = (lo + hi) / 2;
  if (p.eval(mid) == 0) {
    out.push_back({mid, mid, true, mid});
    // nudge around the exact root; bisect until the neighbors are root-free
    Rational eps = (hi - lo) / 4;
    while (true) {
      Rational l = mid - eps, r = mid + eps;
      if (p.eval(l) != 0 && p.eval(r) != 0 && chain.count_roots(l, r) == 1) {
        isolate_rec(p, chain, lo, l, chain.count_roots(lo, l), out);
        isolate_rec(p, chain, r, hi, chain.count_roots(r, hi), out);
        return;
      }
      eps /= 2;
    }
  }
  int left = chain.count_roots(lo, mid);
  isolate_rec(p, chain, lo, mid, left, out);
  isolate_rec(p, chain, mid, hi, count - left, out);
}
}  // namespace detail

// All real roots of p, isolated (distinct-root semantics: squarefree part).
inline std::vector<RootInterval> isolate_real_roots(const UPoly& p) {
  require(!p.is_zero(), ErrorCode::ZeroPolynomial, "isolate(0)");
  UPoly q = squarefree_part(p);
  if (q.degree() <= 0) return {};
  SturmChain chain = SturmChain::build(q);
  Rational b = cauchy_root_bound(q);
  // endpoints of the global interval are non-roots by the bound
  std::vector<RootInterval> out;
  detail::isolate_rec(q, chain, -b, b, chain.count_roots(-b, b), out);
  std::sort(out.begin(), out.end(),
            [](const RootInterval& a, const RootInterval& bb) { return a.lo < bb.lo; });
  return out;
}

// Shrink an isolating interval below `width` by sign bisection. Also probes
// the simplest rational in the interval, catching exact rational roots.
inline void refine_root(const UPoly& sf, RootInterval& r, const Rational& width) {
  if (r.exact) return;
  int slo = sign(sf.eval(r.lo));
  while (r.hi - r.lo > width) {
    Rational mid = (r.lo + r.hi) / 2;
    Rational probe = simplest_rational_in(r.lo, r.hi);
    // prefer the simplest point in the middle half; it catches exact
    // rational roots while keeping the shrink geometric
    Rational quarter = (r.hi - r.lo) / 4;
    if (probe - r.lo >= quarter && r.hi - probe >= quarter && bit_size(probe) < bit_size(mid))
      mid = probe;
    Rational vm = sf.eval(mid);
    if (vm == 0) {
      r = {mid, mid, true, mid};
      return;
    }
    if (sign(vm) == slo)
      r.lo = mid;
    else
      r.hi = mid;
  }
}

}  // namespace crag

#endif
