#ifndef CRAG_POLY_HPP
#define CRAG_POLY_HPP

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "crag/errors.hpp"
#include "crag/rational.hpp"

namespace crag {

using Exponents = std::vector<unsigned>;

// Degree of the zero polynomial: -infinity sentinel. The homogenize and
// Milnor constructions reject it; nothing downstream ever evaluates it.
inline constexpr int kDegreeOfZero = std::numeric_limits<int>::min();

// Exact sparse multivariate polynomial: exponent vector -> nonzero
// coefficient. Variables are positional; names live in the I/O layer only.
// The term map is ordered (lex), so iteration and printing are deterministic.
template <class C>
class SparsePoly {
 public:
  using Coeff = C;
  using TermMap = std::map<Exponents, C>;

  SparsePoly() : nvars_(0) {}
  explicit SparsePoly(int nvars) : nvars_(nvars) {}

  static SparsePoly zero(int nvars) { return SparsePoly(nvars); }

  static SparsePoly constant(int nvars, const C& c) {
    SparsePoly p(nvars);
    if (!coeff_is_zero(c)) p.terms_[Exponents(nvars, 0)] = c;
    return p;
  }

  static SparsePoly variable(int nvars, int i) {
    require(i >= 0 && i < nvars, ErrorCode::IndexOutOfRange, "variable index");
    SparsePoly p(nvars);
    Exponents e(nvars, 0);
    e[i] = 1;
    p.terms_[e] = C(1);
    return p;
  }

  static SparsePoly monomial(int nvars, Exponents e, const C& c) {
    require(static_cast<int>(e.size()) == nvars, ErrorCode::DimensionMismatch,
            "monomial exponent length");
    SparsePoly p(nvars);
    if (!coeff_is_zero(c)) p.terms_[std::move(e)] = c;
    return p;
  }

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  bool is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
  }

  C constant_value() const {
    if (terms_.empty()) return C(0);
    return terms_.begin()->second;
  }

  int degree() const {
    if (terms_.empty()) return kDegreeOfZero;
    int d = 0;
    for (const auto& [e, c] : terms_) {
      int t = std::accumulate(e.begin(), e.end(), 0);
      d = std::max(d, t);
    }
    return d;
  }

  int degree_in(int var) const {
    require(var >= 0 && var < nvars_, ErrorCode::IndexOutOfRange, "degree_in");
    if (terms_.empty()) return kDegreeOfZero;
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
    return d;
  }

  void add_term(const Exponents& e, const C& c) {
    require(static_cast<int>(e.size()) == nvars_, ErrorCode::DimensionMismatch,
            "add_term exponent length");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (!coeff_is_zero(c)) terms_[e] = c;
    } else {
      it->second += c;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  SparsePoly operator-() const {
    SparsePoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    require(nvars_ == o.nvars_, ErrorCode::DimensionMismatch, "poly +");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    require(nvars_ == o.nvars_, ErrorCode::DimensionMismatch, "poly -");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    require(a.nvars_ == b.nvars_, ErrorCode::DimensionMismatch, "poly *");
    SparsePoly r(a.nvars_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  SparsePoly scaled(const C& c) const {
    SparsePoly r(nvars_);
    if (coeff_is_zero(c)) return r;
    for (const auto& [e, cc] : terms_) r.terms_[e] = cc * c;
    return r;
  }

  SparsePoly pow(unsigned k) const {
    SparsePoly r = constant(nvars_, C(1));
    SparsePoly b = *this;
    while (k) {
      if (k & 1) r = r * b;
      b = (k >>= 1) ? b * b : b;
    }
    return r;
  }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }
  friend bool operator<(const SparsePoly& a, const SparsePoly& b) {
    if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_;
    return a.terms_ < b.terms_;
  }

  C evaluate(std::span<const C> x) const {
    require(static_cast<int>(x.size()) == nvars_, ErrorCode::DimensionMismatch,
            "evaluate point length");
    C acc(0);
    for (const auto& [e, c] : terms_) {
      C t = c;
      for (int i = 0; i < nvars_; ++i) {
        for (unsigned k = 0; k < e[i]; ++k) t *= x[i];
      }
      acc += t;
    }
    return acc;
  }

  C evaluate(const std::vector<C>& x) const { return evaluate(std::span<const C>(x)); }

  SparsePoly derivative(int var) const {
    require(var >= 0 && var < nvars_, ErrorCode::IndexOutOfRange, "derivative");
    SparsePoly r(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponents ne = e;
      ne[var] -= 1;
      r.add_term(ne, c * C(static_cast<long>(e[var])));
    }
    return r;
  }

  // X_0^E * p(X_1/X_0, ..., X_n/X_0): one new variable in position 0,
  // homogeneous of total degree exactly E.
  SparsePoly homogenize(int E) const {
    require(!is_zero(), ErrorCode::ExponentTooSmall, "homogenize(0) undefined");
    require(E >= degree(), ErrorCode::ExponentTooSmall, "homogenize: E < deg");
    SparsePoly r(nvars_ + 1);
    for (const auto& [e, c] : terms_) {
      Exponents ne(nvars_ + 1);
      int t = std::accumulate(e.begin(), e.end(), 0);
      ne[0] = static_cast<unsigned>(E - t);
      std::copy(e.begin(), e.end(), ne.begin() + 1);
      r.terms_[ne] = c;
    }
    return r;
  }

  // Substitute variable 0 := 1 and drop it (inverse of homogenize).
  SparsePoly dehomogenize() const {
    require(nvars_ >= 1, ErrorCode::IndexOutOfRange, "dehomogenize");
    SparsePoly r(nvars_ - 1);
    for (const auto& [e, c] : terms_) {
      Exponents ne(e.begin() + 1, e.end());
      r.add_term(ne, c);
    }
    return r;
  }

  // Substitute variable var := value (a polynomial in the same variables,
  // itself not involving var for the usual triangular use).
  SparsePoly substitute(int var, const SparsePoly& value) const {
    require(var >= 0 && var < nvars_, ErrorCode::IndexOutOfRange, "substitute");
    require(value.nvars_ == nvars_, ErrorCode::DimensionMismatch, "substitute value");
    // bucket by power of var, then Horner
    std::map<unsigned, SparsePoly> buckets;
    for (const auto& [e, c] : terms_) {
      Exponents ne = e;
      unsigned k = ne[var];
      ne[var] = 0;
      auto [it, fresh] = buckets.try_emplace(k, SparsePoly(nvars_));
      it->second.add_term(ne, c);
    }
    SparsePoly acc(nvars_);
    unsigned prev = 0;
    bool first = true;
    for (auto it = buckets.rbegin(); it != buckets.rend(); ++it) {
      if (first) {
        acc = it->second;
        prev = it->first;
        first = false;
        continue;
      }
      for (unsigned k = it->first; k < prev; ++k) acc = acc * value;
      acc += it->second;
      prev = it->first;
    }
    if (first) return SparsePoly(nvars_);
    for (unsigned k = 0; k < prev; ++k) acc = acc * value;
    return acc;
  }

  // Append fresh trailing variables (zero set becomes a cylinder).
  SparsePoly extend(int extra) const {
    SparsePoly r(nvars_ + extra);
    for (const auto& [e, c] : terms_) {
      Exponents ne = e;
      ne.resize(nvars_ + extra, 0);
      r.terms_[std::move(ne)] = c;
    }
    return r;
  }

  // Keep only the variables listed in keep (in their order).
  SparsePoly project_vars(const std::vector<int>& keep) const {
    SparsePoly r(static_cast<int>(keep.size()));
    for (const auto& [e, c] : terms_) {
      Exponents ne(keep.size());
      for (size_t i = 0; i < keep.size(); ++i) ne[i] = e[keep[i]];
      // unlisted variables must not occur
      r.terms_[std::move(ne)] = c;
    }
    return r;
  }

  std::vector<int> support_vars() const {
    std::vector<char> used(nvars_, 0);
    for (const auto& [e, c] : terms_)
      for (int i = 0; i < nvars_; ++i)
        if (e[i]) used[i] = 1;
    std::vector<int> out;
    for (int i = 0; i < nvars_; ++i)
      if (used[i]) out.push_back(i);
    return out;
  }

  bool uses_var(int var) const {
    for (const auto& [e, c] : terms_)
      if (e[var]) return true;
    return false;
  }

  template <class F>
  auto map_coeffs(F&& f) const {
    using D = decltype(f(std::declval<const C&>()));
    SparsePoly<D> r(nvars_);
    for (const auto& [e, c] : terms_) r.set_term_unchecked(e, f(c));
    return r;
  }

  void set_term_unchecked(const Exponents& e, const C& c) {
    if (!coeff_is_zero(c)) terms_[e] = c;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) s += " + ";
      first = false;
      s += "(" + coeff_to_string(c) + ")";
      for (int i = 0; i < nvars_; ++i) {
        if (!e[i]) continue;
        s += "*x" + std::to_string(i);
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
      }
    }
    return s;
  }

 private:
  int nvars_;
  TermMap terms_;
};

using QPoly = SparsePoly<Rational>;
using GPoly = SparsePoly<GaussianRational>;

// --- free functions -------------------------------------------------------

template <class C>
SparsePoly<C> evaluate_guarded(const SparsePoly<C>& p) = delete;

enum class CombineMode { SumOfSquares, Product };

// Sum of squares keeps the real zero set of the conjunction; product keeps
// the union.
template <class C>
SparsePoly<C> combine(const std::vector<SparsePoly<C>>& polys, CombineMode mode) {
  require(!polys.empty(), ErrorCode::EmptyInput, "combine: empty list");
  int n = polys.front().nvars();
  for (const auto& p : polys)
    require(p.nvars() == n, ErrorCode::DimensionMismatch, "combine nvars");
  if (mode == CombineMode::SumOfSquares) {
    SparsePoly<C> acc(n);
    for (const auto& p : polys) acc += p * p;
    return acc;
  }
  SparsePoly<C> acc = SparsePoly<C>::constant(n, C(1));
  for (const auto& p : polys) acc = acc * p;
  return acc;
}

// f^xi := ||X-xi||^{2d} f(xi + ||X-xi||^{-2} (X-xi)), the inversion with
// respect to the unit sphere centered at xi. Requires f(xi) != 0; the zero
// set of the result is iota_xi(Z(f)) together with xi itself when Z(f) is
// unbounded (one-point compactification up to homeomorphism).
inline QPoly inversion_transform(const QPoly& p, const std::vector<Rational>& center) {
  int n = p.nvars();
  require(static_cast<int>(center.size()) == n, ErrorCode::DimensionMismatch,
          "inversion center length");
  require(!p.is_zero(), ErrorCode::CenterOnVariety, "inversion of zero polynomial");
  require(p.evaluate(center) != 0, ErrorCode::CenterOnVariety,
          "inversion center lies on the variety");
  int d = p.degree();
  // r2 = ||X - xi||^2
  QPoly r2(n);
  for (int j = 0; j < n; ++j) {
    QPoly dj = QPoly::variable(n, j) - QPoly::constant(n, center[j]);
    r2 += dj * dj;
  }
  // substituted factor for variable j: xi_j * r2 + (X_j - xi_j)
  std::vector<QPoly> factor;
  factor.reserve(n);
  for (int j = 0; j < n; ++j) {
    QPoly f = r2.scaled(center[j]) + QPoly::variable(n, j) - QPoly::constant(n, center[j]);
    factor.push_back(std::move(f));
  }
  QPoly out(n);
  for (const auto& [e, c] : p.terms()) {
    int t = std::accumulate(e.begin(), e.end(), 0);
    QPoly term = QPoly::constant(n, c);
    for (int j = 0; j < n; ++j)
      if (e[j]) term = term * factor[j].pow(e[j]);
    term = term * r2.pow(static_cast<unsigned>(d - t));
    out += term;
  }
  return out;
}

// Rational content and sign-normalized primitive part (integer coefficients,
// positive leading coefficient in lex order). Scaling by a positive rational
// never changes zero sets; every elimination step renormalizes through this.
inline std::pair<Rational, QPoly> content_primitive(const QPoly& p) {
  if (p.is_zero()) return {Rational(0), p};
  Int num_gcd = 0, den_lcm = 1;
  for (const auto& [e, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational content(num_gcd, den_lcm);
  content.canonicalize();
  // lex-leading term decides the sign
  const auto& lead = *p.terms().rbegin();
  if (sgn(lead.second) < 0) content = -content;
  QPoly prim = p.scaled(1 / content);
  return {content, prim};
}

inline QPoly primitive_part(const QPoly& p) { return content_primitive(p).second; }

}  // namespace crag

#endif
