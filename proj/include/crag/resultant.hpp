#ifndef CRAG_RESULTANT_HPP
#define CRAG_RESULTANT_HPP

#include <vector>

#include "crag/poly.hpp"
#include "crag/univariate.hpp"

namespace crag {

// ---------------------------------------------------------------------------
// Viewing a sparse multivariate polynomial as univariate in one variable,
// with polynomial coefficients.
// ---------------------------------------------------------------------------

template <class C>
std::vector<SparsePoly<C>> coeffs_in_var(const SparsePoly<C>& p, int var) {
  int d = p.uses_var(var) ? p.degree_in(var) : 0;
  std::vector<SparsePoly<C>> out(static_cast<size_t>(d) + 1, SparsePoly<C>(p.nvars()));
  for (const auto& [e, c] : p.terms()) {
    Exponents ne = e;
    unsigned k = ne[var];
    ne[var] = 0;
    out[k].add_term(ne, c);
  }
  return out;
}

template <class C>
SparsePoly<C> from_coeffs_in_var(const std::vector<SparsePoly<C>>& cs, int var, int nvars) {
  SparsePoly<C> p(nvars);
  for (size_t k = 0; k < cs.size(); ++k) {
    for (const auto& [e, c] : cs[k].terms()) {
      Exponents ne = e;
      ne[var] += static_cast<unsigned>(k);
      p.add_term(ne, c);
    }
  }
  return p;
}

template <class C>
SparsePoly<C> leading_coeff_in(const SparsePoly<C>& p, int var) {
  auto cs = coeffs_in_var(p, var);
  return cs.back();
}

// ---------------------------------------------------------------------------
// Exact multivariate division (asserts divisibility). Lex order on the term
// map gives the leading term for the division loop.
// ---------------------------------------------------------------------------

template <class C>
SparsePoly<C> exact_divide(const SparsePoly<C>& a, const SparsePoly<C>& b) {
  require(!b.is_zero(), ErrorCode::ZeroPolynomial, "exact_divide by zero");
  SparsePoly<C> r = a, q(a.nvars());
  const auto& blead = *b.terms().rbegin();
  while (!r.is_zero()) {
    const auto& rlead = *r.terms().rbegin();
    Exponents qe(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) {
      require(rlead.first[i] >= blead.first[i], ErrorCode::Internal,
              "exact_divide: not divisible");
      qe[i] = rlead.first[i] - blead.first[i];
    }
    C qc = rlead.second / blead.second;
    SparsePoly<C> qt = SparsePoly<C>::monomial(a.nvars(), qe, qc);
    q += qt;
    r -= qt * b;
  }
  return q;
}

// Divide every coefficient (as a v-polynomial) by a v-free divisor.
template <class C>
SparsePoly<C> exact_divide_scalar_poly(const SparsePoly<C>& a, const SparsePoly<C>& d) {
  return exact_divide(a, d);
}

// Pseudo-remainder of a by b with respect to var: lc(b)^(da-db+1) * a mod b.
template <class C>
SparsePoly<C> prem(const SparsePoly<C>& a, const SparsePoly<C>& b, int var) {
  int da = a.degree_in(var), db = b.degree_in(var);
  require(!b.is_zero() && db >= 0, ErrorCode::ZeroPolynomial, "prem by zero");
  if (a.is_zero() || da < db) {
    // lc(b)^(da-db+1) a, with the convention of full pseudo-division
    return a;
  }
  auto ac = coeffs_in_var(a, var);
  auto bc = coeffs_in_var(b, var);
  SparsePoly<C> lb = bc.back();
  int steps = da - db + 1;
  // r starts as a; multiply by lb once per elimination step performed
  std::vector<SparsePoly<C>> r = ac;
  int performed = 0;
  for (int k = da; k >= db; --k) {
    // multiply all of r by lb, then subtract r[k] * x^(k-db) * b
    SparsePoly<C> top = r[k];
    for (auto& ri : r) ri = ri * lb;
    ++performed;
    if (top.is_zero()) continue;  // multiplication already done to keep exponents uniform
    for (int i = 0; i <= db; ++i) {
      r[k - db + i] -= top * bc[i];
    }
  }
  // pad remaining multiplications so the total factor is lb^(da-db+1)
  for (int k = performed; k < steps; ++k)
    for (auto& ri : r) ri = ri * lb;
  r.resize(db > 0 ? db : 0);
  if (r.empty()) return SparsePoly<C>(a.nvars());
  return from_coeffs_in_var(r, var, a.nvars());
}

// ---------------------------------------------------------------------------
// Normalization helpers (keep intermediate results small; positive rational
// scaling never changes zero sets).
// ---------------------------------------------------------------------------

inline QPoly normalize_poly(const QPoly& p) { return p.is_zero() ? p : primitive_part(p); }

inline GPoly normalize_poly(const GPoly& p) {
  if (p.is_zero()) return p;
  const auto& lead = *p.terms().rbegin();
  GaussianRational inv = GaussianRational(Rational(1)) / lead.second;
  return p.scaled(inv);
}

// ---------------------------------------------------------------------------
// Subresultant PRS resultant (Collins). Returns the true resultant up to
// sign; every consumer here only cares about vanishing loci.
// ---------------------------------------------------------------------------

template <class C>
SparsePoly<C> resultant_prs(SparsePoly<C> a, SparsePoly<C> b, int var) {
  int n = a.nvars();
  require(b.nvars() == n, ErrorCode::DimensionMismatch, "resultant nvars");
  if (a.is_zero() || b.is_zero()) return SparsePoly<C>(n);
  int da = a.degree_in(var), db = b.degree_in(var);
  if (da < db) {
    std::swap(a, b);
    std::swap(da, db);
  }
  if (db == 0) return b.pow(static_cast<unsigned>(da));  // b is v-free
  SparsePoly<C> one = SparsePoly<C>::constant(n, C(1));
  SparsePoly<C> g = one, h = one;
  while (true) {
    int delta = da - db;
    SparsePoly<C> r = prem(a, b, var);
    if (r.is_zero()) return SparsePoly<C>(n);  // common factor of positive v-degree
    SparsePoly<C> divisor = g * h.pow(static_cast<unsigned>(delta));
    a = b;
    da = db;
    b = exact_divide(r, divisor);
    db = b.degree_in(var);
    if (!b.uses_var(var)) db = 0;
    g = leading_coeff_in(a, var);
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = exact_divide(g.pow(static_cast<unsigned>(delta)),
                       h.pow(static_cast<unsigned>(delta - 1)));
    }
    if (db == 0) {
      // resultant = b^da / h^(da-1)
      if (da == 1) return b;
      return exact_divide(b.pow(static_cast<unsigned>(da)),
                          h.pow(static_cast<unsigned>(da - 1)));
    }
  }
}

// ---------------------------------------------------------------------------
// Exact univariate resultant over Q via fraction-free (Bareiss) elimination
// of the Sylvester matrix. Exactly signed, which the interpolation path
// relies on.
// ---------------------------------------------------------------------------

inline Rational resultant_univariate(const UPoly& p, const UPoly& q) {
  if (p.is_zero() || q.is_zero()) return Rational(0);
  int m = p.degree(), n = q.degree();
  if (m == 0 && n == 0) return Rational(1);
  if (m == 0) return pow_rat(p.coeff(0), static_cast<unsigned long>(n));
  if (n == 0) return pow_rat(q.coeff(0), static_cast<unsigned long>(m));
  int N = m + n;
  // Sylvester matrix over Q
  std::vector<std::vector<Rational>> M(N, std::vector<Rational>(N, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) M[i][i + j] = p.coeff(static_cast<size_t>(m - j));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) M[n + i][i + j] = q.coeff(static_cast<size_t>(n - j));
  // clear denominators row-wise, track the factor
  Rational scale(1);
  std::vector<std::vector<Int>> A(N, std::vector<Int>(N));
  for (int i = 0; i < N; ++i) {
    Int lcm = 1;
    for (int j = 0; j < N; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), M[i][j].get_den_mpz_t());
    scale /= Rational(lcm);
    for (int j = 0; j < N; ++j) {
      Rational v = M[i][j] * Rational(lcm);
      A[i][j] = v.get_num();
    }
  }
  // Bareiss
  int sign_flips = 0;
  Int prev(1);
  for (int k = 0; k < N - 1; ++k) {
    if (A[k][k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < N; ++i)
        if (A[i][k] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return Rational(0);
      std::swap(A[k], A[piv]);
      ++sign_flips;
    }
    for (int i = k + 1; i < N; ++i) {
      for (int j = k + 1; j < N; ++j) {
        Int t = A[i][j] * A[k][k] - A[i][k] * A[k][j];
        mpz_divexact(A[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      A[i][k] = 0;
    }
    prev = A[k][k];
  }
  Rational det(A[N - 1][N - 1]);
  if (sign_flips & 1) det = -det;
  return det * scale;
}

// ---------------------------------------------------------------------------
// Bivariate resultant by evaluation-interpolation: eliminate `elim`, keep
// `keep`. Much faster than the symbolic PRS once coefficients grow.
// ---------------------------------------------------------------------------

inline QPoly resultant_bivariate_interp(const QPoly& P, const QPoly& Q, int elim, int keep) {
  int n = P.nvars();
  int dvP = P.degree_in(elim), dvQ = Q.degree_in(elim);
  int dwP = P.degree_in(keep), dwQ = Q.degree_in(keep);
  require(dvP > 0 && dvQ > 0, ErrorCode::Internal, "interp resultant: both must use elim var");
  long bound = static_cast<long>(dvP) * dwQ + static_cast<long>(dwP) * dvQ;
  UPoly lcP = UPoly::from_sparse(leading_coeff_in(P, elim).project_vars({keep}), 0);
  UPoly lcQ = UPoly::from_sparse(leading_coeff_in(Q, elim).project_vars({keep}), 0);

  auto eval_at = [&](const QPoly& p, const Rational& s) {
    // substitute keep := s, return univariate in elim
    std::vector<Rational> cs(static_cast<size_t>(p.degree_in(elim)) + 1, Rational(0));
    for (const auto& [e, c] : p.terms()) {
      Rational t = c * pow_rat(s, e[keep]);
      cs[e[elim]] += t;
    }
    return UPoly(std::move(cs));
  };

  std::vector<Rational> xs, ys;
  long s = 0;
  while (static_cast<long>(xs.size()) < bound + 1) {
    Rational sv(s);
    // mirror positive/negative sample points: 0, 1, -1, 2, -2, ...
    s = (s <= 0) ? (-s + 1) : -s;
    if (lcP.eval(sv) == 0 || lcQ.eval(sv) == 0) continue;  // evaluation must commute
    UPoly pu = eval_at(P, sv), qu = eval_at(Q, sv);
    xs.push_back(sv);
    ys.push_back(resultant_univariate(pu, qu));
  }

  // Newton interpolation
  size_t k = xs.size();
  std::vector<Rational> dd = ys;
  for (size_t j = 1; j < k; ++j)
    for (size_t i = k - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  // expand to coefficients
  std::vector<Rational> coef(k, Rational(0));
  std::vector<Rational> basis(k, Rational(0));
  basis[0] = 1;
  size_t basis_len = 1;
  coef[0] = dd[0];
  for (size_t j = 1; j < k; ++j) {
    // basis *= (x - xs[j-1])
    for (size_t i = basis_len; i-- > 0;) {
      basis[i + 1] += basis[i];
      basis[i] *= -xs[j - 1];
    }
    ++basis_len;
    for (size_t i = 0; i < basis_len; ++i) coef[i] += dd[j] * basis[i];
  }
  UPoly result(std::move(coef));
  return result.to_sparse(n, keep);
}

namespace detail {

// substitute one variable by a rational constant
inline QPoly specialize_var(const QPoly& p, int var, const Rational& c) {
  QPoly out(p.nvars());
  for (const auto& [e, coef] : p.terms()) {
    Exponents ne = e;
    unsigned k = ne[static_cast<size_t>(var)];
    ne[static_cast<size_t>(var)] = 0;
    out.add_term(ne, k ? coef * pow_rat(c, k) : coef);
  }
  return out;
}

// Recursive evaluation-interpolation resultant for several remaining
// variables: sample the last remaining variable, recurse, interpolate.
// `degs` carries the interpolation degree per remaining variable; samples
// where either leading v-coefficient drops are skipped (the resultant does
// not commute with such specializations).
inline std::optional<QPoly> resultant_interp_rec(const QPoly& P, const QPoly& Q, int v,
                                                 const std::vector<int>& remaining,
                                                 const std::vector<long>& degs) {
  int n = P.nvars();
  if (remaining.empty()) {
    UPoly up = UPoly::from_sparse(P.project_vars({v}), 0);
    UPoly uq = UPoly::from_sparse(Q.project_vars({v}), 0);
    return QPoly::constant(n, resultant_univariate(up, uq));
  }
  int w = remaining.back();
  std::vector<int> rest(remaining.begin(), remaining.end() - 1);
  long need = degs.back() + 1;
  int dvP = P.degree_in(v), dvQ = Q.degree_in(v);

  std::vector<Rational> xs;
  std::vector<QPoly> ys;
  long srun = 0;
  long misses = 0;
  while (static_cast<long>(xs.size()) < need) {
    Rational sv(srun);
    srun = (srun <= 0) ? (-srun + 1) : -srun;
    if (++misses > 8 * need + 64) return std::nullopt;  // too many degenerate samples
    QPoly Ps = specialize_var(P, w, sv);
    QPoly Qs = specialize_var(Q, w, sv);
    if (Ps.degree_in(v) != dvP || Qs.degree_in(v) != dvQ) continue;
    std::vector<long> dd(degs.begin(), degs.end() - 1);
    auto r = resultant_interp_rec(Ps, Qs, v, rest, dd);
    if (!r) return std::nullopt;
    xs.push_back(sv);
    ys.push_back(std::move(*r));
  }
  // Newton interpolation with polynomial values
  size_t k = xs.size();
  std::vector<QPoly> dd = ys;
  for (size_t j = 1; j < k; ++j)
    for (size_t i = k - 1; i >= j; --i) {
      QPoly diff = dd[i] - dd[i - 1];
      dd[i] = diff.scaled(1 / (xs[i] - xs[i - j]));
      if (i == j) break;
    }
  QPoly acc = dd[k - 1];
  QPoly xw = QPoly::variable(n, w);
  for (size_t j = k - 1; j-- > 0;) {
    acc = acc * (xw - QPoly::constant(n, xs[j])) + dd[j];
  }
  return acc;
}

// probe the actual degree of Res_v(P, Q) in the remaining variable w by a
// random specialization of all other remaining variables
inline long probe_degree(const QPoly& P, const QPoly& Q, int v, int w,
                         const std::vector<int>& others, long rigorous, SplitMix64& rng) {
  long best = -2;
  for (int tries = 0; tries < 3; ++tries) {
    QPoly Ps = P, Qs = Q;
    for (int o : others) {
      Rational c(rng.symmetric_nonzero(64));
      Ps = specialize_var(Ps, o, c);
      Qs = specialize_var(Qs, o, c);
    }
    if (Ps.degree_in(v) != P.degree_in(v) || Qs.degree_in(v) != Q.degree_in(v)) continue;
    if (!Ps.uses_var(w) && !Qs.uses_var(w)) return 0;
    QPoly r = resultant_bivariate_interp(Ps, Qs, v, w);
    long d = r.is_zero() ? -1 : r.degree_in(w);
    best = std::max(best, d);
  }
  return best >= 0 ? best : rigorous;
}

}  // namespace detail

// Multivariate gcd (primitive PRS with content recursion) and squarefree part.
// ---------------------------------------------------------------------------

namespace detail {

template <class C>
SparsePoly<C> gcd_mv_impl(SparsePoly<C> p, SparsePoly<C> q);
inline bool coprime_certificate(const QPoly& p, const QPoly& q, int v);
inline bool squarefree_certificate(const QPoly& p);

// gcd of the coefficients of p with respect to var
template <class C>
SparsePoly<C> content_in_var(const SparsePoly<C>& p, int var) {
  auto cs = coeffs_in_var(p, var);
  SparsePoly<C> g(p.nvars());
  for (const auto& c : cs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c : gcd_mv_impl(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

template <class C>
SparsePoly<C> gcd_mv_impl(SparsePoly<C> p, SparsePoly<C> q) {
  int n = p.nvars();
  if (p.is_zero()) return normalize_poly(q);
  if (q.is_zero()) return normalize_poly(p);
  p = normalize_poly(p);
  q = normalize_poly(q);
  if (p.is_constant() || q.is_constant()) return SparsePoly<C>::constant(n, C(1));
  auto sp = p.support_vars(), sq = q.support_vars();
  std::vector<int> shared;
  std::set_intersection(sp.begin(), sp.end(), sq.begin(), sq.end(), std::back_inserter(shared));
  if (shared.empty()) return SparsePoly<C>::constant(n, C(1));
  int v = shared.front();
  for (int w : shared)
    if (p.degree_in(w) + q.degree_in(w) < p.degree_in(v) + q.degree_in(v)) v = w;

  SparsePoly<C> cp = content_in_var(p, v), cq = content_in_var(q, v);
  SparsePoly<C> pp = exact_divide(p, cp), qq = exact_divide(q, cq);
  SparsePoly<C> cont_gcd = gcd_mv_impl(cp, cq);

  if constexpr (std::is_same_v<C, Rational>) {
    // cheap certified coprimality of the primitive parts
    if (coprime_certificate(pp, qq, v)) return normalize_poly(cont_gcd);
  }

  // primitive PRS on the primitive parts
  SparsePoly<C> a = pp, b = qq;
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
  while (!b.is_zero() && b.uses_var(v)) {
    SparsePoly<C> r = prem(a, b, v);
    if (!r.is_zero()) {
      SparsePoly<C> cr = content_in_var(r, v);
      r = exact_divide(r, cr);
      r = normalize_poly(r);
    }
    a = b;
    b = r;
  }
  SparsePoly<C> prim_gcd;
  if (b.is_zero()) {
    prim_gcd = a;
  } else {
    // remainder degenerated to a v-free polynomial: primitive parts coprime
    prim_gcd = SparsePoly<C>::constant(n, C(1));
  }
  return normalize_poly(cont_gcd * prim_gcd);
}

}  // namespace detail

namespace detail {

// Specialize every variable but `keep` at the sample point (entries indexed
// by variable). Returns the dense univariate image.
inline UPoly specialize_to_var(const QPoly& p, int keep, const std::vector<Rational>& at) {
  std::vector<Rational> cs(static_cast<size_t>(p.degree_in(keep)) + 1, Rational(0));
  for (const auto& [e, c] : p.terms()) {
    Rational t = c;
    for (int i = 0; i < p.nvars(); ++i) {
      if (i == keep || e[static_cast<size_t>(i)] == 0) continue;
      t *= pow_rat(at[static_cast<size_t>(i)], e[static_cast<size_t>(i)]);
    }
    cs[e[static_cast<size_t>(keep)]] += t;
  }
  return UPoly(std::move(cs));
}

// Certificate that p is squarefree: for every variable, some specialization
// keeping the leading coefficient alive has a squarefree univariate image.
// (deg_v gcd(p, d_v p) is bounded by the degree of the specialized gcd when
// the leading coefficient survives, so a trivial image certifies that no
// repeated factor involves v.)
inline bool squarefree_certificate(const QPoly& p) {
  auto sup = p.support_vars();
  SplitMix64 rng(0x5afef00dULL + p.term_count());
  for (int v : sup) {
    if (p.degree_in(v) == 0) continue;
    bool certified = false;
    for (int tries = 0; tries < 4 && !certified; ++tries) {
      std::vector<Rational> at(static_cast<size_t>(p.nvars()));
      for (int i = 0; i < p.nvars(); ++i)
        at[static_cast<size_t>(i)] = Rational(rng.symmetric_nonzero(64));
      UPoly img = specialize_to_var(p, v, at);
      if (img.degree() != p.degree_in(v)) continue;  // leading coefficient died
      if (img.degree() < 1) {
        certified = true;
        continue;
      }
      UPoly g = upoly_gcd(img, img.derivative());
      if (g.degree() == 0) certified = true;
    }
    if (!certified) return false;
  }
  return true;
}

// Certificate that the primitive parts of p and q (w.r.t. v) are coprime.
inline bool coprime_certificate(const QPoly& p, const QPoly& q, int v) {
  SplitMix64 rng(0xc0befeedULL + p.term_count() * 31 + q.term_count());
  for (int tries = 0; tries < 4; ++tries) {
    std::vector<Rational> at(static_cast<size_t>(p.nvars()));
    for (int i = 0; i < p.nvars(); ++i)
      at[static_cast<size_t>(i)] = Rational(rng.symmetric_nonzero(64));
    UPoly ip = specialize_to_var(p, v, at);
    UPoly iq = specialize_to_var(q, v, at);
    if (ip.degree() != p.degree_in(v) || iq.degree() != q.degree_in(v)) continue;
    if (ip.degree() < 1 || iq.degree() < 1) return true;
    if (upoly_gcd(ip, iq).degree() == 0) return true;
  }
  return false;
}

}  // namespace detail

template <class C>
SparsePoly<C> gcd_poly(const SparsePoly<C>& p, const SparsePoly<C>& q) {
  return detail::gcd_mv_impl(p, q);
}

template <class C>
SparsePoly<C> squarefree_part_mv(const SparsePoly<C>& p) {
  require(!p.is_zero(), ErrorCode::ZeroPolynomial, "squarefree_part_mv(0)");
  if (p.is_constant()) return SparsePoly<C>::constant(p.nvars(), C(1));
  auto sup = p.support_vars();
  if (sup.size() == 1) {
    // univariate: use the fast dense path when over Q
    if constexpr (std::is_same_v<C, Rational>) {
      UPoly u = UPoly::from_sparse(p.project_vars({sup[0]}), 0);
      UPoly sf = squarefree_part(u);
      QPoly back(p.nvars());
      for (size_t i = 0; i < sf.coeffs().size(); ++i) {
        if (sf.coeffs()[i] == 0) continue;
        Exponents e(p.nvars(), 0);
        e[sup[0]] = static_cast<unsigned>(i);
        back.add_term(e, sf.coeffs()[i]);
      }
      return back;
    }
  }
  if constexpr (std::is_same_v<C, Rational>) {
    if (detail::squarefree_certificate(p)) return normalize_poly(p);
  }
  SparsePoly<C> g = p;
  for (int v : sup) {
    g = gcd_poly(g, p.derivative(v));
    if (g.is_constant()) return normalize_poly(p);
  }
  return normalize_poly(exact_divide(p, g));
}

// Resultant with dispatch: exact univariate determinant when no other
// variable remains, direct interpolation for one remaining variable,
// degree-probed recursive interpolation (verified against extra samples)
// for two or three, symbolic subresultant PRS otherwise.
inline QPoly resultant(const QPoly& a, const QPoly& b, int var) {
  if (a.is_zero() || b.is_zero()) return QPoly(a.nvars());
  if (!a.uses_var(var) || !b.uses_var(var)) return resultant_prs(a, b, var);
  // a shared factor of positive var-degree zeroes the resultant; detect it
  // up front instead of interpolating the zero polynomial
  if (!detail::coprime_certificate(a, b, var)) {
    QPoly g = gcd_poly(a, b);
    if (!g.is_constant() && g.uses_var(var)) return QPoly(a.nvars());
  }
  auto sa = a.support_vars();
  auto sb = b.support_vars();
  std::vector<int> all;
  std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(all));
  std::vector<int> remaining;
  for (int w : all)
    if (w != var) remaining.push_back(w);
  if (remaining.empty()) {
    UPoly up = UPoly::from_sparse(a.project_vars({var}), 0);
    UPoly uq = UPoly::from_sparse(b.project_vars({var}), 0);
    return QPoly::constant(a.nvars(), resultant_univariate(up, uq));
  }
  if (remaining.size() == 1) return resultant_bivariate_interp(a, b, var, remaining[0]);
  if (remaining.size() <= 3) {
    SplitMix64 rng(0x7e5011aULL + 131ULL * static_cast<uint64_t>(a.term_count()) +
                   static_cast<uint64_t>(b.term_count()));
    std::vector<long> rigorous(remaining.size());
    for (size_t i = 0; i < remaining.size(); ++i) {
      int w = remaining[i];
      rigorous[i] = static_cast<long>(a.degree_in(var)) * b.degree_in(w) +
                    static_cast<long>(a.degree_in(w)) * b.degree_in(var);
    }
    std::vector<long> degs = rigorous;
    for (size_t i = 0; i < remaining.size(); ++i) {
      std::vector<int> others;
      for (size_t j = 0; j < remaining.size(); ++j)
        if (j != i) others.push_back(remaining[j]);
      degs[i] = std::min(rigorous[i],
                         detail::probe_degree(a, b, var, remaining[i], others, rigorous[i], rng));
    }
    for (int escalation = 0; escalation < 3; ++escalation) {
      auto r = detail::resultant_interp_rec(a, b, var, remaining, degs);
      if (r) {
        // verify at random full specializations (degree probing is
        // heuristic; a mismatch escalates toward the rigorous bound)
        bool ok = true;
        for (int check = 0; check < 2 && ok; ++check) {
          QPoly Ps = a, Qs = b;
          std::vector<Rational> at(static_cast<size_t>(a.nvars()), Rational(0));
          for (int w : remaining) {
            Rational c(rng.symmetric_nonzero(97));
            at[static_cast<size_t>(w)] = c;
            Ps = detail::specialize_var(Ps, w, c);
            Qs = detail::specialize_var(Qs, w, c);
          }
          if (Ps.degree_in(var) != a.degree_in(var) || Qs.degree_in(var) != b.degree_in(var))
            continue;
          Rational direct = resultant_univariate(UPoly::from_sparse(Ps.project_vars({var}), 0),
                                                 UPoly::from_sparse(Qs.project_vars({var}), 0));
          Rational via = r->evaluate(at);
          ok = (direct == via);
        }
        if (ok) return *r;
      }
      bool grew = false;
      for (size_t i = 0; i < degs.size(); ++i)
        if (degs[i] < rigorous[i]) {
          degs[i] = std::min(rigorous[i], degs[i] * 2 + 8);
          grew = true;
        }
      if (!grew) break;
    }
    // rigorous-degree interpolation as the last exact resort
    auto r = detail::resultant_interp_rec(a, b, var, remaining, rigorous);
    if (r) return *r;
  }
  return resultant_prs(a, b, var);
}

inline GPoly resultant(const GPoly& a, const GPoly& b, int var) { return resultant_prs(a, b, var); }

// ---------------------------------------------------------------------------

}  // namespace crag

#endif
