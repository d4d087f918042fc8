#ifndef CRAG_ELIM_HPP
#define CRAG_ELIM_HPP

#include <optional>

#include "crag/resultant.hpp"

namespace crag {

// Eliminant of a polynomial system along one kept variable by iterated
// Sylvester resultants. The result is a nonzero polynomial univariate in
// `keep` vanishing on the keep-coordinate of every common zero (a superset
// of values; consumers prune). A constant result certifies the system is
// inconsistent (resultants lie in the generated ideal).
//
// Degenerate pairs (vanishing resultants from shared factors) and monomial
// factors are handled by exact union splits: Z(uv, R) = Z(u, R) + Z(v, R),
// and the eliminant of a union is the squarefree product of the pieces.
template <class C>
std::optional<SparsePoly<C>> eliminant_along(std::vector<SparsePoly<C>> polys, int keep,
                                             int retries, int depth = 0) {
  if (depth > 8) return std::nullopt;
  if (polys.empty()) return std::nullopt;
  const int n = polys.front().nvars();
  auto constant_one = [&]() { return SparsePoly<C>::constant(n, C(1)); };

  // normalize; detect inconsistency
  {
    std::vector<SparsePoly<C>> live;
    for (auto& p : polys) {
      if (p.is_zero()) continue;
      if (p.is_constant()) return constant_one();
      SparsePoly<C> q = squarefree_part_mv(normalize_poly(p));
      if (q.is_constant()) return constant_one();
      live.push_back(std::move(q));
    }
    std::sort(live.begin(), live.end());
    live.erase(std::unique(live.begin(), live.end()), live.end());
    polys = std::move(live);
    if (polys.empty()) return std::nullopt;
  }

  // monomial-content split: p = x^m * rest
  for (size_t i = 0; i < polys.size(); ++i) {
    Exponents m;
    bool first = true;
    for (const auto& [e, c] : polys[i].terms()) {
      if (first) {
        m = e;
        first = false;
      } else {
        for (size_t k = 0; k < m.size(); ++k) m[k] = std::min(m[k], e[k]);
      }
    }
    int content_vars = 0;
    for (unsigned k : m) content_vars += (k > 0);
    if (content_vars == 0) continue;
    if (polys[i].term_count() == 1 && content_vars == 1) continue;  // already a bare variable
    SparsePoly<C> rest(n);
    for (const auto& [e, c] : polys[i].terms()) {
      Exponents ne = e;
      for (size_t k = 0; k < ne.size(); ++k) ne[k] -= m[k];
      rest.add_term(ne, c);
    }
    SparsePoly<C> acc = constant_one();
    auto absorb = [&](const SparsePoly<C>& piece) -> bool {
      std::vector<SparsePoly<C>> sub = polys;
      sub[i] = piece;
      auto e = eliminant_along(sub, keep, retries, depth + 1);
      if (!e) return false;
      acc = acc * (*e);
      return true;
    };
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      if (m[static_cast<size_t>(v)]) ok = absorb(SparsePoly<C>::variable(n, v));
    if (ok && !rest.is_constant()) ok = absorb(rest);
    if (!ok) return std::nullopt;
    return squarefree_part_mv(acc);
  }

  for (int variant = 0; variant < retries; ++variant) {
    std::vector<SparsePoly<C>> work = polys;
    std::vector<int> order;
    {
      std::vector<char> used(static_cast<size_t>(n), 0);
      for (const auto& p : work)
        for (int v : p.support_vars()) used[static_cast<size_t>(v)] = 1;
      for (int v = 0; v < n; ++v)
        if (v != keep && used[static_cast<size_t>(v)]) order.push_back(v);
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        int da = 0, db = 0;
        for (const auto& p : work) {
          da = std::max(da, p.uses_var(a) ? p.degree_in(a) : 0);
          db = std::max(db, p.uses_var(b) ? p.degree_in(b) : 0);
        }
        return da < db;
      });
      if (!order.empty())
        std::rotate(order.begin(), order.begin() + (variant % static_cast<int>(order.size())),
                    order.end());
    }

    bool failed = false;
    for (size_t oi = 0; oi < order.size() && !failed; ++oi) {
      int v = order[oi];
      std::vector<SparsePoly<C>> with_v, next;
      for (auto& p : work) (p.uses_var(v) ? with_v : next).push_back(p);
      if (with_v.empty()) continue;
      size_t piv = 0;
      for (size_t i = 1; i < with_v.size(); ++i) {
        int di = with_v[i].degree_in(v), dp = with_v[piv].degree_in(v);
        if (di < dp || (di == dp && with_v[i].term_count() < with_v[piv].term_count())) piv = i;
      }
      for (size_t i = 0; i < with_v.size(); ++i) {
        if (i == piv) continue;
        SparsePoly<C> r = resultant(with_v[piv], with_v[i], v);
        if (r.is_zero()) {
          // shared factor g: split the zero set as
          // Z(pivot, q, R) = Z(g, R) + Z(pivot/g, q/g, R)
          SparsePoly<C> g = gcd_poly(with_v[piv], with_v[i]);
          if (g.is_constant()) continue;  // lost constraint: other pairs may carry it
          std::vector<SparsePoly<C>> restc;
          for (auto& p : work)
            if (!(p == with_v[piv]) && !(p == with_v[i])) restc.push_back(p);
          std::vector<SparsePoly<C>> sys1 = restc;
          sys1.push_back(g);
          std::vector<SparsePoly<C>> sys2 = restc;
          sys2.push_back(exact_divide(with_v[piv], g));
          sys2.push_back(exact_divide(with_v[i], g));
          auto e1 = eliminant_along(sys1, keep, retries, depth + 1);
          auto e2 = eliminant_along(sys2, keep, retries, depth + 1);
          if (!e1 || !e2) {
            failed = true;
            break;
          }
          return squarefree_part_mv((*e1) * (*e2));
        }
        if (r.is_constant()) return constant_one();
        r = squarefree_part_mv(normalize_poly(r));
        if (r.is_constant()) return constant_one();
        next.push_back(std::move(r));
      }
      if (failed) break;
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      if (next.empty()) {
        failed = true;
        break;
      }
      work = std::move(next);
    }
    if (failed) continue;

    // combine what survived in the kept variable
    SparsePoly<C> acc(n);
    bool have = false;
    for (const auto& p : work) {
      auto sup = p.support_vars();
      if (sup.empty()) {
        if (!p.is_zero()) return constant_one();
        continue;
      }
      if (sup.size() != 1 || sup[0] != keep) continue;
      if (!have) {
        acc = p;
        have = true;
      } else {
        acc = gcd_poly(acc, p);
      }
      if (have && acc.is_constant()) return constant_one();
    }
    if (!have) continue;
    return squarefree_part_mv(acc);
  }
  return std::nullopt;
}

// Rational-coefficient convenience wrapper producing a dense univariate.
inline std::optional<UPoly> eliminant_upoly(const std::vector<QPoly>& polys, int keep,
                                            int retries) {
  auto e = eliminant_along<Rational>(polys, keep, retries);
  if (!e) return std::nullopt;
  if (e->is_constant()) return UPoly::constant(Rational(1));
  return squarefree_part(UPoly::from_sparse(e->project_vars({keep}), 0));
}

}  // namespace crag

#endif
