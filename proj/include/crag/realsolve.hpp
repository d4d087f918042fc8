#ifndef CRAG_REALSOLVE_HPP
#define CRAG_REALSOLVE_HPP

#include <algorithm>
#include <optional>
#include <tuple>
#include <vector>

#include "crag/elim.hpp"
#include "crag/linalg.hpp"

namespace crag {

struct SolveOptions {
  int max_vars = 8;
  int max_degree = 64;       // per input polynomial (public paths tighten this)
  int shear_budget = 8;
  int elim_retries = 3;
  int branch_budget = 4096;
  int refine_rounds = 48;    // certification loop rounds per candidate
  unsigned start_bits = 24;  // dyadic rounding precision ramp
  uint64_t seed = 42;
};

// A certified real solution of a zero-dimensional system: an enclosure box,
// exact coordinates when rational, and enough of the solved branch to refine
// the enclosure further on demand.
struct RealPoint {
  Box box;
  bool rational = false;
  std::vector<Rational> coords;  // valid when rational

  // refinement machinery (square certified subsystem over the unassigned
  // variables, plus triangular assignments in reverse substitution order)
  std::vector<QPoly> sub_eqs;
  std::vector<int> sub_vars;
  std::vector<std::pair<int, QPoly>> assigns_rev;
};

namespace rsdetail {

struct Branch {
  std::vector<QPoly> eqs;  // all over the full variable set
  std::vector<std::pair<int, QPoly>> assigns;  // chronological (var, value)
  std::vector<char> assigned;

  explicit Branch(int nvars) : assigned(static_cast<size_t>(nvars), 0) {}
};

inline bool is_monomial(const QPoly& p) { return p.term_count() == 1; }

// monomial content exponent vector (gcd of exponents across terms)
inline Exponents monomial_content(const QPoly& p) {
  Exponents m;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (first) {
      m = e;
      first = false;
    } else {
      for (size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
    }
  }
  return m;
}

inline QPoly strip_monomial(const QPoly& p, const Exponents& m) {
  QPoly r(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    Exponents ne = e;
    for (size_t i = 0; i < ne.size(); ++i) ne[i] -= m[i];
    r.add_term(ne, c);
  }
  return r;
}

// Reduce a branch to fixpoint: normalize, split on monomial factors,
// substitute variables that occur linearly with constant leading
// coefficient. Returns the list of reduced branches (empty when the branch
// is inconsistent). Splitting replaces an equation u*v = 0 by the branches
// u = 0 and v = 0, whose solution sets cover the original (overlaps are
// deduplicated later by root signatures).
inline void reduce_branch(Branch br, std::vector<Branch>& out, int budget) {
  require(static_cast<int>(out.size()) < budget, ErrorCode::ScaleLimit,
          "branch budget exhausted");
  for (bool changed = true; changed;) {
    changed = false;
    // normalize: squarefree primitive parts, drop zeros, detect dead branch
    std::vector<QPoly> eqs;
    for (auto& p : br.eqs) {
      if (p.is_zero()) continue;
      if (p.is_constant()) return;  // nonzero constant: inconsistent
      QPoly q = squarefree_part_mv(primitive_part(p));
      if (q.is_constant()) return;
      eqs.push_back(std::move(q));
    }
    std::sort(eqs.begin(), eqs.end());
    eqs.erase(std::unique(eqs.begin(), eqs.end()), eqs.end());
    br.eqs = std::move(eqs);

    // monomial split
    for (size_t i = 0; i < br.eqs.size(); ++i) {
      const QPoly& p = br.eqs[i];
      Exponents m = monomial_content(p);
      int content_vars = 0;
      for (unsigned k : m) content_vars += (k > 0);
      if (content_vars == 0) continue;
      // a bare variable is atomic: the linear substitution handles it
      if (p.term_count() == 1 && content_vars == 1) continue;
      QPoly rest = strip_monomial(p, m);
      std::vector<QPoly> others;
      for (size_t j = 0; j < br.eqs.size(); ++j)
        if (j != i) others.push_back(br.eqs[j]);
      for (size_t v = 0; v < m.size(); ++v) {
        if (!m[v]) continue;
        Branch nb = br;
        nb.eqs = others;
        nb.eqs.push_back(QPoly::variable(p.nvars(), static_cast<int>(v)));
        reduce_branch(std::move(nb), out, budget);
      }
      if (!rest.is_constant()) {
        Branch nb = br;
        nb.eqs = others;
        nb.eqs.push_back(rest);
        reduce_branch(std::move(nb), out, budget);
      }
      return;  // this branch fully replaced by the splits
    }

    // linear substitution: p = a*v + b with rational a != 0, b free of v
    for (size_t i = 0; i < br.eqs.size(); ++i) {
      const QPoly& p = br.eqs[i];
      int n = p.nvars();
      for (int v : p.support_vars()) {
        if (p.degree_in(v) != 1) continue;
        auto cs = coeffs_in_var(p, v);
        if (!cs[1].is_constant()) continue;
        Rational a = cs[1].constant_value();
        QPoly value = cs[0].scaled(-1 / a);  // v := -b/a
        Branch nb(n);
        nb.assigned = br.assigned;
        nb.assigns = br.assigns;
        nb.assigned[static_cast<size_t>(v)] = 1;
        nb.assigns.emplace_back(v, value);
        for (size_t j = 0; j < br.eqs.size(); ++j) {
          if (j == i) continue;
          nb.eqs.push_back(br.eqs[j].substitute(v, value));
        }
        br = std::move(nb);
        changed = true;
        break;
      }
      if (changed) break;
    }
  }
  out.push_back(std::move(br));
}

// Eliminant of the branch equations along `keep`: a nonzero univariate
// polynomial vanishing on the keep-coordinates of every branch solution.
// nullopt when the cascade degenerates (positive-dimensional or unlucky
// pivots); a constant-1 polynomial when the branch is inconsistent.
inline std::optional<UPoly> branch_eliminant(const std::vector<QPoly>& eqs, int keep,
                                             int retries) {
  return eliminant_upoly(eqs, keep, retries);
}

}  // namespace rsdetail

// Result of the real solver. `positive_dimensional` marks the honest
// failure mode (the oracle reports Infinite); otherwise `points` is the
// complete list of certified real solutions.
struct RealSolveOutcome {
  bool positive_dimensional = false;
  std::string reason;
  std::vector<RealPoint> points;
};

namespace rsdetail {

struct Candidate {
  Branch* branch;
  Box box;                       // over all vars
  std::vector<RootInterval> roots;  // per unassigned var (parallel to uvars)
  std::vector<int> uvars;
  bool dead = false;
};

// evaluate triangular assignments (reverse order) into the box
inline void eval_assignments(const Branch& br, Box& box) {
  for (auto it = br.assigns.rbegin(); it != br.assigns.rend(); ++it) {
    QInterval v = interval_eval(it->second, box);
    box[static_cast<size_t>(it->first)] = v;
  }
}

// Krawczyk step. Returns +1 when a unique subsystem zero is certified in
// the box (and contracts it), 0 when inconclusive (still contracts), -1
// when the box certifiably contains no subsystem zero.
inline int try_krawczyk(const std::vector<QPoly>& eqs, const std::vector<int>& uvars,
                        Box& box, unsigned bits) {
  int u = static_cast<int>(uvars.size());
  std::vector<Rational> mid(box.size(), Rational(0));
  for (size_t i = 0; i < box.size(); ++i) mid[i] = box[i].mid();
  QMat jac(u, u);
  for (int r = 0; r < u; ++r)
    for (int c = 0; c < u; ++c)
      jac(r, c) = eqs[static_cast<size_t>(r)].derivative(uvars[static_cast<size_t>(c)]).evaluate(mid);
  auto inv = exact_inverse(jac);
  if (!inv) return 0;
  // K = mid - Y f(mid) + (I - Y J(box)) (box - mid), over the uvars
  QVec fmid(u);
  for (int r = 0; r < u; ++r) fmid(r) = eqs[static_cast<size_t>(r)].evaluate(mid);
  IMat jbox(u, u);
  for (int r = 0; r < u; ++r)
    for (int c = 0; c < u; ++c)
      jbox(r, c) = interval_eval(eqs[static_cast<size_t>(r)].derivative(uvars[static_cast<size_t>(c)]), box);
  bool strict = true;
  std::vector<QInterval> contracted(static_cast<size_t>(u));
  for (int r = 0; r < u; ++r) {
    QInterval acc(Rational(0));
    for (int c = 0; c < u; ++c) {
      QInterval defect(Rational(r == c ? 1 : 0));
      for (int k = 0; k < u; ++k) defect -= QInterval((*inv)(r, k)) * jbox(k, c);
      int vc = uvars[static_cast<size_t>(c)];
      acc += defect * (box[static_cast<size_t>(vc)] - QInterval(mid[static_cast<size_t>(vc)]));
    }
    Rational drift(0);
    for (int k = 0; k < u; ++k) drift += (*inv)(r, k) * fmid(k);
    int vr = uvars[static_cast<size_t>(r)];
    QInterval K = QInterval(mid[static_cast<size_t>(vr)] - drift) + acc;
    K = K.round_out(bits + 16);
    const QInterval& B = box[static_cast<size_t>(vr)];
    if (!(K.lo > B.lo && K.hi < B.hi)) strict = false;
    Rational lo = std::max(K.lo, B.lo), hi = std::min(K.hi, B.hi);
    if (lo > hi) return -1;  // K(B) disjoint from B: no zero in B
    contracted[static_cast<size_t>(r)] = QInterval(lo, hi);
  }
  for (int r = 0; r < u; ++r) box[static_cast<size_t>(uvars[static_cast<size_t>(r)])] = contracted[static_cast<size_t>(r)];
  return strict ? 1 : 0;
}

}  // namespace rsdetail

// Complete certified real solving of a zero-dimensional polynomial system.
// Solutions are covered by branch decomposition (each branch equation set
// cuts out a subset of the input's zero set, and the union covers it);
// candidates come from per-coordinate eliminants, are pruned by exact
// interval evaluation, certified by Krawczyk on a square subsystem (exact
// rational evaluation when the candidate is rational), and deduplicated by
// global root signatures.
inline RealSolveOutcome solve_real(const std::vector<QPoly>& eqs_in, int nvars,
                                   const SolveOptions& opt) {
  using namespace rsdetail;
  RealSolveOutcome out;
  require(nvars <= opt.max_vars, ErrorCode::ScaleLimit, "solve_real: too many variables");
  for (const auto& p : eqs_in)
    require(p.degree() <= opt.max_degree, ErrorCode::ScaleLimit, "solve_real: degree limit");

  // trivial inconsistency / tautology handling
  std::vector<QPoly> eqs;
  for (const auto& p : eqs_in) {
    if (p.is_zero()) continue;
    if (p.is_constant()) return out;  // nonzero constant: empty set
    eqs.push_back(p);
  }
  if (eqs.empty()) {
    if (nvars == 0) {
      RealPoint pt;
      pt.rational = true;
      out.points.push_back(pt);
      return out;
    }
    out.positive_dimensional = true;
    out.reason = "no equations";
    return out;
  }

  // variables never used by any equation: solve the projection; nonempty
  // projections make the solution set a positive-dimensional cylinder
  {
    std::vector<char> used(static_cast<size_t>(nvars), 0);
    for (const auto& p : eqs)
      for (int v : p.support_vars()) used[static_cast<size_t>(v)] = 1;
    std::vector<int> keep;
    for (int v = 0; v < nvars; ++v)
      if (used[static_cast<size_t>(v)]) keep.push_back(v);
    if (static_cast<int>(keep.size()) < nvars) {
      std::vector<QPoly> proj;
      for (const auto& p : eqs) proj.push_back(p.project_vars(keep));
      RealSolveOutcome sub = solve_real(proj, static_cast<int>(keep.size()), opt);
      if (sub.positive_dimensional || !sub.points.empty()) {
        out.positive_dimensional = true;
        out.reason = "free variable over a nonempty base";
      }
      return out;  // empty base: empty set
    }
  }

  // branch decomposition
  std::vector<Branch> branches;
  {
    Branch root(nvars);
    root.eqs = eqs;
    reduce_branch(std::move(root), branches, opt.branch_budget);
  }

  // per-branch eliminants; positive-dimensional detection
  struct BranchData {
    Branch br;
    std::vector<int> uvars;
    std::vector<UPoly> elims;  // parallel to uvars
  };
  std::vector<BranchData> bds;
  for (auto& br : branches) {
    BranchData bd{std::move(br), {}, {}};
    std::vector<char> used(static_cast<size_t>(nvars), 0);
    for (const auto& p : bd.br.eqs)
      for (int v : p.support_vars()) used[static_cast<size_t>(v)] = 1;
    bool dead = false;
    for (int v = 0; v < nvars; ++v) {
      if (bd.br.assigned[static_cast<size_t>(v)]) continue;
      if (!used[static_cast<size_t>(v)]) {
        // unconstrained variable: the branch is a cylinder over the
        // remaining unassigned variables (assigned ones are functions of
        // them). Nonempty base makes the whole set infinite.
        std::vector<int> keep;
        for (int w = 0; w < nvars; ++w)
          if (w != v && !bd.br.assigned[static_cast<size_t>(w)]) keep.push_back(w);
        std::vector<QPoly> proj;
        for (const auto& p : bd.br.eqs) proj.push_back(p.project_vars(keep));
        RealSolveOutcome sub = solve_real(proj, static_cast<int>(keep.size()), opt);
        if (sub.positive_dimensional || !sub.points.empty()) {
          out.positive_dimensional = true;
          out.reason = "branch with a free variable has real points";
          return out;
        }
        dead = true;  // projected branch empty: no solutions here
        break;
      }
    }
    if (dead) continue;
    bool bad = false;
    for (int v = 0; v < nvars && !bad; ++v) {
      if (bd.br.assigned[static_cast<size_t>(v)]) continue;
      auto e = branch_eliminant(bd.br.eqs, v, opt.elim_retries);
      if (!e) {
        out.positive_dimensional = true;
        out.reason = "eliminant cascade degenerated";
        return out;
      }
      if (e->degree() == 0) {
        bad = true;  // inconsistent branch
        break;
      }
      bd.uvars.push_back(v);
      bd.elims.push_back(std::move(*e));
    }
    if (!bad) bds.push_back(std::move(bd));
  }

  // global coordinate eliminants (for signatures): squarefree product over
  // branches; every true solution coordinate is a root
  std::vector<UPoly> global(static_cast<size_t>(nvars));
  for (int v = 0; v < nvars; ++v) {
    UPoly acc = UPoly::constant(Rational(1));
    for (auto& bd : bds) {
      UPoly piece;
      auto it = std::find(bd.uvars.begin(), bd.uvars.end(), v);
      if (it != bd.uvars.end()) {
        piece = bd.elims[static_cast<size_t>(it - bd.uvars.begin())];
      } else {
        // assigned variable: eliminate through the full triangular set of
        // assignment relations plus the branch equations
        std::vector<QPoly> sys = bd.br.eqs;
        for (const auto& [w, value] : bd.br.assigns)
          sys.push_back(QPoly::variable(nvars, w) - value);
        auto e = branch_eliminant(sys, v, opt.elim_retries);
        if (!e) {
          out.positive_dimensional = true;
          out.reason = "assigned-coordinate eliminant degenerated";
          return out;
        }
        piece = *e;
      }
      if (piece.degree() > 0) acc = acc * piece;
    }
    global[static_cast<size_t>(v)] = acc.degree() > 0 ? squarefree_part(acc) : acc;
  }
  std::vector<std::vector<RootInterval>> global_roots(static_cast<size_t>(nvars));
  for (int v = 0; v < nvars; ++v)
    if (global[static_cast<size_t>(v)].degree() > 0)
      global_roots[static_cast<size_t>(v)] = isolate_real_roots(global[static_cast<size_t>(v)]);

  // candidates per branch
  std::vector<RealPoint> accepted;
  std::vector<std::vector<int>> signatures;

  for (auto& bd : bds) {
    size_t u = bd.uvars.size();
    std::vector<std::vector<RootInterval>> roots(u);
    bool empty_branch = false;
    for (size_t i = 0; i < u; ++i) {
      roots[i] = isolate_real_roots(bd.elims[i]);
      for (auto& r : roots[i]) refine_root(bd.elims[i], r, Rational(1, 1024));
      if (roots[i].empty()) empty_branch = true;
    }
    if (empty_branch) continue;

    // hulls per coordinate, for partial-box pruning during enumeration
    std::vector<QInterval> hulls(u);
    for (size_t i = 0; i < u; ++i) {
      QInterval h(roots[i].front().lo, roots[i].front().hi);
      for (const auto& r : roots[i]) h = h.hull(QInterval(r.lo, r.hi));
      hulls[i] = h;
    }

    // depth-first enumeration of root tuples with early interval pruning;
    // leaves run the certification loop below
    std::vector<size_t> idx(u, 0);
    std::vector<std::vector<size_t>> tuples;
    auto partial_prunes = [&](const std::vector<size_t>& partial) {
      Box pbox(static_cast<size_t>(nvars), QInterval(Rational(0)));
      for (size_t i = 0; i < u; ++i)
        pbox[static_cast<size_t>(bd.uvars[i])] =
            i < partial.size() ? QInterval(roots[i][partial[i]].lo, roots[i][partial[i]].hi)
                               : hulls[i];
      eval_assignments(bd.br, pbox);
      for (const auto& p : bd.br.eqs)
        if (!interval_eval(p, pbox).contains_zero()) return true;
      return false;
    };
    std::vector<size_t> partial;
    auto dfs = [&](auto&& self, size_t level) -> void {
      if (partial_prunes(partial)) return;
      if (level == u) {
        tuples.push_back(partial);
        return;
      }
      for (size_t r = 0; r < roots[level].size(); ++r) {
        partial.push_back(r);
        self(self, level + 1);
        partial.pop_back();
      }
    };
    dfs(dfs, 0);

    for (const auto& tuple : tuples) {
      for (size_t i = 0; i < u; ++i) idx[i] = tuple[i];
      // assemble candidate
      Box box(static_cast<size_t>(nvars), QInterval(Rational(0)));
      for (size_t i = 0; i < u; ++i) {
        const RootInterval& r = roots[i][idx[i]];
        box[static_cast<size_t>(bd.uvars[i])] = QInterval(r.lo, r.hi);
      }
      eval_assignments(bd.br, box);

      // certification loop
      bool rejected = false, certified = false;
      std::vector<RootInterval> local(u);
      for (size_t i = 0; i < u; ++i) local[i] = roots[i][idx[i]];
      unsigned bits = opt.start_bits;
      std::vector<QPoly> sub;
      std::vector<std::vector<size_t>> subsets;
      for (int round = 0; round < opt.refine_rounds && !rejected; ++round) {
        // exact rational fast path
        bool all_rat = true;
        for (size_t i = 0; i < u; ++i) all_rat = all_rat && local[i].exact;
        if (all_rat) {
          std::vector<Rational> pt(static_cast<size_t>(nvars), Rational(0));
          for (size_t i = 0; i < u; ++i) pt[static_cast<size_t>(bd.uvars[i])] = local[i].value;
          bool ratpt = true;
          Box pbox(static_cast<size_t>(nvars));
          for (int vv = 0; vv < nvars; ++vv) pbox[static_cast<size_t>(vv)] = QInterval(pt[static_cast<size_t>(vv)]);
          eval_assignments(bd.br, pbox);
          for (int vv = 0; vv < nvars; ++vv) {
            if (!pbox[static_cast<size_t>(vv)].is_point()) ratpt = false;
            pt[static_cast<size_t>(vv)] = pbox[static_cast<size_t>(vv)].lo;
          }
          if (ratpt) {
            bool ok = true;
            for (const auto& p : eqs)
              if (p.evaluate(pt) != 0) {
                ok = false;
                break;
              }
            if (!ok) {
              rejected = true;
              break;
            }
            RealPoint rp;
            rp.rational = true;
            rp.coords = pt;
            rp.box = pbox;
            for (auto it = bd.br.assigns.rbegin(); it != bd.br.assigns.rend(); ++it)
              rp.assigns_rev.emplace_back(it->first, it->second);
            // exact signature
            std::vector<int> sig(static_cast<size_t>(nvars), -1);
            bool sig_ok = true;
            for (int vv = 0; vv < nvars; ++vv) {
              int hit = -1;
              auto& grs = global_roots[static_cast<size_t>(vv)];
              for (size_t g = 0; g < grs.size(); ++g)
                if (grs[g].contains(pt[static_cast<size_t>(vv)]) ||
                    (grs[g].exact && grs[g].value == pt[static_cast<size_t>(vv)])) {
                  hit = static_cast<int>(g);
                  break;
                }
              if (hit < 0) sig_ok = false;
              sig[static_cast<size_t>(vv)] = hit;
            }
            if (!sig_ok) {
              rejected = true;  // not on the global eliminants: ghost
              break;
            }
            bool dup = false;
            for (const auto& s : signatures) dup = dup || (s == sig);
            if (!dup) {
              signatures.push_back(sig);
              accepted.push_back(std::move(rp));
            }
            certified = true;
            break;
          }
        }

        // interval exclusion on the original equations
        for (const auto& p : eqs) {
          if (!interval_eval(p, box).contains_zero()) {
            rejected = true;
            break;
          }
        }
        if (rejected) break;

        // Krawczyk over square subsystems of the branch equations. Any
        // subsystem's contraction is sound for full-system solutions, and a
        // certifiably empty K means the candidate holds no solution at all.
        // Subsets rotate because a fixed choice can be singular (e.g. the
        // minor equations of a critical system without the level equation).
        if (u > 0 && bd.br.eqs.size() >= u) {
          if (subsets.empty()) {
            std::vector<size_t> order(bd.br.eqs.size());
            for (size_t i = 0; i < order.size(); ++i) order[i] = i;
            std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
              return bd.br.eqs[x].degree() < bd.br.eqs[y].degree();
            });
            std::vector<size_t> pick(u);
            for (size_t i = 0; i < u; ++i) pick[i] = i;
            while (subsets.size() < 64) {
              std::vector<size_t> sel(u);
              for (size_t i = 0; i < u; ++i) sel[i] = order[pick[i]];
              subsets.push_back(sel);
              size_t i = u;
              while (i-- > 0) {
                if (pick[i] != bd.br.eqs.size() - u + i) {
                  ++pick[i];
                  for (size_t j = i + 1; j < u; ++j) pick[j] = pick[j - 1] + 1;
                  break;
                }
                if (i == 0) {
                  pick.clear();
                  break;
                }
              }
              if (pick.empty()) break;
            }
          }
          for (size_t si = 0; si < subsets.size() && !certified && !rejected; ++si) {
            size_t which = (static_cast<size_t>(round) + si) % subsets.size();
            std::vector<QPoly> trial;
            for (size_t e : subsets[which]) trial.push_back(bd.br.eqs[e]);
            int kr = try_krawczyk(trial, bd.uvars, box, bits);
            if (kr < 0) {
              rejected = true;  // no subsystem zero in the box at all
              break;
            }
            if (kr > 0) {
              certified = true;
              sub = trial;
            }
          }
        } else if (u == 0) {
          certified = true;  // fully triangular; handled by the rational path
        }

        if (certified) {
          // all original equations must still straddle zero on the final box
          bool straddle = true;
          for (const auto& p : eqs) straddle = straddle && interval_eval(p, box).contains_zero();
          if (!straddle) {
            rejected = true;
            break;
          }
          // unique global-root signature
          std::vector<int> sig(static_cast<size_t>(nvars), -1);
          bool sig_ok = true;
          for (int vv = 0; vv < nvars && sig_ok; ++vv) {
            auto& grs = global_roots[static_cast<size_t>(vv)];
            int hit = -1;
            for (size_t g = 0; g < grs.size(); ++g) {
              QInterval gi(grs[g].lo, grs[g].hi);
              if (gi.intersects(box[static_cast<size_t>(vv)])) {
                if (hit >= 0) {
                  sig_ok = false;  // ambiguous: refine more
                  break;
                }
                hit = static_cast<int>(g);
              }
            }
            if (hit < 0) {
              rejected = true;  // off the global eliminants: ghost
              break;
            }
            sig[static_cast<size_t>(vv)] = hit;
          }
          if (rejected) break;
          if (sig_ok) {
            bool dup = false;
            for (const auto& s : signatures) dup = dup || (s == sig);
            if (!dup) {
              RealPoint rp;
              rp.box = box;
              rp.sub_eqs = sub;
              rp.sub_vars = bd.uvars;
              for (auto it = bd.br.assigns.rbegin(); it != bd.br.assigns.rend(); ++it)
                rp.assigns_rev.emplace_back(it->first, it->second);
              signatures.push_back(sig);
              accepted.push_back(std::move(rp));
            }
            break;
          }
          certified = false;  // signature ambiguous: keep refining
        }

        // refine: halve every root interval, intersect with the (possibly
        // Krawczyk-contracted) box coordinate; empty intersection means the
        // box's subsystem zero is not above this root tuple
        for (size_t i = 0; i < u && !rejected; ++i) {
          if (local[i].exact) {
            box[static_cast<size_t>(bd.uvars[i])] = QInterval(local[i].value);
            continue;
          }
          refine_root(bd.elims[i], local[i], local[i].width() / 2);
          const QInterval& cur = box[static_cast<size_t>(bd.uvars[i])];
          Rational lo = std::max(local[i].lo, cur.lo), hi = std::min(local[i].hi, cur.hi);
          if (lo > hi) {
            rejected = true;
            break;
          }
          box[static_cast<size_t>(bd.uvars[i])] = QInterval(lo, hi);
        }
        if (rejected) break;
        // refine matching global roots as well
        for (int vv = 0; vv < nvars; ++vv) {
          auto& grs = global_roots[static_cast<size_t>(vv)];
          for (auto& g : grs)
            if (QInterval(g.lo, g.hi).intersects(box[static_cast<size_t>(vv)]))
              refine_root(global[static_cast<size_t>(vv)], g, g.width() / 2);
        }
        eval_assignments(bd.br, box);
        bits += 8;
      }
      if (!rejected && !certified)
        fail(ErrorCode::RefinementLimit, "candidate neither certified nor excluded");
    }
  }

  out.points = std::move(accepted);
  return out;
}

// Refine a certified point's enclosure below the requested width.
inline void refine_point(RealPoint& pt, const Rational& width, int max_rounds = 256) {
  if (pt.rational) return;
  for (int round = 0; round < max_rounds; ++round) {
    Rational w(0);
    for (const auto& iv : pt.box) w = std::max(w, iv.width());
    if (w <= width) return;
    if (!pt.sub_eqs.empty()) {
      rsdetail::try_krawczyk(pt.sub_eqs, pt.sub_vars, pt.box, 64 + static_cast<unsigned>(round) * 16);
    }
    // bisect any stubborn coordinates via the subsystem? Krawczyk contracts
    // quadratically near a regular zero; rely on it.
    for (auto& [var, value] : pt.assigns_rev)
      pt.box[static_cast<size_t>(var)] = interval_eval(value, pt.box);
    Rational w2(0);
    for (const auto& iv : pt.box) w2 = std::max(w2, iv.width());
    if (w2 >= w && w2 > width)
      fail(ErrorCode::RefinementLimit, "refine_point: no contraction progress");
  }
  fail(ErrorCode::RefinementLimit, "refine_point: round budget exhausted");
}

}  // namespace crag

#endif
