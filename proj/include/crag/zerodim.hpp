#ifndef CRAG_ZERODIM_HPP
#define CRAG_ZERODIM_HPP

#include <optional>
#include <string>
#include <vector>

#include "crag/realsolve.hpp"

namespace crag {

enum class Field { Real, Complex };

// Polynomial system over Q or Q(i). Real-field systems must have real
// coefficients; complex-field systems may carry Gaussian coefficients but
// run the (much faster) rational path whenever the imaginary parts vanish.
struct PolySystem {
  Field field = Field::Real;
  int nvars = 0;
  std::vector<GPoly> polys;

  static PolySystem real(int nvars, std::vector<QPoly> ps) {
    PolySystem s;
    s.field = Field::Real;
    s.nvars = nvars;
    for (auto& p : ps) s.polys.push_back(p.map_coeffs([](const Rational& c) {
      return GaussianRational(c);
    }));
    return s;
  }
  static PolySystem complex(int nvars, std::vector<QPoly> ps) {
    PolySystem s = real(nvars, std::move(ps));
    s.field = Field::Complex;
    return s;
  }
  static PolySystem complex_gaussian(int nvars, std::vector<GPoly> ps) {
    PolySystem s;
    s.field = Field::Complex;
    s.nvars = nvars;
    s.polys = std::move(ps);
    return s;
  }

  bool all_real() const {
    for (const auto& p : polys)
      for (const auto& [e, c] : p.terms())
        if (c.im != 0) return false;
    return true;
  }

  std::vector<QPoly> real_view() const {
    require(all_real(), ErrorCode::InvariantViolation,
            "real view of a system with complex coefficients");
    std::vector<QPoly> out;
    for (const auto& p : polys)
      out.push_back(p.map_coeffs([](const GaussianRational& c) { return c.re; }));
    return out;
  }
};

struct CountResult {
  bool infinite = false;
  Int count = 0;

  static CountResult inf() {
    CountResult r;
    r.infinite = true;
    return r;
  }
  static CountResult finite(Int c) {
    CountResult r;
    r.count = std::move(c);
    return r;
  }
  friend bool operator==(const CountResult& a, const CountResult& b) {
    return a.infinite == b.infinite && (a.infinite || a.count == b.count);
  }
};

// Univariate eliminant along a sheared linear functional t = lambda . x.
struct Eliminant {
  UPoly q;                      // squarefree
  std::vector<Rational> shear;  // lambda
};

struct IsolatingBox {
  Box box;
  bool certified = true;
  bool rational = false;
  std::vector<Rational> point;  // when rational
};

namespace zdetail {

// Deterministic shear schedule: coordinates in [1, 2^(8+j)] from a
// splitmix-style generator keyed by the seed (attempt j widens the range).
inline std::vector<Rational> shear_vector(int n, uint64_t seed, int attempt) {
  SplitMix64 rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<uint64_t>(attempt) + 1);
  std::vector<Rational> lam(static_cast<size_t>(n));
  uint64_t range = 1ULL << std::min(30, 8 + attempt);
  for (int i = 0; i < n; ++i) lam[static_cast<size_t>(i)] = Rational(static_cast<long>(rng.below(range) + 1));
  return lam;
}

// Eliminant in the shear variable t = lambda . x for a system over the
// coefficient field C (rationals or Gaussian rationals). Returns the
// squarefree eliminant as a univariate polynomial in the last variable.
template <class C>
std::optional<SparsePoly<C>> shear_eliminant(const std::vector<SparsePoly<C>>& polys, int nvars,
                                             const std::vector<Rational>& lam, int retries) {
  std::vector<SparsePoly<C>> ext;
  for (const auto& p : polys) ext.push_back(p.extend(1));
  SparsePoly<C> t_eq = SparsePoly<C>::variable(nvars + 1, nvars);
  for (int i = 0; i < nvars; ++i)
    t_eq -= SparsePoly<C>::variable(nvars + 1, i).scaled(C(lam[static_cast<size_t>(i)]));
  ext.push_back(t_eq);
  return eliminant_along<C>(ext, nvars, retries);
}

}  // namespace zdetail

// true iff every coordinate has a nonzero eliminant (finitely many values
// per coordinate over C). This is the operational zero-dimensionality test;
// the empty set counts as zero-dimensional.
inline bool is_zero_dimensional(const PolySystem& sys, const SolveOptions& opt = {}) {
  bool real_coeffs = sys.all_real();

  auto run = [&](const auto& polys) -> bool {
    using P = std::decay_t<decltype(polys.front())>;
    std::vector<P> live;
    bool inconsistent = false;
    for (const auto& p : polys) {
      if (p.is_zero()) continue;
      if (p.is_constant()) {
        inconsistent = true;
        break;
      }
      live.push_back(p);
    }
    if (inconsistent) return true;  // empty set
    if (live.empty()) return sys.nvars == 0;
    for (int v = 0; v < sys.nvars; ++v)
      if (!eliminant_along(live, v, opt.elim_retries)) return false;
    return true;
  };

  if (real_coeffs) {
    std::vector<QPoly> rp = sys.real_view();
    if (rp.empty()) return sys.nvars == 0;
    return run(rp);
  }
  if (sys.polys.empty()) return sys.nvars == 0;
  return run(sys.polys);
}

// Shear eliminant with the squarefree/stabilization guard of the spec:
// accept the first shear whose eliminant is nonzero and whose squarefree
// degree is reproduced by the next shear.
inline Eliminant eliminant(const PolySystem& sys, uint64_t seed, const SolveOptions& opt = {}) {
  require(is_zero_dimensional(sys, opt), ErrorCode::NotZeroDimensional,
          "eliminant requires a zero-dimensional system");
  bool real_coeffs = sys.all_real();
  std::optional<UPoly> prev;
  std::vector<Rational> prev_shear;
  for (int attempt = 0; attempt < opt.shear_budget; ++attempt) {
    std::vector<Rational> lam = zdetail::shear_vector(sys.nvars, seed, attempt);
    std::optional<UPoly> q;
    if (real_coeffs) {
      auto e = zdetail::shear_eliminant(sys.real_view(), sys.nvars, lam, opt.elim_retries);
      if (e) q = squarefree_part(UPoly::from_sparse(e->project_vars({sys.nvars}), 0));
    } else {
      // Gaussian coefficients: the roots are never lifted, only the
      // squarefree degree is consumed; record a degree-faithful monomial
      auto e = zdetail::shear_eliminant(sys.polys, sys.nvars, lam, opt.elim_retries);
      if (e) {
        int d = e->is_constant() ? 0 : e->degree_in(sys.nvars);
        std::vector<Rational> c(static_cast<size_t>(d) + 1, Rational(0));
        c.back() = 1;
        q = UPoly(std::move(c));
      }
    }
    if (!q || q->is_zero()) continue;
    if (prev && prev->degree() == q->degree()) {
      return Eliminant{*prev, prev_shear};  // stabilized across two shears
    }
    prev = std::move(q);
    prev_shear = std::move(lam);
  }
  if (prev && prev->degree() == 0) return Eliminant{*prev, prev_shear};  // empty system
  fail(ErrorCode::ShearBudgetExhausted, "no stable shear eliminant found");
}

// ---------------------------------------------------------------------------
// count_points
// ---------------------------------------------------------------------------

inline CountResult count_points(const PolySystem& sys, const SolveOptions& opt = {}) {
  require(sys.nvars <= opt.max_vars, ErrorCode::ScaleLimit, "count_points: too many variables");
  for (const auto& p : sys.polys)
    require(p.is_zero() || p.degree() <= opt.max_degree, ErrorCode::ScaleLimit,
            "count_points: degree limit");

  // strip zero polynomials; nonzero constants kill the system
  bool real_coeffs = sys.all_real();
  std::vector<GPoly> live;
  for (const auto& p : sys.polys) {
    if (p.is_zero()) continue;
    if (p.is_constant()) return CountResult::finite(0);
    live.push_back(p);
  }
  if (live.empty()) return sys.nvars == 0 ? CountResult::finite(1) : CountResult::inf();
  if (sys.nvars == 0) return CountResult::finite(1);  // only zero polys remain

  if (sys.field == Field::Real) {
    require(real_coeffs, ErrorCode::InvariantViolation, "real system with complex coefficients");
    std::vector<QPoly> rp;
    for (const auto& p : live)
      rp.push_back(p.map_coeffs([](const GaussianRational& c) { return c.re; }));
    if (sys.nvars == 1) {
      UPoly g;
      bool first = true;
      for (const auto& p : rp) {
        UPoly u = UPoly::from_sparse(p, 0);
        g = first ? u : upoly_gcd(g, u);
        first = false;
      }
      if (g.is_zero()) return CountResult::inf();
      if (g.degree() == 0) return CountResult::finite(0);
      return CountResult::finite(sturm_count_all(g));
    }
    if (rp.size() == 1) return CountResult::inf();  // a hypersurface has no finite real count here
    RealSolveOutcome sol = solve_real(rp, sys.nvars, opt);
    if (sol.positive_dimensional) return CountResult::inf();
    return CountResult::finite(static_cast<long>(sol.points.size()));
  }

  // complex count: degree of the squarefree shear eliminant
  if (!is_zero_dimensional(sys, opt)) return CountResult::inf();
  Eliminant e = eliminant(sys, opt.seed, opt);
  return CountResult::finite(std::max(0, e.q.degree()));
}

// number of distinct real roots of p on an interval or the full line
inline Int sturm_count(const QPoly& p, std::optional<std::pair<Rational, Rational>> interval = {}) {
  require(!p.is_zero(), ErrorCode::ZeroPolynomial, "sturm_count(0)");
  auto sup = p.support_vars();
  require(sup.size() <= 1, ErrorCode::DimensionMismatch, "sturm_count needs univariate input");
  UPoly u = sup.empty() ? UPoly::constant(p.constant_value())
                        : UPoly::from_sparse(p.project_vars({sup[0]}), 0);
  if (u.degree() <= 0) return 0;
  SturmChain chain = SturmChain::build(u);
  if (!interval) return chain.count_roots_all();
  return chain.count_roots(interval->first, interval->second);
}

// Certified isolating boxes for all real solutions, refined below the
// requested width and pairwise disjoint.
inline std::vector<IsolatingBox> isolate_real_points(const PolySystem& sys,
                                                     const Rational& precision,
                                                     const SolveOptions& opt = {}) {
  require(sys.field == Field::Real, ErrorCode::InvariantViolation,
          "isolate_real_points needs a real system");
  std::vector<QPoly> rp = sys.real_view();
  std::vector<QPoly> live;
  for (auto& p : rp) {
    if (p.is_zero()) continue;
    if (p.is_constant()) return {};
    live.push_back(p);
  }
  require(!live.empty() || sys.nvars == 0, ErrorCode::NotZeroDimensional,
          "isolate_real_points: empty system is positive-dimensional");
  if (sys.nvars == 1) {
    UPoly g;
    bool first = true;
    for (const auto& p : live) {
      UPoly u = UPoly::from_sparse(p, 0);
      g = first ? u : upoly_gcd(g, u);
      first = false;
    }
    require(!g.is_zero(), ErrorCode::NotZeroDimensional, "line of solutions");
    std::vector<IsolatingBox> out;
    if (g.degree() == 0) return out;
    UPoly sf = squarefree_part(g);
    for (auto r : isolate_real_roots(g)) {
      refine_root(sf, r, precision);
      IsolatingBox b;
      b.box = {QInterval(r.lo, r.hi)};
      b.rational = r.exact;
      if (r.exact) b.point = {r.value};
      out.push_back(std::move(b));
    }
    return out;
  }
  RealSolveOutcome sol = solve_real(live, sys.nvars, opt);
  require(!sol.positive_dimensional, ErrorCode::NotZeroDimensional, sol.reason);
  std::vector<IsolatingBox> out;
  for (auto& pt : sol.points) {
    refine_point(pt, precision);
    IsolatingBox b;
    b.box = pt.box;
    b.rational = pt.rational;
    b.point = pt.coords;
    out.push_back(std::move(b));
  }
  // disjointness: refine until separated (distinct solutions separate)
  for (int guard = 0; guard < 64; ++guard) {
    bool overlap = false;
    for (size_t i = 0; i < out.size() && !overlap; ++i)
      for (size_t j = i + 1; j < out.size() && !overlap; ++j)
        if (!boxes_disjoint(out[i].box, out[j].box)) overlap = true;
    if (!overlap) return out;
    for (size_t i = 0; i < sol.points.size(); ++i) {
      if (sol.points[i].rational) continue;
      refine_point(sol.points[i], box_max_width(sol.points[i].box) / 4);
      out[i].box = sol.points[i].box;
    }
  }
  fail(ErrorCode::RefinementLimit, "could not separate solution boxes");
}

}  // namespace crag

#endif
