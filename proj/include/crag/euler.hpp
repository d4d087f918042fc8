#ifndef CRAG_EULER_HPP
#define CRAG_EULER_HPP

#include <optional>

#include "crag/witness.hpp"
#include "crag/zerodim.hpp"

namespace crag {

struct EulerOptions {
  int p_direct = 1;    // 2p+1 projection points for direct chi calls
  int p_pipeline = 0;  // Milnor-fibre pipeline: single certified projection
  int morse_budget = 12;
  int block_budget = 4;
  int hessian_rounds = 24;
  int sample_budget = 700;
  SolveOptions solve;
};

// One basic conjunction {g = 0, f_i > 0, h_j >= 0}. g may be the zero
// polynomial (no equation).
struct BasicBlock {
  int n = 0;
  QPoly g;
  std::vector<QPoly> strict;
  std::vector<QPoly> nonstrict;

  static BasicBlock make(int n, QPoly gg, std::vector<QPoly> gt = {},
                         std::vector<QPoly> geq = {}) {
    BasicBlock b;
    b.n = n;
    b.g = std::move(gg);
    b.strict = std::move(gt);
    b.nonstrict = std::move(geq);
    require(b.g.is_zero() || b.g.nvars() == n, ErrorCode::DimensionMismatch, "block g");
    for (const auto& f : b.strict)
      require(f.nvars() == n, ErrorCode::DimensionMismatch, "block strict");
    for (const auto& h : b.nonstrict)
      require(h.nvars() == n, ErrorCode::DimensionMismatch, "block nonstrict");
    if (b.g.is_zero()) b.g = QPoly::zero(n);
    return b;
  }
};

struct SemialgebraicSet {
  int n = 0;
  std::vector<BasicBlock> blocks;

  static SemialgebraicSet make(int n, std::vector<BasicBlock> bs) {
    SemialgebraicSet s;
    s.n = n;
    s.blocks = std::move(bs);
    require(!s.blocks.empty(), ErrorCode::EmptyInput, "set needs at least one block");
    for (const auto& b : s.blocks)
      require(b.n == n, ErrorCode::DimensionMismatch, "set ambient dimension");
    return s;
  }
};

// The Lemma 7.1 construction: g_i := X_{n+i}^2 f_i - 1, everything
// homogenized with exponent delta+3, H := sum of squares. The fibre
// Z(H - 1) is a smooth affine hypersurface (1 is a regular value of the
// homogeneous H by the Euler identity).
struct MilnorFibre {
  QPoly H;
  QPoly fibre_poly;  // H - 1
  int n = 0, r = 0;
  int delta = 0;
  std::vector<QPoly> Gs;  // the nonzero homogeneous summands
};

struct MorseCriticalPoint {
  bool rational = false;
  std::vector<Rational> point;  // when rational
  Box box;
  int index = -1;
  int chart = -1;
};

struct MorseReport {
  std::vector<MorseCriticalPoint> points;
  std::vector<Int> histogram;  // N_k, k = 0..dim
  Int chi = 0;
  std::vector<Rational> projection_point;
};

// {f = 0} plus all 2x2 minors of the matrix with rows grad f and (x - a):
// the gradient-parallelism criticality condition for the distance function.
inline std::vector<QPoly> critical_system(const QPoly& f, const std::vector<Rational>& a) {
  int n = f.nvars();
  require(static_cast<int>(a.size()) == n, ErrorCode::DimensionMismatch, "critical_system");
  std::vector<QPoly> sys = {f};
  std::vector<QPoly> grad;
  for (int i = 0; i < n; ++i) grad.push_back(f.derivative(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      QPoly xi = QPoly::variable(n, i) - QPoly::constant(n, a[static_cast<size_t>(i)]);
      QPoly xj = QPoly::variable(n, j) - QPoly::constant(n, a[static_cast<size_t>(j)]);
      QPoly m = grad[static_cast<size_t>(i)] * xj - grad[static_cast<size_t>(j)] * xi;
      if (!m.is_zero()) sys.push_back(std::move(m));
    }
  return sys;
}

namespace edetail {

// Chart-formula Hessian of the distance function, cleared of denominators:
//
//   (1/2) (d_k f)^3 H_ij = (d_k f)^3 delta_ij + d_i f d_j f d_k f
//     - (x_k - a_k) [ d_ij f (d_k f)^2 - d_ik f d_j f d_k f
//                     - d_jk f d_i f d_k f + d_i f d_j f d_kk f ]
//
// This is the full implicit-function derivation (the second derivative of
// the graph function y(t) takes total derivatives along the chart, so the
// mixed d_ik f d_j f and d_i f d_j f d_kk f terms appear). The scaled
// matrix has the inertia of H up to the sign of d_k f.
inline QPoly hessian_scaled_entry(const QPoly& f, const std::vector<Rational>& a, int chart,
                                  int vi, int vj) {
  int n = f.nvars();
  QPoly dk = f.derivative(chart);
  QPoly di = f.derivative(vi);
  QPoly dj = f.derivative(vj);
  QPoly dij = di.derivative(vj);
  QPoly dik = di.derivative(chart);
  QPoly djk = dj.derivative(chart);
  QPoly dkk = dk.derivative(chart);
  QPoly xk = QPoly::variable(n, chart) - QPoly::constant(n, a[static_cast<size_t>(chart)]);
  QPoly bracket = dij * dk * dk - dik * dj * dk - djk * di * dk + di * dj * dkk;
  QPoly entry = di * dj * dk - xk * bracket;
  if (vi == vj) entry += dk * dk * dk;
  return entry;
}

}  // namespace edetail

// The Hessian of the distance function at a rational critical point
// (exact). chart must satisfy d_chart f(x) != 0.
inline QMat hessian_matrix(const QPoly& f, const std::vector<Rational>& a,
                           const std::vector<Rational>& x, int chart) {
  int n = f.nvars();
  Rational dk = f.derivative(chart).evaluate(x);
  require(dk != 0, ErrorCode::ChartInvalid, "chart derivative vanishes");
  QMat h(n - 1, n - 1);
  Rational scale = 2 / (dk * dk * dk);
  int ri = 0;
  for (int i = 0; i < n; ++i) {
    if (i == chart) continue;
    int rj = 0;
    for (int j = 0; j < n; ++j) {
      if (j == chart) continue;
      h(ri, rj) = scale * edetail::hessian_scaled_entry(f, a, chart, i, j).evaluate(x);
      ++rj;
    }
    ++ri;
  }
  return h;
}

// Interval version over an isolating box; requires the chart derivative to
// be sign-certified on the box.
inline IMat hessian_matrix(const QPoly& f, const std::vector<Rational>& a, const Box& box,
                           int chart) {
  int n = f.nvars();
  QInterval dk = interval_eval(f.derivative(chart), box);
  require(dk.sign_certified() != 0, ErrorCode::ChartInvalid, "chart sign not certifiable");
  IMat h(n - 1, n - 1);
  QInterval scale = QInterval(Rational(2)) / (dk * dk * dk);
  int ri = 0;
  for (int i = 0; i < n; ++i) {
    if (i == chart) continue;
    int rj = 0;
    for (int j = 0; j < n; ++j) {
      if (j == chart) continue;
      h(ri, rj) = interval_eval(edetail::hessian_scaled_entry(f, a, chart, i, j), box) * scale;
      ++rj;
    }
    ++ri;
  }
  return h;
}

namespace edetail {

// Matrices of scaled Hessian entry polynomials, built once per chart and
// shared across every critical point of a Morse run.
struct HessianCache {
  const QPoly* f;
  const std::vector<Rational>* a;
  std::map<int, std::vector<std::vector<QPoly>>> by_chart;

  const std::vector<std::vector<QPoly>>& chart(int k) {
    auto it = by_chart.find(k);
    if (it != by_chart.end()) return it->second;
    int n = f->nvars();
    std::vector<std::vector<QPoly>> m;
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      std::vector<QPoly> row;
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        row.push_back(hessian_scaled_entry(*f, *a, k, i, j));
      }
      m.push_back(std::move(row));
    }
    return by_chart.emplace(k, std::move(m)).first->second;
  }
};

// Morse data for one critical point: certified chart and index, with the
// chart-independence cross-check. Throws when certification fails within
// the round budget.
inline std::pair<int, int> certify_index(const QPoly& f, const std::vector<Rational>& a,
                                         RealPoint& pt, const EulerOptions& opt,
                                         HessianCache& cache) {
  int n = f.nvars();
  if (pt.rational) {
    int index = -1, chart = -1;
    for (int k = 0; k < n; ++k) {
      Rational dk = f.derivative(k).evaluate(pt.coords);
      if (dk == 0) continue;
      // scaled Hessian entries: inertia matches H after the sign of d_k f
      const auto& entries = cache.chart(k);
      QMat m(n - 1, n - 1);
      for (int i = 0; i < n - 1; ++i)
        for (int j = 0; j < n - 1; ++j) {
          Rational e = entries[static_cast<size_t>(i)][static_cast<size_t>(j)].evaluate(pt.coords);
          m(i, j) = sign(dk) > 0 ? e : -e;
        }
      require(matrix_kernel_dim(m) == 0, ErrorCode::NotZeroDimensional,
              "degenerate Hessian: not a Morse configuration");
      int idx = negative_eigenvalues(m);
      if (index >= 0)
        require(idx == index, ErrorCode::InvariantViolation, "chart-dependent Morse index");
      index = idx;
      if (chart < 0) chart = k;
    }
    require(index >= 0, ErrorCode::ChartInvalid, "no chart: gradient vanishes at critical point");
    return {index, chart};
  }
  for (int round = 0; round < opt.hessian_rounds; ++round) {
    int index = -1, chart = -1;
    for (int k = 0; k < n; ++k) {
      QInterval dk = interval_eval(f.derivative(k), pt.box);
      int sk = dk.sign_certified();
      if (sk == 0) continue;
      const auto& entries = cache.chart(k);
      IMat m(n - 1, n - 1);
      for (int i = 0; i < n - 1; ++i)
        for (int j = 0; j < n - 1; ++j) {
          QInterval e =
              interval_eval(entries[static_cast<size_t>(i)][static_cast<size_t>(j)], pt.box);
          m(i, j) = sk > 0 ? e : -e;
        }
      auto inertia = interval_inertia(m);
      if (!inertia) continue;
      // all pivots certified: full rank, nondegenerate; index = negatives
      if (index >= 0)
        require(inertia->first == index, ErrorCode::InvariantViolation,
                "chart-dependent Morse index");
      index = inertia->first;
      if (chart < 0) chart = k;
    }
    if (index >= 0) return {index, chart};
    refine_point(pt, box_max_width(pt.box) / 4);
  }
  fail(ErrorCode::RefinementLimit, "Morse index not certifiable at this depth");
}

// Projection-point schedule: sparse, small-magnitude integer points first
// (they keep the critical-system coefficients small), escalating in density
// and magnitude with the attempt count. Magnitudes stay below 2^10.
inline std::vector<Rational> projection_point(int n, uint64_t seed, int attempt) {
  SplitMix64 rng(seed ^ (0xa11ce5 + 7919ULL * static_cast<uint64_t>(attempt)));
  std::vector<Rational> a(static_cast<size_t>(n), Rational(0));
  int nnz = std::min(n, 1 + attempt / 2);
  long magcap = std::min(1024L, 6L << std::min(8, attempt));
  std::vector<int> idx(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) idx[static_cast<size_t>(i)] = i;
  for (int i = 0; i < nnz; ++i) {
    size_t j = static_cast<size_t>(i) + rng.below(static_cast<uint64_t>(n - i));
    std::swap(idx[static_cast<size_t>(i)], idx[j]);
    long mag = static_cast<long>(rng.below(static_cast<uint64_t>(magcap))) + 2;
    a[static_cast<size_t>(idx[static_cast<size_t>(i)])] =
        Rational(rng.below(2) ? mag : -mag);
  }
  return a;
}

}  // namespace edetail

// One certified Morse run for a fixed projection point. Throws when the
// configuration cannot be certified (caller retries with the next point).
inline MorseReport morse_run(const QPoly& f, const std::vector<Rational>& a,
                             const EulerOptions& opt) {
  int n = f.nvars();
  MorseReport rep;
  rep.projection_point = a;
  rep.histogram.assign(static_cast<size_t>(n), 0);

  std::vector<QPoly> crit = critical_system(f, a);
  RealSolveOutcome sol = solve_real(crit, n, opt.solve);
  require(!sol.positive_dimensional, ErrorCode::NotZeroDimensional,
          "critical set not zero-dimensional: " + sol.reason);
  edetail::HessianCache cache{&f, &a, {}};
  for (auto& pt : sol.points) {
    auto [index, chart] = edetail::certify_index(f, a, pt, opt, cache);
    MorseCriticalPoint mp;
    mp.rational = pt.rational;
    mp.point = pt.coords;
    mp.box = pt.box;
    mp.index = index;
    mp.chart = chart;
    rep.points.push_back(std::move(mp));
    rep.histogram[static_cast<size_t>(index)] += 1;
  }
  Int chi = 0, total = 0;
  for (size_t k = 0; k < rep.histogram.size(); ++k) {
    chi += (k % 2 == 0 ? rep.histogram[k] : -rep.histogram[k]);
    total += rep.histogram[k];
  }
  require(total == Int(static_cast<long>(rep.points.size())), ErrorCode::InvariantViolation,
          "histogram total mismatch");
  rep.chi = chi;
  return rep;
}

// Euler characteristic of the smooth hypersurface Z(f) by certified Morse
// counting of the distance function: the majority over 2p+1 certified
// projection points of sum_k (-1)^k N_k.
inline MorseReport chi_smooth_hypersurface(const QPoly& f, uint64_t seed,
                                           const EulerOptions& opt = {},
                                           std::optional<int> p_override = {},
                                           const std::vector<std::vector<Rational>>& preferred_points = {}) {
  int n = f.nvars();
  require(!f.is_zero() && !f.is_constant(), ErrorCode::NotRegular, "not a hypersurface");

  // regularity: no real common zero of f and its gradient
  {
    std::vector<QPoly> reg = {f};
    for (int i = 0; i < n; ++i) reg.push_back(f.derivative(i));
    if (n == 1) {
      UPoly uf = UPoly::from_sparse(f, 0);
      UPoly common = upoly_gcd(uf, uf.derivative());
      require(common.degree() <= 0 || sturm_count_all(common) == 0, ErrorCode::NotRegular,
              "singular real zero");
    } else {
      RealSolveOutcome sing = solve_real(reg, n, opt.solve);
      require(!sing.positive_dimensional && sing.points.empty(), ErrorCode::NotRegular,
              "gradient vanishes on the zero set (or regularity not certifiable)");
    }
  }

  int p = p_override.value_or(opt.p_direct);
  int wanted = 2 * p + 1;
  std::vector<MorseReport> reports;
  int attempt = 0;
  size_t preferred_used = 0;
  while (static_cast<int>(reports.size()) < wanted &&
         attempt < opt.morse_budget + wanted) {
    std::vector<Rational> a;
    if (preferred_used < preferred_points.size()) {
      a = preferred_points[preferred_used++];
    } else {
      a = edetail::projection_point(n, seed, attempt);
    }
    ++attempt;
    try {
      reports.push_back(morse_run(f, a, opt));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ScaleLimit) throw;
      // Morse condition failed for this projection point: retry
    }
  }
  require(static_cast<int>(reports.size()) == wanted, ErrorCode::MorseBudgetExhausted,
          "could not certify enough Morse projections");
  std::vector<Int> chis;
  for (const auto& r : reports) chis.push_back(r.chi);
  Int maj = majority(chis);
  for (const auto& r : reports)
    if (r.chi == maj) return r;
  fail(ErrorCode::Internal, "majority report vanished");
}

// ---------------------------------------------------------------------------
// Milnor fibre pipeline
// ---------------------------------------------------------------------------

inline MilnorFibre milnor_fibre(const BasicBlock& block) {
  require(block.nonstrict.empty(), ErrorCode::InvariantViolation,
          "milnor_fibre needs a strict-only block");
  int n = block.n;
  int r = static_cast<int>(block.strict.size());
  int delta = 2;
  if (!block.g.is_zero()) delta = std::max(delta, block.g.degree());
  for (const auto& f : block.strict) delta = std::max(delta, f.degree());

  MilnorFibre mf;
  mf.n = n;
  mf.r = r;
  mf.delta = delta;
  int m = n + r;
  QPoly H(m + 1);
  if (!block.g.is_zero()) {
    QPoly G0 = block.g.extend(r).homogenize(delta + 3);
    H += G0 * G0;
    mf.Gs.push_back(std::move(G0));
  }
  for (int i = 0; i < r; ++i) {
    QPoly slack = QPoly::variable(m, n + i);
    QPoly gi = slack * slack * block.strict[static_cast<size_t>(i)].extend(r) -
               QPoly::constant(m, Rational(1));
    QPoly Gi = gi.homogenize(delta + 3);
    H += Gi * Gi;
    mf.Gs.push_back(std::move(Gi));
  }
  require(!mf.Gs.empty(), ErrorCode::InvariantViolation,
          "block with no constraints has no Milnor fibre");
  mf.H = H;
  mf.fibre_poly = H - QPoly::constant(m + 1, Rational(1));
  return mf;
}

namespace edetail {

// chi of the Milnor fibre. When H is a single square G^2, the fibre splits
// into the clopen smooth pieces {G = 1} and {G = -1} (they differ by the
// constant 2), and chi adds up.
inline Int chi_of_fibre(const MilnorFibre& mf, uint64_t seed, const EulerOptions& opt) {
  if (mf.Gs.size() == 1) {
    const QPoly& G = mf.Gs.front();
    int nv = G.nvars();
    QPoly one = QPoly::constant(nv, Rational(1));
    MorseReport plus = chi_smooth_hypersurface(G - one, seed, opt, opt.p_pipeline);
    MorseReport minus = chi_smooth_hypersurface(G + one, seed ^ 0x5eedULL, opt, opt.p_pipeline);
    return plus.chi + minus.chi;
  }
  MorseReport rep = chi_smooth_hypersurface(mf.fibre_poly, seed, opt, opt.p_pipeline);
  return rep.chi;
}

}  // namespace edetail

enum class Emptiness { Empty, NonEmpty, Undecided };

namespace edetail {

// Exact sign of a univariate polynomial at an isolated real root of g.
inline int sign_at_root(const UPoly& f, const UPoly& g_sf, RootInterval& root) {
  if (root.exact) return sign(f.eval(root.value));
  // is f exactly zero at the root? iff gcd(f, g) has the root
  UPoly common = upoly_gcd(f, g_sf);
  if (common.degree() > 0) {
    SturmChain chain = SturmChain::build(common);
    if (chain.count_roots(root.lo, root.hi) == 1) return 0;
  }
  // not zero there: refine until the interval sign certifies
  while (true) {
    QInterval iv(root.lo, root.hi);
    // Horner with intervals
    QInterval acc{Rational(0)};
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it)
      acc = acc * iv + QInterval(*it);
    if (acc.sign_certified() != 0) return acc.sign_certified();
    refine_root(g_sf, root, root.width() / 4);
    if (root.exact) return sign(f.eval(root.value));
  }
}

// Exact emptiness decision for one-variable blocks (1-D cell analysis).
inline Emptiness empty_univariate(const BasicBlock& block) {
  std::vector<UPoly> fs;
  for (const auto& f : block.strict) fs.push_back(UPoly::from_sparse(f, 0));
  if (!block.g.is_zero()) {
    UPoly g = UPoly::from_sparse(block.g, 0);
    if (g.degree() == 0) return Emptiness::Empty;  // nonzero constant equation
    UPoly g_sf = squarefree_part(g);
    auto roots = isolate_real_roots(g);
    for (auto& root : roots) {
      bool ok = true;
      for (auto& f : fs)
        if (sign_at_root(f, g_sf, root) <= 0) {
          ok = false;
          break;
        }
      if (ok) return Emptiness::NonEmpty;
    }
    return Emptiness::Empty;
  }
  // open block: sample the cell decomposition induced by the f_i
  for (const auto& f : fs)
    if (f.is_zero()) return Emptiness::Empty;  // 0 > 0 never holds
  UPoly prod = UPoly::constant(Rational(1));
  for (const auto& f : fs) prod = prod * f;
  if (prod.degree() <= 0) {
    // all constants: empty iff some constant <= 0
    for (const auto& f : fs)
      if (sign(f.coeff(0)) <= 0) return Emptiness::Empty;
    return Emptiness::NonEmpty;
  }
  UPoly sf = squarefree_part(prod);
  auto roots = isolate_real_roots(prod);
  // disjoint by construction (distinct roots of the squarefree part)
  std::vector<Rational> samples;
  Rational lo_guard = roots.empty() ? Rational(0) : roots.front().lo - 1;
  samples.push_back(lo_guard);
  for (size_t i = 0; i + 1 < roots.size(); ++i) {
    refine_root(sf, roots[i], Rational(1, 16));
    refine_root(sf, roots[i + 1], Rational(1, 16));
  }
  for (size_t i = 0; i + 1 < roots.size(); ++i) {
    Rational a = roots[i].exact ? roots[i].value : roots[i].hi;
    Rational b = roots[i + 1].exact ? roots[i + 1].value : roots[i + 1].lo;
    if (a < b)
      samples.push_back(simplest_rational_in(a + (b - a) / 16, b - (b - a) / 16));
    else
      samples.push_back((a + b) / 2);
  }
  if (!roots.empty()) samples.push_back(roots.back().hi + 1);
  for (const Rational& s : samples) {
    bool ok = true;
    for (const auto& f : fs) ok = ok && sign(f.eval(s)) > 0;
    if (ok) return Emptiness::NonEmpty;
  }
  return Emptiness::Empty;
}

// Deterministic rational sample schedule in n variables: the small integer
// lattice first, then seeded rationals.
inline std::vector<Rational> sample_point(int n, uint64_t seed, int attempt) {
  // lattice points with coordinates in {0, 1, -1, 2, -2} enumerated first
  long lattice = 1;
  for (int i = 0; i < n && lattice <= (1 << 20); ++i) lattice *= 5;
  if (attempt < lattice) {
    std::vector<Rational> x(static_cast<size_t>(n));
    long code = attempt;
    static const long vals[5] = {0, 1, -1, 2, -2};
    for (int i = 0; i < n; ++i) {
      x[static_cast<size_t>(i)] = Rational(vals[code % 5]);
      code /= 5;
    }
    return x;
  }
  SplitMix64 rng(seed ^ (0xbeefULL + static_cast<uint64_t>(attempt)));
  std::vector<Rational> x(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    x[static_cast<size_t>(i)] =
        make_rat(rng.symmetric_nonzero(16), 1 + static_cast<long>(rng.below(8)));
  return x;
}

inline Emptiness emptiness_precheck(const BasicBlock& block, uint64_t seed,
                                    const EulerOptions& opt) {
  if (block.n == 1) return empty_univariate(block);
  // exact nonemptiness certificate by rational sampling
  for (int attempt = 0; attempt < opt.sample_budget; ++attempt) {
    std::vector<Rational> x = sample_point(block.n, seed, attempt);
    if (!block.g.is_zero() && block.g.evaluate(x) != 0) continue;
    bool ok = true;
    for (const auto& f : block.strict) ok = ok && sign(f.evaluate(x)) > 0;
    if (ok) return Emptiness::NonEmpty;
  }
  // the Theorem 3.4 gadget equation system: x in S iff some (x, y) solves it
  {
    int r = static_cast<int>(block.strict.size());
    int m = block.n + r;
    std::vector<QPoly> eqs;
    if (!block.g.is_zero()) eqs.push_back(block.g.extend(r));
    for (int i = 0; i < r; ++i) {
      QPoly y = QPoly::variable(m, block.n + i);
      eqs.push_back(y * y * block.strict[static_cast<size_t>(i)].extend(r) -
                    QPoly::constant(m, Rational(1)));
    }
    if (!eqs.empty()) {
      try {
        RealSolveOutcome sol = solve_real(eqs, m, opt.solve);
        if (sol.positive_dimensional) {
          // only the cylinder case carries a real-point certificate
          if (sol.reason == "branch with a free variable has real points")
            return Emptiness::NonEmpty;
          return Emptiness::Undecided;
        }
        return sol.points.empty() ? Emptiness::Empty : Emptiness::NonEmpty;
      } catch (const Error&) {
        return Emptiness::Undecided;
      }
    }
    return Emptiness::NonEmpty;  // no constraints at all: the whole space
  }
}

}  // namespace edetail

// The nonstrict-elimination recipe: chi*(S) = (chi*(doubled) + chi*(boundary)) / 2,
// where `doubled` replaces h >= 0 by the equation h - y^2 = 0 in one fresh
// variable (folded into the equation by sum of squares) and `boundary`
// replaces it by h = 0.
struct ElimNonstrictRecipe {
  BasicBlock doubled;
  BasicBlock boundary;
};

inline ElimNonstrictRecipe elim_nonstrict(const BasicBlock& block) {
  require(!block.nonstrict.empty(), ErrorCode::InvariantViolation,
          "elim_nonstrict needs a nonstrict inequality");
  int n = block.n;
  QPoly h = block.nonstrict.front();
  std::vector<QPoly> rest(block.nonstrict.begin() + 1, block.nonstrict.end());

  ElimNonstrictRecipe out;
  {
    int m = n + 1;
    QPoly y = QPoly::variable(m, n);
    QPoly hy = h.extend(1) - y * y;
    QPoly gext = block.g.extend(1);
    QPoly folded = gext * gext + hy * hy;
    std::vector<QPoly> strict2, nonstrict2;
    for (const auto& f : block.strict) strict2.push_back(f.extend(1));
    for (const auto& q : rest) nonstrict2.push_back(q.extend(1));
    out.doubled = BasicBlock::make(m, folded, strict2, nonstrict2);
  }
  {
    QPoly folded = block.g * block.g + h * h;
    out.boundary = BasicBlock::make(n, folded, block.strict, rest);
  }
  return out;
}

struct ChiStarResult {
  Int chi = 0;
  Emptiness emptiness = Emptiness::Undecided;
};

// chi* of one basic block through the Milnor fibre reduction.
inline ChiStarResult chi_star_basic(const BasicBlock& block, uint64_t seed,
                                    const EulerOptions& opt = {}) {
  if (!block.nonstrict.empty()) {
    ElimNonstrictRecipe recipe = elim_nonstrict(block);
    ChiStarResult a = chi_star_basic(recipe.doubled, seed, opt);
    ChiStarResult b = chi_star_basic(recipe.boundary, seed, opt);
    Int sum = a.chi + b.chi;
    require(sum % 2 == 0, ErrorCode::NonIntegralChi, "nonstrict recursion parity");
    ChiStarResult out;
    out.chi = sum / 2;
    if (a.emptiness == Emptiness::Empty && b.emptiness == Emptiness::Empty)
      out.emptiness = Emptiness::Empty;
    else if (a.emptiness == Emptiness::NonEmpty || b.emptiness == Emptiness::NonEmpty)
      out.emptiness = Emptiness::NonEmpty;
    else
      out.emptiness = Emptiness::Undecided;
    return out;
  }

  Emptiness empt = edetail::emptiness_precheck(block, seed, opt);
  require(empt != Emptiness::Undecided, ErrorCode::Undecided,
          "emptiness of the block could not be decided");
  if (empt == Emptiness::Empty) return {Int(0), Emptiness::Empty};

  MilnorFibre mf = milnor_fibre(block);
  Int chi_phi = edetail::chi_of_fibre(mf, seed, opt);
  Int numer = 2 - chi_phi;
  Int divisor = pow_int(Int(2), static_cast<unsigned long>(mf.r + 1));
  require(numer % divisor == 0, ErrorCode::NonIntegralChi,
          "2 - chi(Phi) not divisible by 2^(r+1): uncertified Morse run");
  Int val = numer / divisor;
  if ((mf.n + mf.r) % 2 == 1) val = -val;
  return {val, Emptiness::NonEmpty};
}

// chi* of a union by inclusion-exclusion over all nonempty subsets of
// blocks; intersections combine equations by sums of squares and
// concatenate inequality lists.
inline ChiStarResult chi_star(const SemialgebraicSet& set, uint64_t seed,
                              const EulerOptions& opt = {}) {
  int t = static_cast<int>(set.blocks.size());
  require(t <= opt.block_budget, ErrorCode::BlockBudget, "too many blocks in the union");

  std::vector<ChiStarResult> singles;
  for (int i = 0; i < t; ++i)
    singles.push_back(chi_star_basic(set.blocks[static_cast<size_t>(i)], seed, opt));

  ChiStarResult out;
  out.emptiness = Emptiness::Empty;
  for (const auto& s : singles) {
    if (s.emptiness == Emptiness::NonEmpty) out.emptiness = Emptiness::NonEmpty;
    else if (s.emptiness == Emptiness::Undecided && out.emptiness == Emptiness::Empty)
      out.emptiness = Emptiness::Undecided;
  }

  Int chi = 0;
  // subsets in increasing size, lexicographic inside each size
  for (int size = 1; size <= t; ++size) {
    std::vector<int> pick(static_cast<size_t>(size));
    for (int i = 0; i < size; ++i) pick[static_cast<size_t>(i)] = i;
    while (true) {
      Int term;
      if (size == 1) {
        term = singles[static_cast<size_t>(pick[0])].chi;
      } else {
        bool any_empty = false;
        for (int i : pick)
          if (singles[static_cast<size_t>(i)].emptiness == Emptiness::Empty) any_empty = true;
        if (any_empty) {
          term = 0;
        } else {
          // S_I: equations folded by sum of squares, inequalities concatenated
          QPoly gI(set.n);
          std::vector<QPoly> strictI, nonstrictI;
          for (int i : pick) {
            const BasicBlock& b = set.blocks[static_cast<size_t>(i)];
            if (!b.g.is_zero()) gI += b.g * b.g;
            for (const auto& f : b.strict)
              if (std::find(strictI.begin(), strictI.end(), f) == strictI.end())
                strictI.push_back(f);
            for (const auto& h : b.nonstrict)
              if (std::find(nonstrictI.begin(), nonstrictI.end(), h) == nonstrictI.end())
                nonstrictI.push_back(h);
          }
          BasicBlock inter = BasicBlock::make(set.n, gI, strictI, nonstrictI);
          term = chi_star_basic(inter, seed, opt).chi;
        }
      }
      chi += (size % 2 == 1) ? term : -term;

      int i = size - 1;
      while (i >= 0 && pick[static_cast<size_t>(i)] == t - size + i) --i;
      if (i < 0) break;
      ++pick[static_cast<size_t>(i)];
      for (int j = i + 1; j < size; ++j)
        pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
    }
  }
  out.chi = chi;
  return out;
}

struct EulerClosedResult {
  Int chi = 0;
  bool heuristic_radius = true;
  Rational radius;
};

// chi of a closed set via ball truncation: truncate at growing radii until
// two consecutive values agree (the compact truncation has chi* = chi). A
// caller-supplied certified radius skips the stabilization heuristic.
inline EulerClosedResult euler_closed(const SemialgebraicSet& set,
                                      const std::vector<Rational>& radius_schedule,
                                      uint64_t seed, const EulerOptions& opt = {},
                                      std::optional<Rational> certified_radius = {}) {
  for (const auto& b : set.blocks)
    require(b.strict.empty(), ErrorCode::InvariantViolation,
            "euler_closed needs a closed set (equations and nonstrict only)");

  auto truncate = [&](const Rational& rho) {
    SemialgebraicSet trunc = set;
    QPoly ball = QPoly::constant(set.n, rho * rho);
    for (int i = 0; i < set.n; ++i)
      ball -= QPoly::variable(set.n, i) * QPoly::variable(set.n, i);
    for (auto& b : trunc.blocks) b.nonstrict.push_back(ball);
    return trunc;
  };

  if (certified_radius) {
    EulerClosedResult out;
    out.chi = chi_star(truncate(*certified_radius), seed, opt).chi;
    out.heuristic_radius = false;
    out.radius = *certified_radius;
    return out;
  }
  std::optional<Int> prev;
  Rational prev_rho;
  for (const Rational& rho : radius_schedule) {
    Int value = chi_star(truncate(rho), seed, opt).chi;
    if (prev && *prev == value) {
      EulerClosedResult out;
      out.chi = value;
      out.heuristic_radius = true;
      out.radius = rho;
      return out;
    }
    prev = value;
    prev_rho = rho;
  }
  fail(ErrorCode::NoStabilization, "truncation values did not stabilize over the schedule");
}

inline std::vector<Rational> default_radius_schedule() {
  return {Rational(2), Rational(4), Rational(16), Rational(256), Rational(65536)};
}

}  // namespace crag

#endif
