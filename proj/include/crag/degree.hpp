#ifndef CRAG_DEGREE_HPP
#define CRAG_DEGREE_HPP

#include "crag/witness.hpp"
#include "crag/zerodim.hpp"

namespace crag {

struct DegreeOptions {
  int p = 1;                // witness count parameter: 2p+1 slices per vote
  int witness_budget = 16;  // seed retries
  SolveOptions solve;
};

// Affine subspace of codimension d in C^n, packed as d linear forms
// g_i(x) = a[i*(n+1)] + sum_j a[i*(n+1)+j] x_j.
struct AffineSubspace {
  int n = 0;
  int d = 0;
  std::vector<Rational> a;  // length d*(n+1)

  QPoly form(int i) const {
    require(i >= 0 && i < d, ErrorCode::IndexOutOfRange, "subspace form index");
    QPoly g = QPoly::constant(n, a[static_cast<size_t>(i * (n + 1))]);
    for (int j = 0; j < n; ++j) {
      const Rational& c = a[static_cast<size_t>(i * (n + 1) + j + 1)];
      if (c != 0) g += QPoly::variable(n, j).scaled(c);
    }
    return g;
  }

  // rank of the d x n coefficient matrix must equal d
  bool nondegenerate() const {
    QMat m(d, n);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = a[static_cast<size_t>(i * (n + 1) + j + 1)];
    return exact_rank(m) == d;
  }
};

struct TransversalityCertificate {
  bool verdict = false;
  bool smooth_ok = false;
  bool infinity_ok = false;
  Int point_count = 0;
};

struct DegreeResult {
  int dim = -1;
  Int degree = 0;
  bool certified = false;
  uint64_t seed = 0;
  WitnessMode mode = WitnessMode::SeededRandom;
};

// Concatenate the subspace's linear forms onto the system.
inline PolySystem slice(const PolySystem& sys, const AffineSubspace& sub) {
  require(sys.nvars == sub.n, ErrorCode::DimensionMismatch, "slice ambient dimension");
  require(sub.d == 0 || sub.nondegenerate(), ErrorCode::DegenerateSlice,
          "rank-deficient slicing subspace");
  PolySystem out = sys;
  for (int i = 0; i < sub.d; ++i)
    out.polys.push_back(
        sub.form(i).map_coeffs([](const Rational& c) { return GaussianRational(c); }));
  return out;
}

namespace ddetail {

inline AffineSubspace random_subspace(int n, int d, uint64_t seed, int attempt) {
  for (int tries = 0; tries < 32; ++tries) {
    SplitMix64 rng(seed ^ (0xabcdef1234567890ULL + static_cast<uint64_t>(attempt) * 0x9e37ULL +
                           static_cast<uint64_t>(tries)));
    AffineSubspace sub;
    sub.n = n;
    sub.d = d;
    sub.a.resize(static_cast<size_t>(d * (n + 1)));
    for (auto& c : sub.a) {
      long num = static_cast<long>(rng.below(1u << 10)) + 1;
      long den = 1 + static_cast<long>(rng.below(8));
      if (rng.below(2)) num = -num;
      c = make_rat(num, den);
    }
    if (d == 0 || sub.nondegenerate()) return sub;
  }
  fail(ErrorCode::DegenerateSlice, "no nondegenerate random subspace found");
}

// all n x n minors (as polynomials) of the Jacobian of the polynomials plus
// the linear forms; rank < n at a common zero iff all of them vanish there
template <class C>
std::vector<SparsePoly<C>> jacobian_minors(const std::vector<SparsePoly<C>>& polys, int n) {
  int rows = static_cast<int>(polys.size());
  require(rows >= n, ErrorCode::Internal, "jacobian_minors: fewer rows than columns");
  std::vector<std::vector<SparsePoly<C>>> jac(static_cast<size_t>(rows));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < n; ++c) jac[static_cast<size_t>(r)].push_back(polys[static_cast<size_t>(r)].derivative(c));
  // enumerate row subsets of size n
  std::vector<SparsePoly<C>> out;
  std::vector<int> pick(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) pick[static_cast<size_t>(i)] = i;
  auto det = [&](const std::vector<int>& rowsel) {
    // cofactor expansion (n <= 6 at desk scale)
    std::vector<std::vector<SparsePoly<C>>> m;
    for (int r : rowsel) m.push_back(jac[static_cast<size_t>(r)]);
    std::vector<int> cols(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) cols[static_cast<size_t>(i)] = i;
    auto rec = [&](auto&& self, std::vector<int> rs, std::vector<int> cs) -> SparsePoly<C> {
      int nn = polys.front().nvars();
      if (cs.empty()) return SparsePoly<C>::constant(nn, C(1));
      SparsePoly<C> acc(nn);
      for (size_t i = 0; i < rs.size(); ++i) {
        const SparsePoly<C>& entry = m[static_cast<size_t>(rs[i])][static_cast<size_t>(cs[0])];
        if (entry.is_zero()) continue;
        std::vector<int> rs2;
        for (size_t k = 0; k < rs.size(); ++k)
          if (k != i) rs2.push_back(rs[k]);
        std::vector<int> cs2(cs.begin() + 1, cs.end());
        SparsePoly<C> minor = self(self, rs2, cs2);
        SparsePoly<C> term = entry * minor;
        if (i % 2 == 1) term = -term;
        acc += term;
      }
      return acc;
    };
    std::vector<int> rs0(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) rs0[static_cast<size_t>(i)] = i;
    return rec(rec, rs0, cols);
  };
  while (true) {
    out.push_back(det(pick));
    int i = n - 1;
    while (i >= 0 && pick[static_cast<size_t>(i)] == rows - n + i) --i;
    if (i < 0) break;
    ++pick[static_cast<size_t>(i)];
    for (int j = i + 1; j < n; ++j) pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

// nonempty test: a finite count > 0, or a positive-dimensional intersection
inline bool slice_nonempty(const PolySystem& sliced, const SolveOptions& opt) {
  try {
    CountResult c = count_points(sliced, opt);
    return c.infinite || c.count > 0;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ShearBudgetExhausted || e.code() == ErrorCode::NotZeroDimensional)
      return true;  // could not certify finiteness: treat as (possibly) nonempty
    throw;
  }
}

}  // namespace ddetail

// Largest d such that a generic codimension-d affine subspace meets the
// variety, decided by majority over 2p+1 seeded slices per level; -1 for
// the empty variety.
inline int dimension(const PolySystem& sys, uint64_t seed, const DegreeOptions& opt = {}) {
  int n = sys.nvars;
  std::vector<GPoly> live;
  for (const auto& p : sys.polys) {
    if (p.is_zero()) continue;
    if (p.is_constant()) return -1;
    live.push_back(p);
  }
  if (live.empty()) return n;  // the whole space
  PolySystem base = sys;
  base.field = Field::Complex;
  base.polys = live;

  // zero-dimensional shortcut: the count decides empty vs dim 0
  if (is_zero_dimensional(base, opt.solve)) {
    CountResult c = count_points(base, opt.solve);
    if (!c.infinite) return c.count > 0 ? 0 : -1;
  }

  int votes = 2 * opt.p + 1;
  for (int d = n - 1; d >= 1; --d) {
    int nonempty = 0;
    for (int i = 0; i < votes; ++i) {
      AffineSubspace sub = ddetail::random_subspace(n, d, seed + static_cast<uint64_t>(i), d);
      if (ddetail::slice_nonempty(slice(base, sub), opt.solve)) ++nonempty;
    }
    if (2 * nonempty > votes) return d;
  }
  // all positive codimensions miss: the variety is zero-dimensional after
  // all (or the eliminant test was too conservative); recount directly
  CountResult c = count_points(base, opt.solve);
  if (!c.infinite) return c.count > 0 ? 0 : -1;
  fail(ErrorCode::Internal, "dimension: inconsistent slicing results");
}

// Definition 5.5-style certificate: smooth transversal affine intersection
// points and no intersection at infinity, decided exactly through the
// zero-dimensional oracle.
inline TransversalityCertificate transversality_check(const PolySystem& sys,
                                                      const AffineSubspace& sub,
                                                      uint64_t seed = 42,
                                                      const DegreeOptions& opt = {}) {
  TransversalityCertificate cert;
  PolySystem sliced = slice(sys, sub);
  CountResult count = count_points(sliced, opt.solve);
  if (count.infinite) return cert;  // not zero-dimensional: no certificate
  cert.point_count = count.count;

  int n = sys.nvars;
  // smooth_ok: the slice system plus all n x n Jacobian minors has no
  // common zero (full rank at every intersection point, including complex
  // ones)
  {
    PolySystem aug = sliced;
    if (static_cast<int>(sliced.polys.size()) < n) {
      cert.smooth_ok = false;  // fewer equations than variables: rank < n everywhere
    } else {
      auto minors = ddetail::jacobian_minors(sliced.polys, n);
      for (auto& m : minors) aug.polys.push_back(std::move(m));
      CountResult sing = count_points(aug, opt.solve);
      cert.smooth_ok = !sing.infinite && sing.count == 0;
    }
  }

  // infinity_ok: homogenized system + homogenized forms + X_0 = 0 has no
  // projective zero; probed by a generic affine normalization lambda.X = 1
  {
    std::vector<GPoly> forms;
    for (const auto& p : sys.polys) {
      if (p.is_zero()) continue;
      forms.push_back(p.homogenize(p.degree()));
    }
    for (int i = 0; i < sub.d; ++i) {
      QPoly g = sub.form(i);
      forms.push_back(
          g.map_coeffs([](const Rational& c) { return GaussianRational(c); }).homogenize(1));
    }
    forms.push_back(GPoly::variable(n + 1, 0));  // X_0 = 0
    SplitMix64 rng(seed ^ 0x51dce5a11ULL);
    GPoly norm(n + 1);
    for (int j = 0; j <= n; ++j)
      norm += GPoly::variable(n + 1, j)
                  .scaled(GaussianRational(Rational(static_cast<long>(rng.below(1u << 10)) + 1)));
    norm -= GPoly::constant(n + 1, GaussianRational(Rational(1)));
    forms.push_back(std::move(norm));
    CountResult at_inf = count_points(PolySystem::complex_gaussian(n + 1, forms), opt.solve);
    cert.infinity_ok = !at_inf.infinite && at_inf.count == 0;
  }

  cert.verdict = cert.smooth_ok && cert.infinity_ok;
  return cert;
}

// Degree by the slicing algorithm: dimension, then 2p+1 generic slices of
// matching codimension, counting only certified-transversal ones and taking
// the majority.
inline DegreeResult geometric_degree(const PolySystem& sys, uint64_t seed,
                                     const DegreeOptions& opt = {}) {
  DegreeResult res;
  res.seed = seed;
  res.dim = dimension(sys, seed, opt);
  if (res.dim < 0) {
    res.degree = 0;
    res.certified = true;  // degree of the empty set is 0
    return res;
  }
  if (res.dim == 0) {
    CountResult c = count_points(sys, opt.solve);
    require(!c.infinite, ErrorCode::Internal, "dim 0 but infinite count");
    res.degree = c.count;
    res.certified = true;
    return res;
  }
  int votes = 2 * opt.p + 1;
  for (int attempt = 0; attempt < opt.witness_budget; ++attempt) {
    uint64_t s = seed + static_cast<uint64_t>(attempt);
    std::vector<Int> counts;
    int certified = 0;
    for (int i = 0; i < votes; ++i) {
      AffineSubspace sub =
          ddetail::random_subspace(sys.nvars, res.dim, s + 1000003ULL * static_cast<uint64_t>(i), attempt);
      try {
        TransversalityCertificate cert = transversality_check(sys, sub, s, opt);
        if (cert.verdict) {
          ++certified;
          counts.push_back(cert.point_count);
        }
      } catch (const Error&) {
        // an uncertifiable slice is simply not counted
      }
    }
    if (2 * certified > votes && !counts.empty()) {
      bool agree = true;
      for (const auto& c : counts) agree = agree && (c == counts.front());
      if (agree) {
        res.degree = counts.front();
        res.certified = true;
        return res;
      }
    }
  }
  fail(ErrorCode::WitnessBudgetExhausted, "no certified majority of transversal slices");
}

}  // namespace crag

#endif
