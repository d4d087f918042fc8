#ifndef CRAG_GADGETS_HPP
#define CRAG_GADGETS_HPP

#include <map>
#include <string>

#include "crag/euler.hpp"

namespace crag {

enum class SignRel { Lt, Eq, Gt };
enum class EqRel { EqZero, NeqZero };

// One conjunction: g (= 0 or != 0) together with sign atoms f <> 0.
struct SignClause {
  int n = 0;
  QPoly g;
  EqRel grel = EqRel::EqZero;
  std::vector<std::pair<QPoly, SignRel>> atoms;
};

// The count-preserving single-equation reduction: real solutions of F = 0
// project onto the clause's solution set with fibres of cardinality exactly
// 2^r (r slack variables y, one per sign atom, each pinned to two values;
// z slacks are pinned to one).
struct GadgetOutput {
  QPoly F;
  Int multiplier = 1;
  int r = 0;
  int total_vars = 0;
  // the substitution-table equations behind F (F is their sum of squares
  // for a conjunction); same real zero set, convenient for the oracle
  std::vector<QPoly> equations;
};

// Substitution table of the counting reduction:
//   g  = 0   stays an equation
//   g != 0   becomes g z - 1 = 0
//   f  > 0   becomes f y^2 - 1 = 0
//   f  < 0   becomes f y^2 + 1 = 0
//   f  = 0   becomes f = 0 and y^2 - 1 = 0
inline GadgetOutput compile_sign_condition(const SignClause& clause) {
  int n = clause.n;
  int r = static_cast<int>(clause.atoms.size());
  bool need_z = clause.grel == EqRel::NeqZero && !clause.g.is_zero();
  int total = n + r + (need_z ? 1 : 0);
  GadgetOutput out;
  out.r = r;
  out.multiplier = pow_int(Int(2), static_cast<unsigned long>(r));
  out.total_vars = total;

  auto lift = [&](const QPoly& p) { return p.extend(total - n); };
  if (!clause.g.is_zero()) {
    if (clause.grel == EqRel::EqZero) {
      out.equations.push_back(lift(clause.g));
    } else {
      QPoly z = QPoly::variable(total, total - 1);
      out.equations.push_back(lift(clause.g) * z - QPoly::constant(total, Rational(1)));
    }
  } else if (clause.grel == EqRel::NeqZero) {
    // 0 != 0 never holds
    out.equations.push_back(QPoly::constant(total, Rational(1)));
  }
  for (int i = 0; i < r; ++i) {
    const auto& [f, rel] = clause.atoms[static_cast<size_t>(i)];
    QPoly y = QPoly::variable(total, n + i);
    QPoly fl = lift(f);
    QPoly one = QPoly::constant(total, Rational(1));
    switch (rel) {
      case SignRel::Gt:
        out.equations.push_back(fl * y * y - one);
        break;
      case SignRel::Lt:
        out.equations.push_back(fl * y * y + one);
        break;
      case SignRel::Eq:
        out.equations.push_back(fl);
        out.equations.push_back(y * y - one);
        break;
    }
  }
  if (out.equations.empty()) out.equations.push_back(QPoly::zero(total));
  out.F = combine(out.equations, CombineMode::SumOfSquares);
  return out;
}

// Count-preserving reduction of a union of basic blocks to one equation.
// The union is rewritten as a conjunction of clauses (one atom from each
// block), each clause expanded into its exclusive sign patterns, each
// pattern compiled through the substitution table; per-clause products and
// a final sum of squares assemble F. Slack bookkeeping: one y per block
// atom (shared across clauses, pinned to exactly two values by every
// pattern), one z per clause, pinned to one value in both the != branch
// (z = 1/G) and the = branch (where the table alone would leave it free;
// pinning z = 0 keeps the fibre cardinality exactly 2^r).
inline GadgetOutput compile_union(const SemialgebraicSet& set) {
  int n = set.n;
  int t = static_cast<int>(set.blocks.size());

  // pad blocks with dummy 1 > 0 so every block carries the same slack count
  std::vector<BasicBlock> blocks = set.blocks;
  size_t rmax = 0;
  for (const auto& b : blocks) {
    require(b.nonstrict.empty(), ErrorCode::InvariantViolation,
            "compile_union expects strict-only blocks");
    rmax = std::max(rmax, b.strict.size());
  }
  require(rmax <= 3, ErrorCode::ScaleLimit, "compile_union: slack count capped at 3 per block");
  for (auto& b : blocks)
    while (b.strict.size() < rmax) b.strict.push_back(QPoly::constant(n, Rational(1)));

  // atoms per block: the equation (when nonzero) and the strict inequalities
  struct Atom {
    bool is_eq;
    int block;
    int idx;  // inequality index within the block (is_eq: -1)
  };
  std::vector<std::vector<Atom>> block_atoms(static_cast<size_t>(t));
  int total_y = 0;
  std::vector<std::vector<int>> yvar(static_cast<size_t>(t));
  for (int i = 0; i < t; ++i) {
    if (!blocks[static_cast<size_t>(i)].g.is_zero())
      block_atoms[static_cast<size_t>(i)].push_back({true, i, -1});
    for (size_t j = 0; j < blocks[static_cast<size_t>(i)].strict.size(); ++j) {
      block_atoms[static_cast<size_t>(i)].push_back({false, i, static_cast<int>(j)});
      yvar[static_cast<size_t>(i)].push_back(total_y++);
    }
    require(!block_atoms[static_cast<size_t>(i)].empty(), ErrorCode::InvariantViolation,
            "compile_union: a block with no constraints makes the union trivial");
  }

  // clauses: the distributive product over block atom choices
  std::vector<std::vector<Atom>> clauses;
  {
    std::vector<size_t> idx(static_cast<size_t>(t), 0);
    while (true) {
      std::vector<Atom> clause;
      for (int i = 0; i < t; ++i)
        clause.push_back(block_atoms[static_cast<size_t>(i)][idx[static_cast<size_t>(i)]]);
      clauses.push_back(std::move(clause));
      int k = 0;
      while (k < t && ++idx[static_cast<size_t>(k)] == block_atoms[static_cast<size_t>(k)].size()) {
        idx[static_cast<size_t>(k)] = 0;
        ++k;
      }
      if (k == t) break;
    }
  }

  int total = n + total_y + static_cast<int>(clauses.size());  // x, y, z
  GadgetOutput out;
  out.r = total_y;
  out.multiplier = pow_int(Int(2), static_cast<unsigned long>(total_y));
  out.total_vars = total;
  auto lift = [&](const QPoly& p) { return p.extend(total - n); };
  QPoly one = QPoly::constant(total, Rational(1));

  QPoly F(total);
  for (size_t c = 0; c < clauses.size(); ++c) {
    const auto& clause = clauses[c];
    // merged equation: product of the chosen equations (empty: none)
    QPoly eqpoly(total);
    bool has_eq = false;
    std::vector<std::pair<const QPoly*, int>> ineqs;  // (poly, y index)
    for (const Atom& at : clause) {
      const BasicBlock& b = blocks[static_cast<size_t>(at.block)];
      if (at.is_eq) {
        QPoly ge = lift(b.g);
        eqpoly = has_eq ? eqpoly * ge : ge;
        has_eq = true;
      } else {
        ineqs.emplace_back(&b.strict[static_cast<size_t>(at.idx)],
                           yvar[static_cast<size_t>(at.block)][static_cast<size_t>(at.idx)]);
      }
    }
    QPoly zc = QPoly::variable(total, n + total_y + static_cast<int>(c));
    int rho = static_cast<int>(ineqs.size());

    // exclusive sign patterns satisfying the clause:
    // eq sign in {=, !=} (when present), each inequality in {<, =, >};
    // the pattern must make some literal of the clause true
    QPoly clause_product = one;
    std::vector<int> pat(static_cast<size_t>(rho), 0);  // 0: <, 1: =, 2: >
    int eq_choices = has_eq ? 2 : 1;
    for (int eqs = 0; eqs < eq_choices; ++eqs) {  // 0: =0 branch, 1: !=0 branch
      std::fill(pat.begin(), pat.end(), 0);
      while (true) {
        bool satisfies = (has_eq && eqs == 0);
        for (int j = 0; j < rho && !satisfies; ++j) satisfies = (pat[static_cast<size_t>(j)] == 2);
        if (satisfies) {
          std::vector<QPoly> eqs_list;
          if (has_eq) {
            if (eqs == 0) {
              eqs_list.push_back(eqpoly);
              eqs_list.push_back(zc);  // pin the clause slack in the = branch
            } else {
              eqs_list.push_back(eqpoly * zc - one);
            }
          }
          for (int j = 0; j < rho; ++j) {
            QPoly fl = lift(*ineqs[static_cast<size_t>(j)].first);
            QPoly y = QPoly::variable(total, n + ineqs[static_cast<size_t>(j)].second);
            switch (pat[static_cast<size_t>(j)]) {
              case 0:
                eqs_list.push_back(fl * y * y + one);
                break;
              case 1:
                eqs_list.push_back(fl);
                eqs_list.push_back(y * y - one);
                break;
              case 2:
                eqs_list.push_back(fl * y * y - one);
                break;
            }
          }
          clause_product = clause_product * combine(eqs_list, CombineMode::SumOfSquares);
        }
        int j = 0;
        while (j < rho && ++pat[static_cast<size_t>(j)] == 3) {
          pat[static_cast<size_t>(j)] = 0;
          ++j;
        }
        if (j == rho) break;
      }
      if (rho == 0 && !has_eq) break;
    }
    F += clause_product * clause_product;
  }
  out.F = std::move(F);
  return out;
}

// ---------------------------------------------------------------------------
// Topological instance constructors
// ---------------------------------------------------------------------------

// One-point compactification of Z(f) through the sphere inversion at xi.
inline QPoly one_point_compactify(const QPoly& f, const std::vector<Rational>& xi) {
  return inversion_transform(f, xi);
}

namespace gdetail {

// cheap boundedness certificate: the top-degree form has no real zero away
// from the origin (slice the cone with a generic hyperplane)
inline bool bounded_certificate(const QPoly& f, const SolveOptions& opt) {
  int n = f.nvars();
  int d = f.degree();
  if (d % 2 != 0) return false;
  QPoly top(n);
  for (const auto& [e, c] : f.terms()) {
    int tot = 0;
    for (unsigned v : e) tot += static_cast<int>(v);
    if (tot == d) top.add_term(e, c);
  }
  for (int attempt = 0; attempt < 4; ++attempt) {
    SplitMix64 rng(0xb0dace111ULL + static_cast<uint64_t>(attempt));
    QPoly plane(n);
    for (int i = 0; i < n; ++i)
      plane += QPoly::variable(n, i).scaled(Rational(static_cast<long>(rng.below(64)) + 1));
    plane -= QPoly::constant(n, Rational(1));
    try {
      RealSolveOutcome sol = solve_real({top, plane}, n, opt);
      if (!sol.positive_dimensional && sol.points.empty()) return true;
    } catch (const Error&) {
    }
  }
  return false;
}

}  // namespace gdetail

// Z(suspend(f)) is homeomorphic to the one-point compactification of
// Z(f) x R: the suspension. Consequently chi(Sigma(Z)) = 1 - chi(Z(f)) for
// nonempty compact Z(f). Construction: f0 := f^2 + X_{n+1}^2 (zero set
// Z x {0}), widen by one cylinder variable, then invert at (0,...,0,1,0).
inline QPoly suspend(const QPoly& f, const EulerOptions& opt = {}, uint64_t seed = 42) {
  int n = f.nvars();
  require(!f.is_zero(), ErrorCode::ZeroPolynomial, "suspend(0)");
  // compactness precheck: top-form certificate, else the radius-stabilization
  // heuristic at the first two radii (euler_closed throws when unstable)
  if (!gdetail::bounded_certificate(f, opt.solve)) {
    SemialgebraicSet s = SemialgebraicSet::make(n, {BasicBlock::make(n, f)});
    auto schedule = default_radius_schedule();
    euler_closed(s, {schedule[0], schedule[1]}, seed, opt);
  }
  QPoly xl = QPoly::variable(n + 1, n);
  QPoly f0 = f.extend(1) * f.extend(1) + xl * xl;
  QPoly f0_cyl = f0.extend(1);  // zero set (Z x {0}) x R
  std::vector<Rational> xi(static_cast<size_t>(n + 2), Rational(0));
  xi[static_cast<size_t>(n)] = 1;
  return inversion_transform(f0_cyl, xi);
}

// ---------------------------------------------------------------------------
// Example catalog with expected invariants
// ---------------------------------------------------------------------------

struct ExampleSpec {
  std::string name;
  SemialgebraicSet set;
  std::map<std::string, Int> expected;   // invariant name -> value
  std::map<std::string, std::string> provenance;
};

inline ExampleSpec example(const std::string& name, long param = 0) {
  auto sphere_poly = [](int n) {
    QPoly f(n);
    for (int i = 0; i < n; ++i) {
      Exponents e(static_cast<size_t>(n), 0);
      e[static_cast<size_t>(i)] = 2;
      f.add_term(e, 1);
    }
    f.add_term(Exponents(static_cast<size_t>(n), 0), -1);
    return f;
  };
  ExampleSpec ex;
  ex.name = name;
  if (name == "sphere") {
    long n = param > 0 ? param : 2;
    QPoly f = sphere_poly(static_cast<int>(n) + 1);
    ex.set = SemialgebraicSet::make(static_cast<int>(n) + 1,
                                    {BasicBlock::make(static_cast<int>(n) + 1, f)});
    ex.expected["chi"] = (n % 2 == 0) ? 2 : 0;
    ex.provenance["chi"] = "chi(S^n) = 2 for even n, 0 for odd n";
    return ex;
  }
  if (name == "circle_pair") {
    // two disjoint unit circles centered at (0,0) and (4,0)
    QPoly c1 = sphere_poly(2);
    QPoly c2(2);
    c2.add_term({2, 0}, 1);
    c2.add_term({1, 0}, -8);
    c2.add_term({0, 0}, 15);  // (x-4)^2 - 1 + y^2
    c2.add_term({0, 2}, 1);
    ex.set = SemialgebraicSet::make(2, {BasicBlock::make(2, c1), BasicBlock::make(2, c2)});
    ex.expected["chi_star"] = 0;
    ex.provenance["chi_star"] = "two disjoint circles";
    return ex;
  }
  if (name == "torus") {
    QPoly t(3);
    // (x^2 + y^2 + z^2 + 3)^2 - 16 (x^2 + y^2)
    QPoly q(3);
    q.add_term({2, 0, 0}, 1);
    q.add_term({0, 2, 0}, 1);
    q.add_term({0, 0, 2}, 1);
    q.add_term({0, 0, 0}, 3);
    t = q * q;
    t.add_term({2, 0, 0}, -16);
    t.add_term({0, 2, 0}, -16);
    ex.set = SemialgebraicSet::make(3, {BasicBlock::make(3, t)});
    ex.expected["chi"] = 0;
    ex.provenance["chi"] = "torus";
    return ex;
  }
  if (name == "open_ball") {
    long n = param > 0 ? param : 2;
    QPoly f(static_cast<int>(n));
    f.add_term(Exponents(static_cast<size_t>(n), 0), 1);
    for (int i = 0; i < n; ++i) {
      Exponents e(static_cast<size_t>(n), 0);
      e[static_cast<size_t>(i)] = 2;
      f.add_term(e, -1);
    }
    ex.set = SemialgebraicSet::make(
        static_cast<int>(n),
        {BasicBlock::make(static_cast<int>(n), QPoly::zero(static_cast<int>(n)), {f})});
    ex.expected["chi_star"] = (n % 2 == 0) ? 1 : -1;
    ex.provenance["chi_star"] = "chi*(R^n) = (-1)^n";
    return ex;
  }
  if (name == "point_set") {
    long k = param > 0 ? param : 3;
    QPoly f = QPoly::constant(1, Rational(1));
    for (long i = 0; i < k; ++i) {
      QPoly root = QPoly::variable(1, 0) - QPoly::constant(1, Rational(i));
      f = f * root;
    }
    ex.set = SemialgebraicSet::make(1, {BasicBlock::make(1, f)});
    ex.expected["count"] = k;
    ex.expected["chi_star"] = k;
    ex.provenance["count"] = "k distinct rational points";
    return ex;
  }
  if (name == "milnor_demo") {
    ex.set = SemialgebraicSet::make(1, {BasicBlock::make(1, QPoly::variable(1, 0))});
    ex.expected["chi_star"] = 1;
    ex.expected["chi_phi"] = 4;
    ex.provenance["chi_phi"] = "fibre of {x = 0} has four branches";
    return ex;
  }
  fail(ErrorCode::UnknownExample, name);
}

}  // namespace crag

#endif
