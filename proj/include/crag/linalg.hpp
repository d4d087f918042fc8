#ifndef CRAG_LINALG_HPP
#define CRAG_LINALG_HPP

#include <Eigen/Dense>
#include <optional>

#include "crag/interval.hpp"
#include "crag/univariate.hpp"

namespace crag {

using QMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using QVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using IMat = Eigen::Matrix<QInterval, Eigen::Dynamic, Eigen::Dynamic>;
using IVec = Eigen::Matrix<QInterval, Eigen::Dynamic, 1>;
using GMat = Eigen::Matrix<GaussianRational, Eigen::Dynamic, Eigen::Dynamic>;

// Exact rank by Gaussian elimination with full pivoting.
template <class Mat>
int exact_rank(Mat a) {
  using Scalar = typename Mat::Scalar;
  int rows = static_cast<int>(a.rows()), cols = static_cast<int>(a.cols());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (!coeff_is_zero(a(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    a.row(rank).swap(a.row(piv));
    for (int r = rank + 1; r < rows; ++r) {
      if (coeff_is_zero(a(r, col))) continue;
      Scalar f = a(r, col) / a(rank, col);
      for (int c = col; c < cols; ++c) a(r, c) -= f * a(rank, c);
    }
    ++rank;
  }
  return rank;
}

// Exact inverse; nullopt when singular.
inline std::optional<QMat> exact_inverse(QMat a) {
  int n = static_cast<int>(a.rows());
  require(a.cols() == n, ErrorCode::NotSymmetric, "inverse of non-square");
  QMat inv = QMat::Zero(n, n);
  for (int i = 0; i < n; ++i) inv(i, i) = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    a.row(col).swap(a.row(piv));
    inv.row(col).swap(inv.row(piv));
    Rational d = a(col, col);
    for (int c = 0; c < n; ++c) {
      a(col, c) /= d;
      inv(col, c) /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      Rational f = a(r, col);
      for (int c = 0; c < n; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

// Characteristic polynomial det(tI - M) by Faddeev-LeVerrier.
inline UPoly char_poly(const QMat& m) {
  int n = static_cast<int>(m.rows());
  require(m.cols() == n, ErrorCode::NotSymmetric, "char_poly of non-square");
  std::vector<Rational> c(static_cast<size_t>(n) + 1, Rational(0));
  c[n] = 1;
  QMat mk = QMat::Zero(n, n);
  QMat eye = QMat::Zero(n, n);
  for (int i = 0; i < n; ++i) eye(i, i) = 1;
  for (int k = 1; k <= n; ++k) {
    mk = m * (mk + c[static_cast<size_t>(n - k + 1)] * eye);
    Rational tr(0);
    for (int i = 0; i < n; ++i) tr += mk(i, i);
    c[static_cast<size_t>(n - k)] = -tr / Rational(k);
  }
  return UPoly(std::move(c));
}

// Number of negative eigenvalues, counted with multiplicity: characteristic
// polynomial, squarefree decomposition, then Sturm counting on (-inf, 0)
// per factor; multiplicity comes from the factor exponent.
inline int negative_eigenvalues(const QMat& m) {
  int n = static_cast<int>(m.rows());
  require(m.cols() == n, ErrorCode::NotSymmetric, "negative_eigenvalues: non-square");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      require(m(i, j) == m(j, i), ErrorCode::NotSymmetric, "negative_eigenvalues: not symmetric");
  if (n == 0) return 0;
  UPoly cp = char_poly(m);
  auto factors = squarefree_decomposition(cp);
  int count = 0;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].degree() <= 0) continue;
    SturmChain chain = SturmChain::build(factors[i]);
    // roots in (-inf, 0): exclude 0 itself
    int below = chain.count_roots_below(Rational(0));
    if (factors[i].eval(Rational(0)) == 0) below -= 1;
    count += static_cast<int>(i + 1) * below;
  }
  return count;
}

inline int matrix_kernel_dim(const QMat& m) {
  return static_cast<int>(m.cols()) - exact_rank(m);
}

// ---------------------------------------------------------------------------
// Certified inertia of an interval symmetric matrix via congruence
// (Sylvester's law). Diagonal pivots with certified sign; symmetric 2x2
// block pivots when the diagonal straddles zero. nullopt = not certifiable
// at this precision (caller refines the box and retries).
// ---------------------------------------------------------------------------

inline std::optional<std::pair<int, int>> interval_inertia(IMat a) {
  int n = static_cast<int>(a.rows());
  int neg = 0, pos = 0;
  std::vector<char> done(static_cast<size_t>(n), 0);
  int remaining = n;
  while (remaining > 0) {
    // best certified diagonal pivot
    int piv = -1;
    for (int i = 0; i < n; ++i)
      if (!done[i] && a(i, i).sign_certified() != 0) {
        piv = i;
        break;
      }
    if (piv >= 0) {
      int s = a(piv, piv).sign_certified();
      (s > 0 ? pos : neg) += 1;
      done[piv] = 1;
      --remaining;
      for (int r = 0; r < n; ++r) {
        if (done[r]) continue;
        QInterval f = a(r, piv) / a(piv, piv);
        for (int c = 0; c < n; ++c) {
          if (done[c]) continue;
          a(r, c) -= f * a(piv, c);
        }
        a(r, piv) = QInterval(Rational(0));
      }
      // re-symmetrize against interval drift
      for (int r = 0; r < n; ++r)
        for (int c = r + 1; c < n; ++c)
          if (!done[r] && !done[c]) {
            QInterval h(std::max(a(r, c).lo, a(c, r).lo), std::min(a(r, c).hi, a(c, r).hi));
            if (h.lo <= h.hi) {
              a(r, c) = h;
              a(c, r) = h;
            }
          }
      continue;
    }
    // 2x2 block pivot: need an off-diagonal entry certified nonzero and
    // block determinant certified negative (one positive, one negative
    // eigenvalue). The remaining cases are not certifiable here.
    int bi = -1, bj = -1;
    for (int i = 0; i < n && bi < 0; ++i) {
      if (done[i]) continue;
      for (int j = i + 1; j < n; ++j) {
        if (done[j]) continue;
        if (a(i, j).sign_certified() != 0) {
          QInterval det = a(i, i) * a(j, j) - a(i, j) * a(i, j);
          if (det.sign_certified() < 0) {
            bi = i;
            bj = j;
            break;
          }
        }
      }
    }
    if (bi < 0) return std::nullopt;
    neg += 1;
    pos += 1;
    done[bi] = 1;
    done[bj] = 1;
    remaining -= 2;
    QInterval det = a(bi, bi) * a(bj, bj) - a(bi, bj) * a(bi, bj);
    for (int r = 0; r < n; ++r) {
      if (done[r]) continue;
      // [u v] = [a(r,bi) a(r,bj)] * inv([[aii, aij],[aij, ajj]])
      QInterval u = (a(r, bi) * a(bj, bj) - a(r, bj) * a(bi, bj)) / det;
      QInterval v = (a(r, bj) * a(bi, bi) - a(r, bi) * a(bi, bj)) / det;
      for (int c = 0; c < n; ++c) {
        if (done[c]) continue;
        a(r, c) -= u * a(bi, c) + v * a(bj, c);
      }
    }
  }
  return std::make_pair(neg, pos);
}

}  // namespace crag

#endif
