#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "hh/matrix.hpp"
#include "hh/numeric.hpp"

namespace hh {

// Smith normal form: nonnegative invariant factors d1 | d2 | ... and, when
// requested, unimodular transforms with left * M * right diagonal.
struct SmithForm {
  IntVec diag;          // invariant factors of the nonzero part, d1 | d2 | ...
  std::size_t rank = 0; // number of nonzero factors (== diag.size())
  std::optional<IntMatrix> left, right;

  // |coker| of M seen as a map into Z^rows: finite iff rank == rows.
  Int product() const {
    Int p = 1;
    for (const Int& d : diag) p *= d;
    return p;
  }
};

namespace detail {

// Fraction-free (Bareiss) forward elimination with row pivoting, counting
// pivots.  Works on rectangular matrices; entries stay integral because each
// intermediate value is a minor of the input (Sylvester identity).
inline std::pair<std::size_t, int> bareiss_eliminate(IntMatrix& a) {
  std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  int sign = 1;
  Int prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(piv, j), a(r, j));
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        a(i, j) = (a(i, j) * a(r, c) - a(i, c) * a(r, j)) / prev;
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return {r, sign};
}

}  // namespace detail

// Rank over the rationals.
inline std::size_t rank(IntMatrix m) { return detail::bareiss_eliminate(m).first; }

// Exact determinant by fraction-free elimination.  det of 0x0 is 1.
inline Int det(IntMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  auto [r, sign] = detail::bareiss_eliminate(m);
  if (r < n) return 0;
  return sign * m(n - 1, n - 1);
}

// det(M * M^t): the Cauchy-Binet sum of squared maximal minors.
inline Int gram_det(const IntMatrix& m) { return det(m * m.transpose()); }

// Smith normal form by repeated gcd reduction.  Pivot choice is the nonzero
// entry of the working submatrix minimizing (|value|, column, row); no other
// heuristics, so the reduction is deterministic.
inline SmithForm smith_normal_form(IntMatrix a, bool want_transforms = false) {
  std::size_t rows = a.rows(), cols = a.cols();
  IntMatrix left = IntMatrix::identity(rows);
  IntMatrix right = IntMatrix::identity(cols);

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols; ++k) std::swap(a(i, k), a(j, k));
    if (want_transforms)
      for (std::size_t k = 0; k < rows; ++k) std::swap(left(i, k), left(j, k));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows; ++k) std::swap(a(k, i), a(k, j));
    if (want_transforms)
      for (std::size_t k = 0; k < cols; ++k) std::swap(right(k, i), right(k, j));
  };
  auto add_row = [&](std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t k = 0; k < cols; ++k) a(dst, k) += f * a(src, k);
    if (want_transforms)
      for (std::size_t k = 0; k < rows; ++k) left(dst, k) += f * left(src, k);
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t k = 0; k < rows; ++k) a(k, dst) += f * a(k, src);
    if (want_transforms)
      for (std::size_t k = 0; k < cols; ++k) right(k, dst) += f * right(k, src);
  };
  auto negate_row = [&](std::size_t i) {
    for (std::size_t k = 0; k < cols; ++k) a(i, k) = -a(i, k);
    if (want_transforms)
      for (std::size_t k = 0; k < rows; ++k) left(i, k) = -left(i, k);
  };

  std::size_t t = 0;
  while (t < rows && t < cols) {
    // leftmost-smallest nonzero pivot in the remaining submatrix
    std::size_t pi = 0, pj = 0;
    bool found = false;
    Int best = 0;
    for (std::size_t j = t; j < cols; ++j)
      for (std::size_t i = t; i < rows; ++i) {
        if (a(i, j) == 0) continue;
        Int v = abs(a(i, j));
        if (!found || v < best) {
          found = true;
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (!found) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Int q = a(i, t) / a(t, t);
        add_row(i, t, -q);
        if (a(i, t) != 0) {  // nonzero remainder, strictly smaller pivot
          swap_rows(t, i);
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Int q = a(t, j) / a(t, t);
        add_col(j, t, -q);
        if (a(t, j) != 0) {
          swap_cols(t, j);
          dirty = true;
        }
      }
      if (dirty) continue;

      // pivot must divide every remaining entry (gives the divisibility chain)
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows && !fixed; ++i)
        for (std::size_t j = t + 1; j < cols && !fixed; ++j)
          if (a(i, j) % a(t, t) != 0) {
            add_row(t, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (a(t, t) < 0) negate_row(t);
    ++t;
  }

  SmithForm s;
  for (std::size_t k = 0; k < t; ++k) s.diag.push_back(a(k, k));
  s.rank = t;
  if (want_transforms) {
    s.left = std::move(left);
    s.right = std::move(right);
  }
  return s;
}

// Basis of the integer kernel lattice of M, by column-style reduction with
// leftmost pivots.  The tracker matrix stays unimodular, so the returned
// vectors are a lattice basis of ker M over Z, not just a spanning set over Q.
// Each vector is primitive with its first nonzero entry positive; identical
// inputs give identical output.
inline std::vector<IntVec> kernel_basis(const IntMatrix& m) {
  std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix a = m;
  IntMatrix t = IntMatrix::identity(cols);
  std::vector<bool> is_pivot(cols, false);

  auto combine = [&](std::size_t j0, std::size_t j, const Int& p, const Int& q,
                     const Int& u, const Int& v) {
    // col j0 <- p*col j0 + q*col j ; col j <- u*col j0_old + v*col j_old
    for (std::size_t i = 0; i < rows; ++i) {
      Int x = a(i, j0), y = a(i, j);
      a(i, j0) = p * x + q * y;
      a(i, j) = u * x + v * y;
    }
    for (std::size_t i = 0; i < cols; ++i) {
      Int x = t(i, j0), y = t(i, j);
      t(i, j0) = p * x + q * y;
      t(i, j) = u * x + v * y;
    }
  };

  for (std::size_t r = 0; r < rows; ++r) {
    std::size_t j0 = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (!is_pivot[j] && a(r, j) != 0) {
        j0 = j;
        break;
      }
    if (j0 == cols) continue;
    for (std::size_t j = j0 + 1; j < cols; ++j) {
      if (is_pivot[j] || a(r, j) == 0) continue;
      auto [g, p, q] = ext_gcd(a(r, j0), a(r, j));
      combine(j0, j, p, q, -a(r, j) / g, a(r, j0) / g);
    }
    is_pivot[j0] = true;
  }

  std::vector<IntVec> basis;
  for (std::size_t j = 0; j < cols; ++j) {
    if (is_pivot[j]) continue;
    IntVec v = t.column(j);
    Int c = content(v);
    if (c > 1)
      for (Int& x : v) x /= c;
    for (const Int& x : v) {
      if (x == 0) continue;
      if (x < 0)
        for (Int& y : v) y = -y;
      break;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Orthogonal-complement cofactor vector: for A of shape n x (n+1),
// v_i = (-1)^i det(A minus column i).  v lies in ker A; v = 0 iff rank A < n.
inline IntVec cofactor_kernel_vector(const IntMatrix& a) {
  if (a.cols() != a.rows() + 1)
    throw std::invalid_argument("cofactor_kernel_vector: need n x (n+1) matrix");
  std::size_t n1 = a.cols();
  IntVec v(n1);
  for (std::size_t i = 0; i < n1; ++i) {
    Int d = det(a.minus_column(i));
    v[i] = (i % 2 == 0) ? d : -d;
  }
  return v;
}

// Greedy leftmost column selection spanning the column space of M.
inline std::vector<int> leftmost_independent_columns(const IntMatrix& m) {
  std::vector<int> chosen;
  std::vector<RatVec> echelon;  // reduced rows of chosen columns, as vectors
  std::vector<std::size_t> lead;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    RatVec v(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, c);
    for (std::size_t k = 0; k < echelon.size(); ++k) {
      if (v[lead[k]] == 0) continue;
      Rational f = v[lead[k]] / echelon[k][lead[k]];
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= f * echelon[k][i];
    }
    std::size_t l = 0;
    while (l < v.size() && v[l] == 0) ++l;
    if (l == v.size()) continue;
    echelon.push_back(std::move(v));
    lead.push_back(l);
    chosen.push_back(static_cast<int>(c));
  }
  return chosen;
}

// Coordinates of the columns of M in the lattice spanned by `basis` (columns
// of a full-column-rank matrix).  Throws if a column is not an exact integer
// combination.
inline IntMatrix in_lattice(const std::vector<IntVec>& basis, const IntMatrix& m) {
  std::size_t r = basis.size();
  std::size_t n = r ? basis.front().size() : m.rows();
  if (m.rows() != n) throw std::invalid_argument("in_lattice: row count mismatch");

  // rational elimination on [B | M]
  std::size_t k = m.cols();
  std::vector<RatVec> aug(n, RatVec(r + k));
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < n; ++i) aug[i][j] = basis[j][i];
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) aug[i][r + j] = m(i, j);

  std::vector<std::size_t> pivot_row(r);
  std::size_t row = 0;
  for (std::size_t c = 0; c < r; ++c) {
    std::size_t p = row;
    while (p < n && aug[p][c] == 0) ++p;
    if (p == n) throw std::logic_error("in_lattice: basis not full column rank");
    std::swap(aug[p], aug[row]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || aug[i][c] == 0) continue;
      Rational f = aug[i][c] / aug[row][c];
      for (std::size_t j = c; j < r + k; ++j) aug[i][j] -= f * aug[row][j];
    }
    pivot_row[c] = row;
    ++row;
  }
  // residual rows must vanish on the targets
  for (std::size_t i = row; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (aug[i][r + j] != 0) throw std::logic_error("in_lattice: target outside span");

  IntMatrix out(r, k);
  for (std::size_t c = 0; c < r; ++c)
    for (std::size_t j = 0; j < k; ++j) {
      Rational x = aug[pivot_row[c]][r + j] / aug[pivot_row[c]][c];
      if (boost::multiprecision::denominator(x) != 1)
        throw std::logic_error("in_lattice: non-integral coordinate");
      out(c, j) = boost::multiprecision::numerator(x);
    }
  return out;
}

inline IntVec in_lattice(const std::vector<IntVec>& basis, const IntVec& v) {
  IntMatrix m = IntMatrix::from_columns({v}, basis.empty() ? v.size() : basis.front().size());
  return in_lattice(basis, m).column(0);
}

}  // namespace hh
