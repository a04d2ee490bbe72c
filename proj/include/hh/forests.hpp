#pragma once

#include <string>
#include <vector>

#include "hh/chain_complex.hpp"
#include "hh/enumeration.hpp"
#include "hh/homology.hpp"
#include "hh/linalg.hpp"

namespace hh {

struct TreeSummary {
  Selection selection;
  Int weight;  // |H~| of the associated (co)homology group, 0 when infinite
};

namespace detail {

inline void require_rank_zero(const ChainComplex& x, int dim, const std::string& who) {
  HomologySummary h = reduced_homology(x, dim);
  if (h.rank != 0)
    throw condition_violation(who + ": rk H~_" + std::to_string(dim) + "(X) = " +
                                  std::to_string(h.rank) + " != 0",
                              {h.rank});
}

}  // namespace detail

// Columns of boundary(i) written in the kernel lattice basis of boundary(i-1):
// the matrix [d_i]_Z whose maximal minors are tree weights.
inline IntMatrix tree_matrix(const ChainComplex& x, int i) {
  std::vector<IntVec> z = kernel_basis(x.boundary(i - 1));
  return in_lattice(z, x.boundary(i));
}

// Dual counterpart: columns of coboundary(i) in the kernel lattice basis of
// coboundary(i+1), i.e. [delta_i]_Z over Z^{i+1}(X).
inline IntMatrix dual_tree_matrix(const ChainComplex& x, int i) {
  std::vector<IntVec> z = kernel_basis(x.coboundary(i + 1));
  return in_lattice(z, x.coboundary(i));
}

// Every subset of size rk Z_{i-1}(X) with its weight |det([d_i|_I]_Z)|;
// zero-weight subsets are kept with weight 0.
inline std::vector<TreeSummary> enumerate_trees(const ChainComplex& x, int i,
                                                unsigned long long cap = kDefaultCap) {
  detail::require_rank_zero(x, i - 1, "enumerate_trees");
  IntMatrix a = tree_matrix(x, i);
  std::vector<TreeSummary> out;
  detail::for_each_subset(a.cols(), a.rows(), cap, [&](const std::vector<int>& idx) {
    out.push_back({Selection{i, idx}, abs(det(a.take_columns(idx)))});
  });
  return out;
}

inline Int tree_number(const ChainComplex& x, int i) {
  detail::require_rank_zero(x, i - 1, "tree_number");
  return gram_det(tree_matrix(x, i));
}

inline std::vector<TreeSummary> enumerate_dual_trees(const ChainComplex& x, int i,
                                                     unsigned long long cap = kDefaultCap) {
  detail::require_rank_zero(x, i + 1, "enumerate_dual_trees");
  IntMatrix a = dual_tree_matrix(x, i);
  std::vector<TreeSummary> out;
  detail::for_each_subset(a.cols(), a.rows(), cap, [&](const std::vector<int>& idx) {
    out.push_back({Selection{i, idx}, abs(det(a.take_columns(idx)))});
  });
  return out;
}

inline Int dual_tree_number(const ChainComplex& x, int i) {
  detail::require_rank_zero(x, i + 1, "dual_tree_number");
  return gram_det(dual_tree_matrix(x, i));
}

}  // namespace hh
