#pragma once

#include <string>
#include <vector>

#include "hh/chain_complex.hpp"
#include "hh/enumeration.hpp"
#include "hh/forests.hpp"
#include "hh/homology.hpp"
#include "hh/winding.hpp"

namespace hh {

struct CycletreeSummary {
  Selection selection;
  IntVec cycle_part;      // C_U (or the cocycle part C_U*), supported inside the selection
  Int content;            // gcd of entries, 0 for the zero vector
  Int weight;             // == content by the gcd proposition
  IntVec primitive_part;  // C / content when content > 0, else zero vector
};

namespace detail {

inline CycletreeSummary make_cycletree(int dim, const std::vector<int>& idx, const IntMatrix& a,
                                       std::size_t ambient_cells) {
  CycletreeSummary u;
  u.selection = Selection{dim, idx};
  IntVec local = cofactor_kernel_vector(a.take_columns(idx));
  u.cycle_part.assign(ambient_cells, 0);
  for (std::size_t k = 0; k < idx.size(); ++k) u.cycle_part[idx[k]] = local[k];
  u.content = content(u.cycle_part);
  u.weight = u.content;
  u.primitive_part.assign(ambient_cells, 0);
  if (u.content > 0)
    for (std::size_t k = 0; k < ambient_cells; ++k) u.primitive_part[k] = u.cycle_part[k] / u.content;
  return u;
}

}  // namespace detail

// All (rk Z_{i-1} + 1)-subsets with their cycle parts from the cofactor
// construction; zero-weight cycletrees are kept with C_U = 0 so that sums
// over "all cycletrees" need no filtering.
inline std::vector<CycletreeSummary> enumerate_cycletrees(const ChainComplex& x, int i,
                                                          unsigned long long cap = kDefaultCap) {
  detail::require_rank_zero(x, i - 1, "enumerate_cycletrees");
  IntMatrix a = tree_matrix(x, i);
  std::vector<CycletreeSummary> out;
  detail::for_each_subset(a.cols(), a.rows() + 1, cap, [&](const std::vector<int>& idx) {
    out.push_back(detail::make_cycletree(i, idx, a, x.num_cells(i)));
  });
  return out;
}

// Dual cycletrees: (rk Z^{i+1} + 1)-subsets with cocycle parts from the same
// cofactor construction applied to [delta_i]_Z.
inline std::vector<CycletreeSummary> enumerate_dual_cycletrees(
    const ChainComplex& x, int i, unsigned long long cap = kDefaultCap) {
  detail::require_rank_zero(x, i + 1, "enumerate_dual_cycletrees");
  IntMatrix a = dual_tree_matrix(x, i);
  std::vector<CycletreeSummary> out;
  detail::for_each_subset(a.cols(), a.rows() + 1, cap, [&](const std::vector<int>& idx) {
    out.push_back(detail::make_cycletree(i, idx, a, x.num_cells(i)));
  });
  return out;
}

struct WeightCheckReport {
  Int content;
  HomologySummary homology;  // |H~_{i-1}(U)| recomputed by SNF on the subcomplex
  bool match;
};

// Independent confirmation of gcd(C_U) = |H~_{i-1}(U)|: the right-hand side
// comes from the Smith normal form of the subcomplex, not from the cofactors.
inline WeightCheckReport cycle_part_weight_check(const ChainComplex& x,
                                                 const CycletreeSummary& u) {
  WeightCheckReport rep;
  rep.content = u.content;
  rep.homology = reduced_homology(subcomplex(x, u.selection), u.selection.dim - 1);
  rep.match = (u.content == rep.homology.order_or_zero());
  return rep;
}

// Dual counterpart: gcd(C_U*) = |H^{i+1}(X, complement of U*)|.
inline WeightCheckReport dual_cycle_part_weight_check(const ChainComplex& x,
                                                      const CycletreeSummary& u) {
  WeightCheckReport rep;
  rep.content = u.content;
  rep.homology = relative_cohomology(x, complement(x, u.selection), u.selection.dim);
  rep.match = (u.content == rep.homology.order_or_zero());
  return rep;
}

// Circuit test: z is a minimal (support-minimal) cycle iff the columns of
// boundary(i) over supp(z) have rank |supp| - 1 and stay independent after
// removing any one column.
inline bool is_minimal_cycle(const ChainComplex& x, int i, const IntVec& z) {
  if (z.size() != x.num_cells(i)) throw std::invalid_argument("is_minimal_cycle: length mismatch");
  if (is_zero(z)) throw chain_error("is_minimal_cycle: zero chain");
  if (!is_zero(x.boundary(i).apply(z))) throw chain_error("is_minimal_cycle: not a cycle");
  std::vector<int> supp;
  for (std::size_t k = 0; k < z.size(); ++k)
    if (z[k] != 0) supp.push_back(static_cast<int>(k));
  IntMatrix cols = x.boundary(i).take_columns(supp);
  if (rank(cols) != supp.size() - 1) return false;
  for (std::size_t drop = 0; drop < supp.size(); ++drop)
    if (rank(cols.minus_column(drop)) != supp.size() - 1) return false;
  return true;
}

inline bool is_minimal_cocycle(const ChainComplex& x, int i, const IntVec& z) {
  if (z.size() != x.num_cells(i))
    throw std::invalid_argument("is_minimal_cocycle: length mismatch");
  if (is_zero(z)) throw chain_error("is_minimal_cocycle: zero cochain");
  if (!is_zero(x.coboundary(i).apply(z))) throw chain_error("is_minimal_cocycle: not a cocycle");
  std::vector<int> supp;
  for (std::size_t k = 0; k < z.size(); ++k)
    if (z[k] != 0) supp.push_back(static_cast<int>(k));
  IntMatrix cols = x.coboundary(i).take_columns(supp);
  if (rank(cols) != supp.size() - 1) return false;
  for (std::size_t drop = 0; drop < supp.size(); ++drop)
    if (rank(cols.minus_column(drop)) != supp.size() - 1) return false;
  return true;
}

inline void require_unicycle(const ChainComplex& x, int i, const std::string& who) {
  long below = reduced_homology(x, i - 1).rank;
  long at = reduced_homology(x, i).rank;
  long above = reduced_homology(x, i + 1).rank;
  if (below != 0 || at != 1 || above != 0)
    throw condition_violation(
        who + ": unicycle condition fails at dim " + std::to_string(i) + ": rk H~_" +
            std::to_string(i + 1) + " = " + std::to_string(above) + " (want 0), rk H~_" +
            std::to_string(i) + " = " + std::to_string(at) + " (want 1), rk H~_" +
            std::to_string(i - 1) + " = " + std::to_string(below) + " (want 0)",
        {above, at, below});
}

struct BijectionCheckReport {
  bool ok = true;
  std::size_t cycletrees = 0;
  std::size_t dual_cycletrees = 0;
  std::size_t nonzero_pairs = 0;       // cycletree complements with nonzero weight
  std::size_t dual_nonzero_pairs = 0;  // dual-cycletree complements with nonzero weight
  std::vector<std::string> failures;
};

// Theorems pairing cycletrees with dual spanning trees and dual cycletrees
// with spanning trees under the complement map:
//   |w(C_U)|  = wt(U-bar as dual tree)  * |H~_{i-1}(X)|, and w = 0 iff wt = 0;
//   |c(C_U*)| = wt(U*-bar as tree)      * |H~^{i+1}(X)|, and c = 0 iff wt = 0.
inline BijectionCheckReport complement_bijection_check(const ChainComplex& x, int i,
                                                       unsigned long long cap = kDefaultCap) {
  require_unicycle(x, i, "complement_bijection_check");
  BijectionCheckReport rep;

  Int h_below = reduced_homology(x, i - 1).order;
  Int h_above = cohomology(x, i + 1).order;
  detail::WindingSetup ws = detail::winding_setup(x, i);
  detail::WindingSetup cs = detail::cutting_setup(x, i);
  IntMatrix dual_a = dual_tree_matrix(x, i);
  IntMatrix tree_a = tree_matrix(x, i);

  for (const CycletreeSummary& u : enumerate_cycletrees(x, i, cap)) {
    ++rep.cycletrees;
    Selection comp = complement(x, u.selection);
    if (comp.indices.size() != dual_a.rows()) {
      rep.ok = false;
      rep.failures.push_back("complement of a cycletree is not dual-tree sized");
      continue;
    }
    Int dual_wt = abs(det(dual_a.take_columns(comp.indices)));
    Int w = detail::winding_det(ws, u.cycle_part, "complement_bijection_check");
    if ((w == 0) != (dual_wt == 0)) {
      rep.ok = false;
      rep.failures.push_back("zero-iff-zero fails for a cycletree complement");
    }
    if (abs(w) != dual_wt * h_below) {
      rep.ok = false;
      rep.failures.push_back("|w(C_U)| != wt(T*) |H~_{i-1}(X)| for a cycletree");
    }
    if (w != 0) ++rep.nonzero_pairs;
  }

  for (const CycletreeSummary& u : enumerate_dual_cycletrees(x, i, cap)) {
    ++rep.dual_cycletrees;
    Selection comp = complement(x, u.selection);
    if (comp.indices.size() != tree_a.rows()) {
      rep.ok = false;
      rep.failures.push_back("complement of a dual cycletree is not tree sized");
      continue;
    }
    Int tree_wt = abs(det(tree_a.take_columns(comp.indices)));
    Int c = detail::winding_det(cs, u.cycle_part, "complement_bijection_check");
    if ((c == 0) != (tree_wt == 0)) {
      rep.ok = false;
      rep.failures.push_back("zero-iff-zero fails for a dual cycletree complement");
    }
    if (abs(c) != tree_wt * h_above) {
      rep.ok = false;
      rep.failures.push_back("|c(C_U*)| != wt(T) |H~^{i+1}(X)| for a dual cycletree");
    }
    if (c != 0) ++rep.dual_nonzero_pairs;
  }
  return rep;
}

}  // namespace hh
