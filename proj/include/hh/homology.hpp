#pragma once

#include <string>
#include <vector>

#include "hh/chain_complex.hpp"
#include "hh/linalg.hpp"

namespace hh {

// Rank and torsion of one (co)homology group.  `order` is meaningful only
// when `finite` (rank zero); the paper maps infinite order to weight 0 at the
// call sites that need a number.
struct HomologySummary {
  int dim = 0;
  long rank = 0;
  IntVec torsion;  // invariant factors > 1, divisibility chain
  bool finite = false;
  Int order = 0;  // product of all invariant factors when finite

  Int order_or_zero() const { return finite ? order : Int(0); }
};

namespace detail {

// Homology of Z^n --d_out--> with incoming map d_in: ker(d_out)/im(d_in).
// Torsion is read off the incoming map expressed in the kernel lattice basis,
// which makes the quotient exactly Z^rk / im of an integer matrix.
inline HomologySummary homology_of_pair(const IntMatrix& d_out, const IntMatrix& d_in, int dim) {
  HomologySummary h;
  h.dim = dim;
  std::vector<IntVec> z = kernel_basis(d_out);
  IntMatrix img = in_lattice(z, d_in);
  SmithForm s = smith_normal_form(img);
  h.rank = static_cast<long>(z.size()) - static_cast<long>(s.rank);
  for (const Int& d : s.diag)
    if (d > 1) h.torsion.push_back(d);
  h.finite = (h.rank == 0);
  if (h.finite) h.order = s.product();
  return h;
}

// Z^n / im(M) for the full lattice (relative homology in the cut degree).
inline HomologySummary lattice_quotient(std::size_t n, const IntMatrix& m, int dim) {
  HomologySummary h;
  h.dim = dim;
  SmithForm s = smith_normal_form(m);
  h.rank = static_cast<long>(n) - static_cast<long>(s.rank);
  for (const Int& d : s.diag)
    if (d > 1) h.torsion.push_back(d);
  h.finite = (h.rank == 0);
  if (h.finite) h.order = s.product();
  return h;
}

}  // namespace detail

// Reduced homology in dimension i (i = -1 permitted for augmented complexes,
// top_dim + 1 trivially zero).
inline HomologySummary reduced_homology(const ChainComplex& x, int i) {
  if (i < -1 || i > x.top_dim() + 1)
    throw std::invalid_argument("reduced_homology: dimension out of range");
  return detail::homology_of_pair(x.boundary(i), x.boundary(i + 1), i);
}

// Reduced cohomology in dimension i, computed from transposed boundaries.
inline HomologySummary cohomology(const ChainComplex& x, int i) {
  if (i < -1 || i > x.top_dim() + 1)
    throw std::invalid_argument("cohomology: dimension out of range");
  return detail::homology_of_pair(x.coboundary(i), x.coboundary(i - 1), i);
}

// H_i(X, A) for A = X^{i-1} u Y: the relative chain group is free on the
// complement of Y and the relative boundary in degree i vanishes, so this is
// the quotient of that lattice by the row-restricted boundary(i+1).
inline HomologySummary relative_homology(const ChainComplex& x, const Selection& y, int i) {
  if (y.dim != i) throw std::invalid_argument("relative_homology: selection dimension mismatch");
  SubcomplexMaps maps = subcomplex_chain_maps(x, y);
  return detail::lattice_quotient(maps.relative_cells.size(), maps.relative_boundary, i);
}

// H^{i+1}(X, A) for A = X^{i-1} u Y: cocycles Z^{i+1}(X) modulo coboundaries
// of cochains supported off A, i.e. modulo the columns of coboundary(i)
// indexed by the complement of Y.
inline HomologySummary relative_cohomology(const ChainComplex& x, const Selection& y, int i) {
  if (y.dim != i) throw std::invalid_argument("relative_cohomology: selection dimension mismatch");
  x.check_selection(y);
  Selection rest = complement(x, y);
  IntMatrix delta_restricted = x.coboundary(i).take_columns(rest.indices);
  return detail::homology_of_pair(x.coboundary(i + 1), delta_restricted, i + 1);
}

// Subcomplex X^{i-1} u Y as a chain complex of its own (used to cross-check
// tree weights against |H~_{i-1}| by an independent route).
inline ChainComplex subcomplex(const ChainComplex& x, const Selection& y) {
  x.check_selection(y);
  std::vector<std::vector<std::string>> cells;
  std::vector<IntMatrix> boundaries;
  for (int k = 0; k < y.dim; ++k) cells.push_back(x.cells(k));
  std::vector<std::string> top;
  for (int idx : y.indices) top.push_back(x.cells(y.dim)[idx]);
  cells.push_back(std::move(top));
  for (int k = 1; k < y.dim; ++k) boundaries.push_back(x.boundary(k));
  if (y.dim >= 1) boundaries.push_back(x.boundary(y.dim).take_columns(y.indices));
  return ChainComplex(std::move(cells), std::move(boundaries), x.augmented());
}

}  // namespace hh
