#pragma once

#include <string>
#include <vector>

#include "hh/chain_complex.hpp"
#include "hh/forests.hpp"
#include "hh/homology.hpp"
#include "hh/linalg.hpp"

namespace hh {

namespace detail {

// Fixed data for winding determinants at dimension i: the kernel lattice
// basis Z of Z_i(X) and the reduced boundary [d-bar_{i+1}]_Z obtained by
// greedy leftmost independent column selection.  The cutting setup is the
// mirror image with coboundaries.
struct WindingSetup {
  std::vector<IntVec> basis;     // lattice basis of the (co)cycle group
  IntMatrix reduced;             // reduced (co)boundary, in basis coordinates
  std::vector<int> reduced_columns;
  IntMatrix outgoing;            // map whose kernel the basis spans (cycle test)
};

inline WindingSetup winding_setup(const ChainComplex& x, int i) {
  WindingSetup s;
  s.outgoing = x.boundary(i);
  s.basis = kernel_basis(s.outgoing);
  IntMatrix d_up = x.boundary(i + 1);
  s.reduced_columns = leftmost_independent_columns(d_up);
  if (s.reduced_columns.size() + 1 != s.basis.size()) {
    long rk_h = static_cast<long>(s.basis.size()) - static_cast<long>(s.reduced_columns.size());
    throw condition_violation(
        "winding_number: rk H~_" + std::to_string(i) + "(X) = " + std::to_string(rk_h) + " != 1",
        {rk_h});
  }
  s.reduced = in_lattice(s.basis, d_up.take_columns(s.reduced_columns));
  return s;
}

inline WindingSetup cutting_setup(const ChainComplex& x, int i) {
  WindingSetup s;
  s.outgoing = x.coboundary(i);
  s.basis = kernel_basis(s.outgoing);
  IntMatrix d_down = x.coboundary(i - 1);
  s.reduced_columns = leftmost_independent_columns(d_down);
  if (s.reduced_columns.size() + 1 != s.basis.size()) {
    long rk_h = static_cast<long>(s.basis.size()) - static_cast<long>(s.reduced_columns.size());
    throw condition_violation(
        "cutting_number: rk H~^" + std::to_string(i) + "(X) = " + std::to_string(rk_h) + " != 1",
        {rk_h});
  }
  s.reduced = in_lattice(s.basis, d_down.take_columns(s.reduced_columns));
  return s;
}

// det([z]_Z, [reduced]_Z) without any global sign normalization.
inline Int winding_det(const WindingSetup& s, const IntVec& z, const std::string& who) {
  if (z.size() != s.outgoing.cols()) throw std::invalid_argument(who + ": chain length mismatch");
  if (!is_zero(s.outgoing.apply(z))) throw chain_error(who + ": input is not a (co)cycle");
  IntVec coords = in_lattice(s.basis, z);
  std::size_t r = s.basis.size();
  IntMatrix m(r, r);
  for (std::size_t k = 0; k < r; ++k) {
    m(k, 0) = coords[k];
    for (std::size_t j = 0; j + 1 < r; ++j) m(k, j + 1) = s.reduced(k, j);
  }
  return det(m);
}

}  // namespace detail

// Primitive integer generator of the harmonic space ker Delta_i; requires the
// kernel to be one-dimensional (the rk H~_i = 1 part of the unicycle
// condition).  Sign-fixed by kernel_basis (first nonzero entry positive).
inline IntVec harmonic_generator(const ChainComplex& x, int i) {
  IntMatrix d_down = x.boundary(i);
  IntMatrix d_up = x.boundary(i + 1);
  IntMatrix laplacian = d_down.transpose() * d_down + d_up * d_up.transpose();
  std::vector<IntVec> k = kernel_basis(laplacian);
  if (k.size() != 1)
    throw condition_violation("harmonic_generator: dim ker Delta_" + std::to_string(i) + " = " +
                                  std::to_string(k.size()) + " != 1",
                              {static_cast<long>(k.size())});
  return k[0];
}

namespace detail {

// Global sign making the standard harmonic cycle's first nonzero coordinate
// positive.  lambda is a positive rational multiple of sign * h for the
// sign-fixed kernel generator h, so the sign can be read off one inner
// product instead of a cycletree enumeration.
inline int winding_sign(const ChainComplex& x, int i, const WindingSetup& s) {
  IntVec h = harmonic_generator(x, i);
  for (const IntVec& z : s.basis) {
    Int w = winding_det(s, z, "winding_number");
    if (w == 0) continue;
    Int ip = dot(z, h);
    if (ip == 0) throw std::logic_error("winding_sign: degenerate pairing");
    return ((w < 0) != (ip < 0)) ? -1 : 1;
  }
  throw std::logic_error("winding_sign: winding number vanishes on the cycle basis");
}

}  // namespace detail

// Winding number w(z) = det([z]_Z, [d-bar_{i+1}]_Z).  The basis-dependent
// global sign is fixed so that the standard harmonic cycle (= sum of
// w-weighted cycletree cycles) has a positive first nonzero coordinate.
inline Int winding_number(const ChainComplex& x, int i, const IntVec& z) {
  detail::WindingSetup s = detail::winding_setup(x, i);
  int sign = detail::winding_sign(x, i, s);
  return sign * detail::winding_det(s, z, "winding_number");
}

// Cutting number c(z) = det([z]_Z, [delta-bar_{i-1}]_Z) over the cocycle
// basis; kept raw (no extra sign), matching the standard harmonic cocycle.
inline Int cutting_number(const ChainComplex& x, int i, const IntVec& z) {
  detail::WindingSetup s = detail::cutting_setup(x, i);
  return detail::winding_det(s, z, "cutting_number");
}

struct HomologyCheckReport {
  Int number;              // w(z) or c(z)
  HomologySummary adjoined;  // H~ of X + virtual cell
  bool match;              // |number| equals the order, with 0 <-> infinite
};

// Adjoins a virtual (i+1)-cell with boundary z and compares |w(z)| with
// |H~_i(X + e)|.
inline HomologyCheckReport winding_homology_check(const ChainComplex& x, int i, const IntVec& z) {
  HomologyCheckReport rep;
  rep.number = winding_number(x, i, z);
  ChainComplex grown = adjoin_virtual_cell(x, i + 1, z);
  rep.adjoined = reduced_homology(grown, i);
  rep.match = (rep.number == 0) ? !rep.adjoined.finite
                                : (rep.adjoined.finite && abs(rep.number) == rep.adjoined.order);
  return rep;
}

// Adjoins a virtual (i-1)-cell with coboundary z and compares |c(z)| with
// |H~^i(X + e)|.
inline HomologyCheckReport cutting_homology_check(const ChainComplex& x, int i, const IntVec& z) {
  HomologyCheckReport rep;
  rep.number = cutting_number(x, i, z);
  ChainComplex grown = adjoin_virtual_cocell(x, i - 1, z);
  rep.adjoined = cohomology(grown, i);
  rep.match = (rep.number == 0) ? !rep.adjoined.finite
                                : (rep.adjoined.finite && abs(rep.number) == rep.adjoined.order);
  return rep;
}

}  // namespace hh
