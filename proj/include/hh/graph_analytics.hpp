#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "hh/chain_complex.hpp"
#include "hh/cycletrees.hpp"
#include "hh/forests.hpp"

namespace hh {

// Number of cycletrees (connected unicyclic spanning subgraphs) of the
// complete graph K_n: binom(n-1, 2) e^n Gamma(n-2, n), evaluated exactly via
// the integer-parameter expansion e^n Gamma(s, n) = (s-1)! sum_{k<s} n^k / k!.
inline Int count_cycletrees_complete(int n) {
  if (n < 3) throw std::invalid_argument("count_cycletrees_complete: need n >= 3");
  Int sum = 0;
  // (n-3)! / k! stays integral for k <= n-3
  for (int k = 0; k <= n - 3; ++k) {
    Int term = 1;
    for (int j = k + 1; j <= n - 3; ++j) term *= j;
    Int p = 1;
    for (int j = 0; j < k; ++j) p *= n;
    sum += term * p;
  }
  return binomial(static_cast<unsigned>(n - 1), 2) * sum;
}

struct CycleLengthProfile {
  int vertices = 0;
  int edges = 0;
  std::map<int, long> counts;  // cycle length j -> number of cycletrees l_j
  Int k1;                      // tree number of the graph
  Int identity_lhs;            // (m - n + 1) k_1
  Int identity_rhs;            // sum_j l_j j
  bool identity_ok = false;
};

namespace detail {

inline void require_graph(const ChainComplex& x, const std::string& who) {
  if (x.top_dim() > 1) throw std::invalid_argument(who + ": complex has cells above dimension 1");
  if (!x.augmented()) throw std::invalid_argument(who + ": graph complex must be augmented");
  IntMatrix b = x.boundary(1);
  for (std::size_t c = 0; c < b.cols(); ++c) {
    int plus = 0, minus = 0, other = 0;
    for (std::size_t r = 0; r < b.rows(); ++r) {
      if (b(r, c) == 1) ++plus;
      else if (b(r, c) == -1) ++minus;
      else if (b(r, c) != 0) ++other;
    }
    if (other || plus != 1 || minus != 1)
      throw std::invalid_argument(who + ": boundary column " + std::to_string(c) +
                                  " is not a graph edge");
  }
}

}  // namespace detail

// Cycle-length census of the graph's cycletrees, with the edge identity
// (m - n + 1) k_1 = sum_j l_j j checked exactly.
inline CycleLengthProfile cycle_length_profile(const ChainComplex& g,
                                               unsigned long long cap = kDefaultCap) {
  detail::require_graph(g, "cycle_length_profile");
  detail::require_rank_zero(g, 0, "cycle_length_profile");
  CycleLengthProfile p;
  p.vertices = static_cast<int>(g.num_cells(0));
  p.edges = static_cast<int>(g.num_cells(1));
  p.k1 = tree_number(g, 1);
  for (const CycletreeSummary& u : enumerate_cycletrees(g, 1, cap)) {
    if (u.weight == 0) continue;
    int len = 0;
    for (const Int& v : u.cycle_part)
      if (v != 0) ++len;
    ++p.counts[len];
  }
  p.identity_lhs = Int(p.edges - p.vertices + 1) * p.k1;
  p.identity_rhs = 0;
  for (const auto& [j, lj] : p.counts) p.identity_rhs += Int(j) * lj;
  p.identity_ok = (p.identity_lhs == p.identity_rhs);
  return p;
}

struct SpectralEstimate {
  double estimate = 0.0;       // extrapolated limit of (det D(t) - det D(0)) / t^2
  double error_bound = 0.0;    // spread of successive Richardson values
  double imag_residual = 0.0;  // largest |Im det| seen (sanity: det is real)
  std::vector<double> t_values;
  std::vector<double> ratios;  // (det(t) - det(0)) / t^2 per t
};

namespace detail {

inline std::complex<double> complex_det(std::vector<std::vector<std::complex<double>>> m) {
  std::size_t n = m.size();
  std::complex<double> d = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(m[i][k]) > std::abs(m[piv][k])) piv = i;
    if (std::abs(m[piv][k]) == 0.0) return 0.0;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      d = -d;
    }
    d *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      std::complex<double> f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return d;
}

// Phase-twisted edge Gram matrix: the incidence entries pick up e^{+-it/2}
// by head/tail role, so a cycle of length j accumulates monodromy e^{ijt}
// when traversed along its orientation.  Hermitian, so the determinant is
// real up to roundoff.
inline std::vector<std::vector<std::complex<double>>> twisted_down_laplacian(const IntMatrix& b,
                                                                             double t) {
  std::size_t n = b.rows(), m = b.cols();
  std::vector<std::vector<std::complex<double>>> bt(n, std::vector<std::complex<double>>(m));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < m; ++c) {
      if (b(r, c) == 1) bt[r][c] = std::polar(1.0, t / 2);
      else if (b(r, c) == -1) bt[r][c] = -std::polar(1.0, -t / 2);
    }
  std::vector<std::vector<std::complex<double>>> lap(m, std::vector<std::complex<double>>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      std::complex<double> s = 0.0;
      for (std::size_t r = 0; r < n; ++r) s += std::conj(bt[r][i]) * bt[r][j];
      lap[i][j] = s;
    }
  return lap;
}

}  // namespace detail

// Evaluates det of the twisted down Laplacian at each t, subtracts the t = 0
// value, and Richardson-extrapolates det/t^2 toward 0.  For a unicyclic graph
// whose cycle is coherently oriented the limit is the squared cycle length;
// the t^4 correction structure drives the two-point extrapolation.
inline SpectralEstimate laplacian_length_limit(const ChainComplex& g,
                                               std::vector<double> t_values = {1e-2, 1e-3, 1e-4}) {
  detail::require_graph(g, "laplacian_length_limit");
  if (t_values.size() < 2)
    throw std::invalid_argument("laplacian_length_limit: need at least two t values");
  IntMatrix b = g.boundary(1);
  SpectralEstimate est;
  est.t_values = t_values;
  std::complex<double> base = detail::complex_det(detail::twisted_down_laplacian(b, 0.0));
  est.imag_residual = std::abs(base.imag());
  for (double t : t_values) {
    std::complex<double> d = detail::complex_det(detail::twisted_down_laplacian(b, t));
    est.imag_residual = std::max(est.imag_residual, std::abs(d.imag()));
    est.ratios.push_back((d.real() - base.real()) / (t * t));
  }
  std::vector<double> richardson;
  for (std::size_t k = 0; k + 1 < est.ratios.size(); ++k) {
    double tb = t_values[k], ts = t_values[k + 1];
    richardson.push_back((est.ratios[k + 1] * tb * tb - est.ratios[k] * ts * ts) /
                         (tb * tb - ts * ts));
  }
  est.estimate = richardson.back();
  est.error_bound = richardson.size() >= 2
                        ? std::abs(richardson.back() - richardson[richardson.size() - 2])
                        : std::abs(richardson.back() - est.ratios.back());
  return est;
}

}  // namespace hh
