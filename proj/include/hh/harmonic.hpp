#pragma once

#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hh/cycletrees.hpp"
#include "hh/forests.hpp"
#include "hh/winding.hpp"

namespace hh {

enum class HarmonicMode { brute, fast, both };

// Exact record of one harmonic computation: the standard harmonic cycle and
// cocycle, both tree numbers, the torsion orders on either side, and the
// residual of every verified identity.  All residuals must be exactly zero
// for `ok`.
struct HarmonicCertificate {
  int dim = 0;
  IntVec lambda;
  IntVec lambda_star;
  Int k_below;  // k_i(X)
  Int k_above;  // k^i(X)
  Int h_below;  // |H~_{i-1}(X)|
  Int h_above;  // |H~^{i+1}(X)|
  Int sum_w_squared;  // sum over cycletrees of w(C_U)^2
  Int sum_c_squared;  // sum over dual cycletrees of c(C_U*)^2
  int normal_sign = 1;
  std::vector<std::pair<std::string, Rational>> identity_residuals;
  bool ok = false;
  std::string basis_fingerprint;

  Rational residual(const std::string& name) const {
    for (const auto& [k, v] : identity_residuals)
      if (k == name) return v;
    throw std::out_of_range("certificate has no residual named " + name);
  }
};

namespace detail {

inline void flip_to_positive_leading(IntVec& v) {
  for (const Int& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (Int& y : v) y = -y;
    return;
  }
}

inline int leading_sign(const IntVec& v) {
  for (const Int& x : v)
    if (x != 0) return x < 0 ? -1 : 1;
  return 0;
}

inline IntVec scale_to_integer(const Rational& a, const IntVec& v, const std::string& who) {
  IntVec out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    Rational x = a * Rational(v[k]);
    if (boost::multiprecision::denominator(x) != 1)
      throw std::logic_error(who + ": result is not an integer vector");
    out[k] = boost::multiprecision::numerator(x);
  }
  return out;
}

inline IntVec harmonic_cycle_brute_raw(const ChainComplex& x, int i, const WindingSetup& ws,
                                       const std::vector<CycletreeSummary>& cycletrees) {
  IntVec lambda(x.num_cells(i), 0);
  for (const CycletreeSummary& u : cycletrees) {
    if (u.weight == 0) continue;  // C_U = 0 contributes nothing
    Int w = winding_det(ws, u.cycle_part, "standard_harmonic_cycle");
    if (w == 0) continue;
    for (std::size_t k = 0; k < lambda.size(); ++k) lambda[k] += w * u.cycle_part[k];
  }
  return lambda;
}

// lambda from the inner product formula: the primitive Laplacian-kernel
// generator h scaled by w(z0) k_i / (z0 o h) for any cycle z0 with
// nonvanishing winding number.
inline IntVec harmonic_cycle_fast_raw(const ChainComplex& x, int i, const WindingSetup& ws,
                                      const IntVec& h, const Int& k_i) {
  for (const IntVec& z : ws.basis) {
    Int w = winding_det(ws, z, "standard_harmonic_cycle_fast");
    if (w == 0) continue;
    Int pairing = dot(z, h);
    if (pairing == 0)
      throw std::logic_error("standard_harmonic_cycle_fast: degenerate cycle pairing");
    return scale_to_integer(Rational(w * k_i, pairing), h, "standard_harmonic_cycle_fast");
  }
  throw std::logic_error("standard_harmonic_cycle_fast: winding vanishes on the cycle basis");
}

inline IntVec harmonic_cocycle_brute_raw(const ChainComplex& x, int i, const WindingSetup& cs,
                                         const std::vector<CycletreeSummary>& dual_cycletrees) {
  IntVec lambda(x.num_cells(i), 0);
  for (const CycletreeSummary& u : dual_cycletrees) {
    if (u.weight == 0) continue;
    Int c = winding_det(cs, u.cycle_part, "standard_harmonic_cocycle");
    if (c == 0) continue;
    for (std::size_t k = 0; k < lambda.size(); ++k) lambda[k] += c * u.cycle_part[k];
  }
  return lambda;
}

inline IntVec harmonic_cocycle_fast_raw(const ChainComplex& x, int i, const WindingSetup& cs,
                                        const IntVec& h, const Int& k_dual) {
  for (const IntVec& z : cs.basis) {
    Int c = winding_det(cs, z, "standard_harmonic_cocycle fast");
    if (c == 0) continue;
    Int pairing = dot(z, h);
    if (pairing == 0)
      throw std::logic_error("standard_harmonic_cocycle: degenerate cocycle pairing");
    return scale_to_integer(Rational(c * k_dual, pairing), h, "standard_harmonic_cocycle fast");
  }
  throw std::logic_error("standard_harmonic_cocycle: cutting vanishes on the cocycle basis");
}

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace detail

// Standard harmonic cycle by full cycletree enumeration; the global sign is
// fixed so that the first nonzero coordinate is positive.
inline IntVec standard_harmonic_cycle_bruteforce(const ChainComplex& x, int i,
                                                 unsigned long long cap = kDefaultCap) {
  require_unicycle(x, i, "standard_harmonic_cycle_bruteforce");
  detail::WindingSetup ws = detail::winding_setup(x, i);
  IntVec lambda = detail::harmonic_cycle_brute_raw(x, i, ws, enumerate_cycletrees(x, i, cap));
  if (is_zero(lambda))
    throw std::logic_error("standard_harmonic_cycle_bruteforce: lambda vanished");
  detail::flip_to_positive_leading(lambda);
  return lambda;
}

// Same chain via the exact rational kernel of the combinatorial Laplacian;
// agrees with the brute-force route coordinate for coordinate.
inline IntVec standard_harmonic_cycle_fast(const ChainComplex& x, int i) {
  require_unicycle(x, i, "standard_harmonic_cycle_fast");
  detail::WindingSetup ws = detail::winding_setup(x, i);
  IntVec h = harmonic_generator(x, i);
  IntVec lambda = detail::harmonic_cycle_fast_raw(x, i, ws, h, tree_number(x, i));
  if (is_zero(lambda)) throw std::logic_error("standard_harmonic_cycle_fast: lambda vanished");
  detail::flip_to_positive_leading(lambda);
  return lambda;
}

// Standard harmonic cocycle.  Its sign is whatever the fixed cocycle basis
// and reduced coboundary produce; the certificate records the resulting
// global sign relating lambda and lambda_star.
inline IntVec standard_harmonic_cocycle(const ChainComplex& x, int i,
                                        HarmonicMode mode = HarmonicMode::both,
                                        unsigned long long cap = kDefaultCap) {
  require_unicycle(x, i, "standard_harmonic_cocycle");
  detail::WindingSetup cs = detail::cutting_setup(x, i);
  IntVec brute, fast;
  if (mode != HarmonicMode::fast)
    brute = detail::harmonic_cocycle_brute_raw(x, i, cs, enumerate_dual_cycletrees(x, i, cap));
  if (mode != HarmonicMode::brute) {
    IntVec h = harmonic_generator(x, i);
    fast = detail::harmonic_cocycle_fast_raw(x, i, cs, h, dual_tree_number(x, i));
  }
  if (mode == HarmonicMode::both && brute != fast)
    throw std::logic_error("standard_harmonic_cocycle: brute and fast routes disagree");
  IntVec lambda = (mode == HarmonicMode::fast) ? fast : brute;
  if (is_zero(lambda)) throw std::logic_error("standard_harmonic_cocycle: lambda* vanished");
  return lambda;
}

// Rational winding number z o lambda / k_i(X), defined for any chain.
inline Rational rational_winding(const ChainComplex& x, int i, const RatVec& z) {
  IntVec lambda = standard_harmonic_cycle_fast(x, i);
  if (z.size() != lambda.size()) throw std::invalid_argument("rational_winding: length mismatch");
  return dot(z, to_rational(lambda)) / Rational(tree_number(x, i));
}

// Rational cutting number z o lambda* / k^i(X).
inline Rational rational_cutting(const ChainComplex& x, int i, const RatVec& z) {
  IntVec ls = standard_harmonic_cocycle(x, i, HarmonicMode::fast);
  if (z.size() != ls.size()) throw std::invalid_argument("rational_cutting: length mismatch");
  return dot(z, to_rational(ls)) / Rational(dual_tree_number(x, i));
}

// Builds the full certificate: lambda and lambda* by both routes, k_i, k^i,
// torsion orders, and the exact residual of every identity the paper proves
// about them, plus harmonicity and energy-minimality spot checks.
inline HarmonicCertificate build_certificate(const ChainComplex& x, int i,
                                             unsigned long long cap = kDefaultCap,
                                             int energy_samples = 100) {
  require_unicycle(x, i, "build_certificate");
  HarmonicCertificate cert;
  cert.dim = i;

  detail::WindingSetup ws = detail::winding_setup(x, i);
  detail::WindingSetup cs = detail::cutting_setup(x, i);
  IntVec h = harmonic_generator(x, i);
  cert.k_below = tree_number(x, i);
  cert.k_above = dual_tree_number(x, i);
  cert.h_below = reduced_homology(x, i - 1).order;
  cert.h_above = cohomology(x, i + 1).order;

  std::vector<CycletreeSummary> cycletrees = enumerate_cycletrees(x, i, cap);
  std::vector<CycletreeSummary> dual_cycletrees = enumerate_dual_cycletrees(x, i, cap);

  IntVec lambda_raw = detail::harmonic_cycle_brute_raw(x, i, ws, cycletrees);
  int sign = detail::leading_sign(lambda_raw);
  if (sign == 0) throw std::logic_error("build_certificate: lambda vanished");
  cert.lambda = lambda_raw;
  if (sign < 0)
    for (Int& v : cert.lambda) v = -v;
  cert.lambda_star = detail::harmonic_cocycle_brute_raw(x, i, cs, dual_cycletrees);

  IntVec lambda_fast = detail::harmonic_cycle_fast_raw(x, i, ws, h, cert.k_below);
  detail::flip_to_positive_leading(lambda_fast);
  IntVec lambda_star_fast = detail::harmonic_cocycle_fast_raw(x, i, cs, h, cert.k_above);

  // winding with the lambda-coherent sign; cutting stays raw
  auto w_of = [&](const IntVec& z) {
    return Int(sign * detail::winding_det(ws, z, "build_certificate"));
  };
  auto c_of = [&](const IntVec& z) {
    return detail::winding_det(cs, z, "build_certificate");
  };

  cert.sum_w_squared = 0;
  for (const CycletreeSummary& u : cycletrees) {
    Int w = u.weight == 0 ? Int(0) : w_of(u.cycle_part);
    cert.sum_w_squared += w * w;
  }
  cert.sum_c_squared = 0;
  for (const CycletreeSummary& u : dual_cycletrees) {
    Int c = u.weight == 0 ? Int(0) : c_of(u.cycle_part);
    cert.sum_c_squared += c * c;
  }

  Int lambda_norm = dot(cert.lambda, cert.lambda);
  Int star_norm = dot(cert.lambda_star, cert.lambda_star);

  auto abs_sum = [](const IntVec& v) {
    Int s = 0;
    for (const Int& e : v) s += abs(e);
    return s;
  };
  auto push = [&](const std::string& name, const Rational& r) {
    cert.identity_residuals.emplace_back(name, r);
  };

  // harmonicity: lambda in ker d_i and ker d_{i+1}^t, hence ker Delta_i
  IntMatrix d_down = x.boundary(i);
  IntMatrix d_up = x.boundary(i + 1);
  push("cycle_kernel", Rational(abs_sum(d_down.apply(cert.lambda))));
  push("cocycle_kernel", Rational(abs_sum(d_up.transpose().apply(cert.lambda))));
  IntMatrix laplacian = d_down.transpose() * d_down + d_up * d_up.transpose();
  push("laplacian_kernel", Rational(abs_sum(laplacian.apply(cert.lambda))));

  // inner product formulas over full bases
  Int inner_cycles = 0;
  for (const IntVec& z : ws.basis) inner_cycles += abs(dot(z, cert.lambda) - w_of(z) * cert.k_below);
  push("inner_product_cycle_basis", Rational(inner_cycles));
  Int inner_cocycles = 0;
  for (const IntVec& z : cs.basis)
    inner_cocycles += abs(dot(cert.lambda_star, z) - c_of(z) * cert.k_above);
  push("inner_product_cocycle_basis", Rational(inner_cocycles));

  // norm identities
  push("lambda_norm_vs_cycletrees", Rational(abs(lambda_norm - cert.k_below * cert.sum_w_squared)));
  push("lambda_norm_vs_orders",
       Rational(abs(lambda_norm - cert.k_above * cert.k_below * cert.h_below * cert.h_below)));
  push("lambda_star_norm_vs_orders",
       Rational(abs(star_norm - cert.k_above * cert.k_below * cert.h_above * cert.h_above)));
  push("sum_w2_vs_dual_order",
       Rational(abs(cert.sum_w_squared - cert.k_above * cert.h_below * cert.h_below)));
  push("sum_c2_vs_tree_order",
       Rational(abs(cert.sum_c_squared - cert.k_below * cert.h_above * cert.h_above)));

  // normalized harmonic cycle: (lambda / h_below) o (lambda / h_below) = k_i k^i
  Rational normalized_norm = Rational(lambda_norm) / Rational(cert.h_below * cert.h_below);
  Rational nn_res = normalized_norm - Rational(cert.k_below * cert.k_above);
  push("normalized_norm", nn_res < 0 ? -nn_res : nn_res);

  // lambda / |H~_{i-1}| = +- lambda* / |H~^{i+1}| with one global sign
  cert.normal_sign = 1;
  for (std::size_t k = 0; k < cert.lambda.size(); ++k) {
    if (cert.lambda[k] == 0 || cert.lambda_star[k] == 0) continue;
    cert.normal_sign = ((cert.lambda[k] < 0) != (cert.lambda_star[k] < 0)) ? -1 : 1;
    break;
  }
  Rational parallel = 0;
  for (std::size_t k = 0; k < cert.lambda.size(); ++k) {
    Rational d = Rational(cert.lambda[k]) / Rational(cert.h_below) -
                 Rational(cert.normal_sign) * Rational(cert.lambda_star[k]) / Rational(cert.h_above);
    parallel += d < 0 ? -d : d;
  }
  push("parallel_lambdas", parallel);

  Int route_gap = 0;
  for (std::size_t k = 0; k < cert.lambda.size(); ++k) {
    route_gap += abs(cert.lambda[k] - lambda_fast[k]);
    route_gap += abs(cert.lambda_star[k] - lambda_star_fast[k]);
  }
  push("fast_equals_bruteforce", Rational(route_gap));

  // energy minimality against random homologous perturbations lambda + d y
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
  std::uniform_int_distribution<int> coeff(-3, 3);
  long violations = 0;
  for (int s = 0; s < energy_samples; ++s) {
    IntVec y(d_up.cols());
    for (Int& v : y) v = coeff(rng);
    IntVec dy = d_up.apply(y);
    IntVec sum = cert.lambda;
    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += dy[k];
    Int other = dot(sum, sum);
    if (other < lambda_norm) ++violations;
    if (other == lambda_norm && !is_zero(dy)) ++violations;
  }
  push("energy_violations", Rational(violations));

  cert.ok = true;
  for (const auto& [name, r] : cert.identity_residuals)
    if (r != 0) cert.ok = false;

  // fingerprint of the basis choices behind every sign in this certificate
  std::string src = "dim=" + std::to_string(i) + ";Z=";
  for (const IntVec& z : ws.basis)
    for (const Int& v : z) src += v.str() + ",";
  src += ";Zdual=";
  for (const IntVec& z : cs.basis)
    for (const Int& v : z) src += v.str() + ",";
  src += ";dbar=";
  for (int c : ws.reduced_columns) src += std::to_string(c) + ",";
  src += ";deltabar=";
  for (int c : cs.reduced_columns) src += std::to_string(c) + ",";
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(detail::fnv1a(src)));
  cert.basis_fingerprint = buf;
  return cert;
}

}  // namespace hh
