#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace hh {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rational>;

// Thrown when a subset enumeration would exceed the configured cap.
struct cap_exceeded : std::runtime_error {
  unsigned long long needed;
  unsigned long long cap;
  cap_exceeded(unsigned long long needed_, unsigned long long cap_)
      : std::runtime_error("enumeration of " + std::to_string(needed_) +
                           " subsets exceeds cap " + std::to_string(cap_)),
        needed(needed_), cap(cap_) {}
};

// A rank precondition on reduced (co)homology failed.  `ranks` holds the
// observed ranks in the order the diagnostic message lists them.
struct condition_violation : std::runtime_error {
  std::vector<long> ranks;
  explicit condition_violation(const std::string& msg, std::vector<long> ranks_ = {})
      : std::runtime_error(msg), ranks(std::move(ranks_)) {}
};

// Input chain is not a cycle (or cochain not a cocycle) where one is required.
struct chain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

// gcd of all entries; 0 for the zero vector (the paper's wt = 0 convention).
inline Int content(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  return g;
}

inline bool is_zero(const IntVec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

inline Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rational dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline RatVec to_rational(const IntVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i];
  return r;
}

// Exact integer vector from a rational one; throws if any entry has a
// denominator other than 1.
inline IntVec to_integer(const RatVec& v) {
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (boost::multiprecision::denominator(v[i]) != 1)
      throw std::invalid_argument("to_integer: non-integral entry");
    r[i] = boost::multiprecision::numerator(v[i]);
  }
  return r;
}

// Extended gcd: returns (g, p, q) with p*a + q*b = g, g >= 0.  Deterministic.
struct ExtGcd {
  Int g, p, q;
};

inline ExtGcd ext_gcd(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp;
    tmp = old_r - q * r; old_r = r; r = tmp;
    tmp = old_s - q * s; old_s = s; s = tmp;
    tmp = old_t - q * t; old_t = t; t = tmp;
  }
  if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
  return {old_r, old_s, old_t};
}

// Exact binomial coefficient.
inline Int binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

}  // namespace hh
