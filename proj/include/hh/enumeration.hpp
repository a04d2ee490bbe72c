#pragma once

#include <functional>
#include <vector>

#include "hh/numeric.hpp"

namespace hh {

inline constexpr unsigned long long kDefaultCap = 1'000'000;

namespace detail {

// Visits every k-subset of {0..n-1} in lexicographic order.  Throws
// cap_exceeded up front if C(n, k) > cap: a binomial blowup must fail loudly.
inline void for_each_subset(std::size_t n, std::size_t k, unsigned long long cap,
                            const std::function<void(const std::vector<int>&)>& visit) {
  Int total = binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
  if (total > cap) {
    Int max_ull = Int(~0ull);
    unsigned long long shown = total > max_ull ? ~0ull : total.convert_to<unsigned long long>();
    throw cap_exceeded(shown, cap);
  }
  if (k > n) return;
  std::vector<int> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = static_cast<int>(i);
  for (;;) {
    visit(idx);
    // next combination
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == static_cast<int>(n - k + i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail
}  // namespace hh
