#pragma once

// Bounded smooth-number generation: all naturals up to a bound whose
// prime support is contained in (smooth_ascending) or exactly equal to
// (full_support_values) a given prime set.

#include <algorithm>
#include <vector>

#include "abceq/arith.hpp"

namespace abceq {

namespace detail {

// Depth-first exponent nesting over the support primes. min_exponent is 0
// for contained-support streams and 1 for exact-support streams. The
// bound test runs before each multiplication, so nothing ever wraps.
inline void extend_smooth(const std::vector<Natural>& primes,
                          std::size_t index, Natural value, Natural bound,
                          unsigned min_exponent, std::vector<Natural>& out) {
  if (index == primes.size()) {
    out.push_back(value);
    return;
  }
  const Natural p = primes[index];
  for (unsigned e = 0;; ++e) {
    if (e >= min_exponent) {
      extend_smooth(primes, index + 1, value, bound, min_exponent, out);
    }
    if (value > bound / p) break;
    value *= p;
  }
}

inline std::vector<Natural> smooth_values(const SupportSet& support,
                                          Natural bound,
                                          unsigned min_exponent) {
  require_natural(bound, "smooth bound");
  if (bound < 1) throw DomainError("smooth bound must be at least 1");
  std::vector<Natural> out;
  extend_smooth(support.primes(), 0, 1, bound, min_exponent, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

// Every n <= bound whose prime factors all lie in the support, ascending;
// includes 1 (the empty exponent vector).
inline std::vector<Natural> smooth_ascending(const SupportSet& support,
                                             Natural bound) {
  return detail::smooth_values(support, bound, 0);
}

// Every n <= bound with radical(n) exactly the support, i.e. every
// exponent >= 1. For the empty support this is just {1}.
inline std::vector<Natural> full_support_values(const SupportSet& support,
                                                Natural bound) {
  return detail::smooth_values(support, bound, 1);
}

}  // namespace abceq
