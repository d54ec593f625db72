#pragma once

// Type system for abc-equations: the canonical triple of distinct-prime
// counts (omega(c), omega(a), omega(b)), its enumeration for a fixed
// total omega, and the closed-form count floor((omega+1)^2/4) - 1.

#include <string>
#include <vector>

#include "abceq/arith.hpp"

namespace abceq {

// kappa = omega(c); {lo, hi} = {omega(a), omega(b)} stored smaller-first.
// The last two slots are unordered: which summand contributes which count
// is a display artifact, so (p,pp,p) and (p,p,pp) are the same type.
struct EquationType {
  unsigned kappa;
  unsigned lo;
  unsigned hi;

  friend bool operator==(const EquationType&, const EquationType&) = default;
  // Member order (kappa, lo, hi) makes the default comparison the
  // canonical table order: kappa ascending, then lo ascending.
  friend auto operator<=>(const EquationType&, const EquationType&) = default;
};

inline EquationType type_of(const AbcTriple& t) {
  auto wa = static_cast<unsigned>(omega(t.a));
  auto wb = static_cast<unsigned>(omega(t.b));
  if (wa > wb) std::swap(wa, wb);
  return EquationType{static_cast<unsigned>(omega(t.c)), wa, wb};
}

// All types with kappa + lo + hi = total, in canonical table order.
inline std::vector<EquationType> enumerate_types(unsigned total) {
  if (total < 2) {
    throw DomainError("no abc-equation has fewer than 2 radical primes");
  }
  std::vector<EquationType> types;
  for (unsigned kappa = 1; kappa + 1 <= total; ++kappa) {
    const unsigned rest = total - kappa;  // = lo + hi, hi >= max(lo, 1)
    for (unsigned lo = 0; 2 * lo <= rest && rest - lo >= 1; ++lo) {
      types.push_back(EquationType{kappa, lo, rest - lo});
    }
  }
  return types;
}

// Closed form for |enumerate_types(total)|.
inline Natural count_types(unsigned total) {
  if (total < 2) {
    throw DomainError("no abc-equation has fewer than 2 radical primes");
  }
  const Natural w = total;
  return (w + 1) * (w + 1) / 4 - 1;
}

// "(pp,1,p)" notation: each count k becomes k letters p; a zero lo slot
// (the a = 1 case) is printed as the literal 1.
inline std::string render_type(const EquationType& t) {
  auto run = [](unsigned k) { return std::string(k, 'p'); };
  std::string out = "(" + run(t.kappa) + ",";
  out += t.lo == 0 ? "1" : run(t.lo);
  out += "," + run(t.hi) + ")";
  return out;
}

}  // namespace abceq
