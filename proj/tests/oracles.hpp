#pragma once

// Brute-force reference implementations used only by the tests. They share
// no code path with the library: sieves instead of trial division, literal
// scans instead of support partitions, gcd filters instead of closed forms.

#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

// radical_table()[n] = product of the distinct primes dividing n, via a
// plain prime sieve; radical_table()[1] = 1.
inline std::vector<u64> radical_table(u64 limit) {
  std::vector<u64> rad(limit + 1, 1);
  for (u64 i = 2; i <= limit; ++i) {
    if (rad[i] == 1) {  // i is prime
      for (u64 m = i; m <= limit; m += i) rad[m] *= i;
    }
  }
  return rad;
}

// Factorization by sieve-free repeated division; independent of the
// library's wheel.
inline std::vector<std::pair<u64, unsigned>> slow_factorize(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// All n <= bound whose prime factors lie in the support, by dividing out
// support primes and checking what is left.
inline std::vector<u64> slow_smooth(const std::vector<u64>& support,
                                    u64 bound) {
  std::vector<u64> out;
  for (u64 n = 1; n <= bound; ++n) {
    u64 rest = n;
    for (u64 p : support) {
      while (rest % p == 0) rest /= p;
    }
    if (rest == 1) out.push_back(n);
  }
  return out;
}

// Same filter, requiring every support prime to divide n.
inline std::vector<u64> slow_full_support(const std::vector<u64>& support,
                                          u64 bound) {
  std::vector<u64> out;
  for (u64 n : slow_smooth(support, bound)) {
    bool all = true;
    for (u64 p : support) all = all && (n % p == 0);
    if (all) out.push_back(n);
  }
  return out;
}

struct Triple {
  u64 a, b, c;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

// The naive all-pairs class oracle: scan every a < b with c = a+b <=
// bound, check the gcd, and compare R(abc) against each requested target
// product. Targets must be products of distinct primes.
inline std::map<u64, std::vector<Triple>> scan_classes(
    const std::set<u64>& target_radicals, u64 bound) {
  const auto rad = radical_table(bound);
  std::map<u64, std::vector<Triple>> hits;
  for (u64 target : target_radicals) hits[target] = {};
  u64 max_target = 0;
  for (u64 target : target_radicals) max_target = std::max(max_target, target);
  for (u64 c = 3; c <= bound; ++c) {
    const u64 rad_c = rad[c];
    for (u64 a = 1; 2 * a < c; ++a) {
      const u64 b = c - a;
      const u64 rab = rad[a] * rad[b];
      if (rab > max_target) continue;
      const u64 rabc = rab * rad_c;
      if (rabc > max_target) continue;
      auto it = hits.find(rabc);
      if (it == hits.end()) continue;
      if (std::gcd(a, b) != 1) continue;
      it->second.push_back({a, b, c});
    }
  }
  return hits;
}

// Classical oracle for two-prime radicals {2, q}: every solution has
// a = 1 with {b, c} = {2^x, q^y}, x, y >= 1, so scanning exponent pairs
// for |2^x - q^y| = 1 is exhaustive.
inline std::vector<Triple> scan_two_prime_class(u64 q, u64 bound) {
  std::vector<Triple> out;
  for (u64 pw2 = 2; pw2 <= bound; pw2 *= 2) {
    for (u64 pwq = q; pwq <= bound; pwq *= q) {
      if (pw2 + 1 == pwq) out.push_back({1, pw2, pwq});
      if (pwq + 1 == pw2) out.push_back({1, pwq, pw2});
      if (pwq > bound / q) break;
    }
    if (pw2 > bound / 2) break;
  }
  std::sort(out.begin(), out.end(),
            [](const Triple& x, const Triple& y) { return x.c < y.c; });
  return out;
}

// First `count` positive integers coprime to a, by direct gcd filtering.
inline std::vector<u64> slow_coprime_sequence(u64 a, u64 count) {
  std::vector<u64> seq;
  for (u64 v = 1; seq.size() < count; ++v) {
    if (std::gcd(a, v) == 1) seq.push_back(v);
  }
  return seq;
}

// Labeled three-way splits of `items` with parts 1 and 2 nonempty,
// enumerated as raw base-3 label words.
inline std::size_t count_label_partitions(std::size_t w) {
  std::size_t total = 0;
  const std::size_t end = [&] {
    std::size_t e = 1;
    for (std::size_t i = 0; i < w; ++i) e *= 3;
    return e;
  }();
  for (std::size_t word = 0; word < end; ++word) {
    bool has_b = false, has_c = false;
    std::size_t rest = word;
    for (std::size_t i = 0; i < w; ++i) {
      const auto digit = rest % 3;
      rest /= 3;
      has_b = has_b || digit == 1;
      has_c = has_c || digit == 2;
    }
    if (has_b && has_c) ++total;
  }
  return total;
}

}  // namespace oracle
