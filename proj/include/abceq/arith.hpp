#pragma once

// Exact natural-number arithmetic on the 63-bit range: overflow-checked
// operations, trial-division factorization, radicals, and validated
// abc-triples (c = a+b with 1 <= a < b and gcd(a,b) = 1).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace abceq {

using Natural = std::uint64_t;

// Every arithmetic result must stay in [0, 2^63 - 1]; anything larger fails.
inline constexpr Natural kNaturalMax = (Natural{1} << 63) - 1;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : Error {
  using Error::Error;
};

struct OverflowError : Error {
  using Error::Error;
};

inline Natural checked_add(Natural a, Natural b) {
  if (a > kNaturalMax - b) {
    throw OverflowError("addition exceeds 2^63 - 1: " + std::to_string(a) +
                        " + " + std::to_string(b));
  }
  return a + b;
}

inline Natural checked_mul(Natural a, Natural b) {
  if (a != 0 && b > kNaturalMax / a) {
    throw OverflowError("product exceeds 2^63 - 1: " + std::to_string(a) +
                        " * " + std::to_string(b));
  }
  return a * b;
}

inline Natural checked_pow(Natural base, unsigned exponent) {
  Natural result = 1;
  for (unsigned i = 0; i < exponent; ++i) result = checked_mul(result, base);
  return result;
}

inline void require_natural(Natural n, const char* what) {
  if (n > kNaturalMax) {
    throw DomainError(std::string(what) + " outside the natural range: " +
                      std::to_string(n));
  }
}

// Exact for all inputs; trial division, so only meant for the small
// primes that appear in radicals and support sets.
inline bool is_prime(Natural n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (Natural d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

struct PrimePower {
  Natural prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Canonical factorization: primes strictly increasing, exponents >= 1.
// factorize(1) is the empty product.
using Factorization = std::vector<PrimePower>;

inline Factorization factorize(Natural n) {
  require_natural(n, "factorize argument");
  if (n == 0) throw DomainError("factorize(0) is undefined");
  Factorization factors;
  auto strip = [&](Natural p) {
    if (n % p != 0) return;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    factors.push_back({p, e});
  };
  strip(2);
  strip(3);
  for (Natural d = 5; d * d <= n; d += 6) {
    strip(d);
    strip(d + 2);
  }
  if (n > 1) factors.push_back({n, 1});
  return factors;
}

// Multiplies a factorization back out; overflow-checked.
inline Natural value_of(const Factorization& factors) {
  Natural n = 1;
  for (const auto& [p, e] : factors) n = checked_mul(n, checked_pow(p, e));
  return n;
}

// A strictly increasing set of distinct primes. Doubles as the radical of
// an integer and as the support set of a smooth-number stream.
class PrimeSet {
 public:
  PrimeSet() = default;

  // Validating constructor for user-supplied primes: sorts, then rejects
  // duplicates and non-primes by name.
  static PrimeSet from_values(std::vector<Natural> values) {
    std::sort(values.begin(), values.end());
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (!is_prime(values[i])) {
        throw DomainError(std::to_string(values[i]) + " is not prime");
      }
      if (i > 0 && values[i] == values[i - 1]) {
        throw DomainError("duplicate prime " + std::to_string(values[i]));
      }
    }
    return PrimeSet(std::move(values));
  }

  // For callers that already guarantee sorted distinct primes.
  static PrimeSet from_sorted(std::vector<Natural> primes) {
    return PrimeSet(std::move(primes));
  }

  const std::vector<Natural>& primes() const { return primes_; }
  std::size_t size() const { return primes_.size(); }
  bool empty() const { return primes_.empty(); }

  bool contains(Natural p) const {
    return std::binary_search(primes_.begin(), primes_.end(), p);
  }

  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;

  // Orders by cardinality first, then lexicographically; gives sweep
  // output its canonical small-radicals-first order.
  friend bool operator<(const PrimeSet& lhs, const PrimeSet& rhs) {
    if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
    return lhs.primes_ < rhs.primes_;
  }

 private:
  explicit PrimeSet(std::vector<Natural> primes) : primes_(std::move(primes)) {}

  std::vector<Natural> primes_;
};

using Radical = PrimeSet;
using SupportSet = PrimeSet;

// Union of prime sets; used to merge per-part radicals without ever
// forming products that could overflow.
inline PrimeSet merge(const PrimeSet& x, const PrimeSet& y) {
  std::vector<Natural> out;
  out.reserve(x.size() + y.size());
  std::set_union(x.primes().begin(), x.primes().end(), y.primes().begin(),
                 y.primes().end(), std::back_inserter(out));
  return PrimeSet::from_sorted(std::move(out));
}

inline Radical radical(Natural n) {
  require_natural(n, "radical argument");
  if (n == 0) throw DomainError("radical(0) is undefined");
  std::vector<Natural> primes;
  for (const auto& [p, e] : factorize(n)) primes.push_back(p);
  return PrimeSet::from_sorted(std::move(primes));
}

// Number of distinct prime factors; omega(1) = 0.
inline std::size_t omega(Natural n) { return radical(n).size(); }

// A validated equation c = a+b with 1 <= a < b and gcd(a,b) = 1.
struct AbcTriple {
  Natural a;
  Natural b;
  Natural c;

  friend bool operator==(const AbcTriple&, const AbcTriple&) = default;
  friend auto operator<=>(const AbcTriple&, const AbcTriple&) = default;
};

enum class TripleDefect {
  none,
  zero_a,         // a = 0
  order,          // a >= b
  common_factor,  // gcd(a, b) > 1
  sum_overflow,   // a + b above 2^63 - 1
};

inline TripleDefect triple_defect(Natural a, Natural b) noexcept {
  if (a == 0) return TripleDefect::zero_a;
  if (a >= b) return TripleDefect::order;
  if (std::gcd(a, b) > 1) return TripleDefect::common_factor;
  if (b > kNaturalMax || b > kNaturalMax - a) {
    return TripleDefect::sum_overflow;  // also catches raw inputs past 2^63-1
  }
  return TripleDefect::none;
}

inline AbcTriple make_abc_triple(Natural a, Natural b) {
  switch (triple_defect(a, b)) {
    case TripleDefect::none:
      return AbcTriple{a, b, a + b};
    case TripleDefect::zero_a:
      throw DomainError("a must be at least 1");
    case TripleDefect::order:
      throw DomainError("a < b violated: a = " + std::to_string(a) +
                        ", b = " + std::to_string(b));
    case TripleDefect::common_factor:
      throw DomainError("gcd(a, b) = " +
                        std::to_string(std::gcd(a, b)) + " exceeds 1");
    case TripleDefect::sum_overflow:
      throw OverflowError("a + b exceeds 2^63 - 1");
  }
  throw Error("unreachable");
}

// Radical of a*b*c, computed as a set union of the per-part radicals so
// the product itself is never formed.
inline Radical equation_radical(const AbcTriple& t) {
  return merge(merge(radical(t.a), radical(t.b)), radical(t.c));
}

}  // namespace abceq
