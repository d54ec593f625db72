#pragma once

// The sequence P(a, n) of positive integers coprime to a (1-indexed,
// P(a, 1) = 1), its index shift P(a, n + phi(a)) = a + P(a, n), and the
// rewriting of abc-equations into that recurrence form.

#include <optional>
#include <utility>
#include <vector>

#include "abceq/arith.hpp"

namespace abceq {

inline Natural totient(Natural a) {
  if (a == 0) throw DomainError("totient(0) is undefined");
  Natural phi = 1;
  for (const auto& [p, e] : factorize(a)) {
    phi *= checked_pow(p, e - 1) * (p - 1);
  }
  return phi;
}

// One reduced residue system for a fixed modulus. Immutable after
// construction, so instances can be shared freely across workers.
//
// The residue table is materialized only for moduli up to
// kResidueTableLimit; beyond that, positions come from an
// inclusion-exclusion count over the modulus' prime divisors, which keeps
// memory flat for arbitrarily large moduli.
class CoprimeEnumerator {
 public:
  static constexpr Natural kResidueTableLimit = Natural{1} << 20;

  explicit CoprimeEnumerator(Natural modulus) : modulus_(modulus) {
    if (modulus == 0) throw DomainError("modulus must be at least 1");
    for (const auto& [p, e] : factorize(modulus)) prime_divisors_.push_back(p);
    if (modulus <= kResidueTableLimit) {
      std::vector<char> blocked(modulus + 1, 0);
      for (Natural p : prime_divisors_) {
        for (Natural m = p; m <= modulus; m += p) blocked[m] = 1;
      }
      for (Natural r = 1; r <= modulus; ++r) {
        if (!blocked[r]) residues_.push_back(r);
      }
      totient_ = residues_.size();
    } else {
      totient_ = abceq::totient(modulus);
    }
  }

  Natural modulus() const { return modulus_; }
  Natural totient() const { return totient_; }

  // The residues in [1, modulus] coprime to the modulus, ascending.
  const std::vector<Natural>& residues() const {
    if (residues_.empty() && modulus_ > kResidueTableLimit) {
      throw DomainError("residue table not materialized for modulus " +
                        std::to_string(modulus_));
    }
    return residues_;
  }

  // How many integers in [1, x] are coprime to the modulus.
  Natural coprime_count_upto(Natural x) const {
    const std::size_t k = prime_divisors_.size();
    std::int64_t count = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      Natural divisor = 1;
      int sign = 1;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask & (std::size_t{1} << i)) {
          divisor *= prime_divisors_[i];  // divides modulus, cannot wrap
          sign = -sign;
        }
      }
      count += sign * static_cast<std::int64_t>(x / divisor);
    }
    return static_cast<Natural>(count);
  }

  // P(modulus, n): closed form over whole blocks of length modulus plus
  // the k-th residue of the partial block.
  Natural value_at(Natural n) const {
    if (n == 0) throw DomainError("sequence index must be at least 1");
    const Natural block = (n - 1) / totient_;
    const Natural k = (n - 1) % totient_;
    const Natural r =
        residues_.empty() ? kth_residue_by_count(k) : residues_[k];
    return checked_add(checked_mul(block, modulus_), r);
  }

  // Inverse of value_at: the unique n with P(modulus, n) = v.
  Natural index_of(Natural v) const {
    if (v == 0) throw DomainError("sequence values are positive");
    if (std::gcd(modulus_, v) > 1) {
      throw DomainError(std::to_string(v) + " shares factor " +
                        std::to_string(std::gcd(modulus_, v)) +
                        " with modulus " + std::to_string(modulus_));
    }
    const Natural block = (v - 1) / modulus_;
    const Natural r = v - block * modulus_;
    return block * totient_ + coprime_count_upto(r);  // <= v, cannot wrap
  }

 private:
  // Smallest x with coprime_count_upto(x) = k + 1; binary search on the
  // monotone count.
  Natural kth_residue_by_count(Natural k) const {
    Natural lo = 1, hi = modulus_;
    while (lo < hi) {
      const Natural mid = lo + (hi - lo) / 2;
      if (coprime_count_upto(mid) >= k + 1) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    return lo;
  }

  Natural modulus_;
  Natural totient_ = 0;
  std::vector<Natural> prime_divisors_;
  std::vector<Natural> residues_;
};

// P(a, n), the n-th positive integer coprime to a.
inline Natural nth_coprime(Natural a, Natural n) {
  return CoprimeEnumerator(a).value_at(n);
}

inline Natural coprime_index(Natural a, Natural v) {
  return CoprimeEnumerator(a).index_of(v);
}

// An abc-equation restated as P(n + phi(a)) = a + P(n).
struct RecurrenceForm {
  Natural a;
  Natural n;

  friend bool operator==(const RecurrenceForm&, const RecurrenceForm&) =
      default;
};

inline RecurrenceForm rewrite(const AbcTriple& t) {
  const CoprimeEnumerator seq(t.a);
  const Natural n = seq.index_of(t.b);
  // The index shift is checked, not assumed.
  if (seq.value_at(checked_add(n, seq.totient())) != t.c) {
    throw Error("index shift failed for " + std::to_string(t.a) + " + " +
                std::to_string(t.b) + " = " + std::to_string(t.c));
  }
  return RecurrenceForm{t.a, n};
}

// R(abc) recomputed through the rewritten form R{a P(n) P(n+phi(a))};
// must agree with equation_radical.
inline Radical recurrence_radical(const AbcTriple& t) {
  const CoprimeEnumerator seq(t.a);
  const Natural n = seq.index_of(t.b);
  const Natural pn = seq.value_at(n);
  const Natural pshift = seq.value_at(checked_add(n, seq.totient()));
  return merge(merge(radical(t.a), radical(pn)), radical(pshift));
}

struct RecurrenceCheck {
  bool ok = true;
  Natural checks = 0;
  // First counterexample, when ok is false.
  Natural a = 0;
  Natural n = 0;
  Natural expected = 0;
  Natural actual = 0;
};

// Sweeps P(a, n + phi(a)) = a + P(a, n) over the grid [1, a_max] x
// [1, n_max]. The sequence is injectable so a broken P is reported with
// its witness rather than silently trusted.
template <class ValueAt>
RecurrenceCheck check_recurrence_identity(Natural a_max, Natural n_max,
                                          ValueAt&& value_at) {
  RecurrenceCheck result;
  for (Natural a = 1; a <= a_max; ++a) {
    const Natural phi = totient(a);
    for (Natural n = 1; n <= n_max; ++n) {
      const Natural expected = checked_add(a, value_at(a, n));
      const Natural actual = value_at(a, checked_add(n, phi));
      ++result.checks;
      if (actual != expected) {
        result.ok = false;
        result.a = a;
        result.n = n;
        result.expected = expected;
        result.actual = actual;
        return result;
      }
    }
  }
  return result;
}

inline RecurrenceCheck verify_recurrence(Natural a_max, Natural n_max) {
  std::optional<CoprimeEnumerator> current;
  return check_recurrence_identity(
      a_max, n_max, [&current](Natural a, Natural n) {
        if (!current || current->modulus() != a) current.emplace(a);
        return current->value_at(n);
      });
}

}  // namespace abceq
