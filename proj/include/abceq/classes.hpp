#pragma once

// Bounded-complete enumeration of a radical class: every abc-equation
// c = a+b with exact radical R(abc) = p1...pw and c <= bound. The search
// splits the radical into labeled disjoint supports for a, b, c and walks
// full-support values of each part, so coprimality and the exact radical
// hold by construction.

#include <atomic>
#include <cmath>
#include <cstddef>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_set>
#include <vector>

#include "abceq/arith.hpp"
#include "abceq/smooth.hpp"
#include "abceq/types.hpp"

namespace abceq {

// Disjoint supports with union equal to the target radical. support_a may
// be empty (the a = 1 slot); the b and c parts never are.
struct SupportPartition {
  SupportSet support_a;
  SupportSet support_b;
  SupportSet support_c;

  friend bool operator==(const SupportPartition&, const SupportPartition&) =
      default;
};

// All labeled partitions of the radical primes into (a, b, c) supports;
// count is 3^w - 2*2^w + 1.
inline std::vector<SupportPartition> partitions_of(const Radical& r) {
  if (r.size() < 2) {
    throw DomainError("a radical class needs at least 2 primes");
  }
  const auto& primes = r.primes();
  const std::size_t w = primes.size();
  std::vector<SupportPartition> partitions;
  std::vector<unsigned> label(w, 0);  // 0 -> a, 1 -> b, 2 -> c
  for (;;) {
    std::vector<Natural> part[3];
    for (std::size_t i = 0; i < w; ++i) part[label[i]].push_back(primes[i]);
    if (!part[1].empty() && !part[2].empty()) {
      partitions.push_back(
          SupportPartition{PrimeSet::from_sorted(std::move(part[0])),
                           PrimeSet::from_sorted(std::move(part[1])),
                           PrimeSet::from_sorted(std::move(part[2]))});
    }
    std::size_t i = 0;
    while (i < w && label[i] == 2) label[i++] = 0;
    if (i == w) break;
    ++label[i];
  }
  return partitions;
}

// Solutions contributed by one partition: c runs over full-support values
// of the c part, a over full-support values of the a part with 2a < c,
// and membership of b = c - a is tested against an index of the b part.
inline std::vector<AbcTriple> enumerate_partition(const SupportPartition& part,
                                                  Natural bound) {
  const auto b_values = full_support_values(part.support_b, bound);
  const std::unordered_set<Natural> b_index(b_values.begin(), b_values.end());
  const auto c_values = full_support_values(part.support_c, bound);
  const auto a_values = full_support_values(part.support_a, bound / 2);
  std::vector<AbcTriple> found;
  for (Natural c : c_values) {
    for (Natural a : a_values) {
      if (2 * a >= c) break;  // a_values ascend; a < b is exactly 2a < c
      const Natural b = c - a;
      if (b_index.contains(b)) found.push_back(AbcTriple{a, b, c});
    }
  }
  return found;
}

// The complete class up to the bound: triples sorted by c then a.
struct RadicalClass {
  Radical radical;
  Natural bound = 0;
  std::vector<AbcTriple> triples;
};

namespace detail {

template <class Task>
inline void run_on_pool(std::size_t jobs, unsigned workers, Task&& task) {
  if (workers <= 1 || jobs <= 1) {
    for (std::size_t i = 0; i < jobs; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto drain = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs) return;
      try {
        task(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned n = static_cast<unsigned>(
      std::min<std::size_t>(workers, jobs));
  pool.reserve(n);
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(drain);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace detail

// Exact enumeration of { (a,b,c) : 1 <= a < b, gcd(a,b) = 1, c = a+b <=
// bound, R(abc) = r }. Partitions may be scanned by any number of
// workers; the merged result is canonically sorted, so output is
// identical regardless of scheduling. A radical without the prime 2 is a
// valid empty class (a and b cannot both be even, and two odd summands
// make c even), reported without searching.
inline RadicalClass enumerate_class(const Radical& r, Natural bound,
                                    unsigned workers = 1) {
  if (r.size() < 2) {
    throw DomainError("a radical class needs at least 2 primes");
  }
  require_natural(bound, "class bound");
  if (bound < 3) throw DomainError("class bound must be at least 3");
  RadicalClass cls{r, bound, {}};
  if (!r.contains(2)) return cls;

  const auto partitions = partitions_of(r);
  std::vector<std::vector<AbcTriple>> per_partition(partitions.size());
  detail::run_on_pool(partitions.size(), workers, [&](std::size_t i) {
    per_partition[i] = enumerate_partition(partitions[i], bound);
  });
  for (auto& found : per_partition) {
    cls.triples.insert(cls.triples.end(), found.begin(), found.end());
  }
  std::sort(cls.triples.begin(), cls.triples.end(),
            [](const AbcTriple& x, const AbcTriple& y) {
              return x.c != y.c ? x.c < y.c : x.a < y.a;
            });

  // Each triple belongs to exactly one partition (its actual supports)
  // and must survive full re-validation.
  for (std::size_t i = 0; i < cls.triples.size(); ++i) {
    const AbcTriple& t = cls.triples[i];
    if (i > 0 && t == cls.triples[i - 1]) {
      throw Error("duplicate triple across partitions");
    }
    if (triple_defect(t.a, t.b) != TripleDefect::none ||
        !(equation_radical(t) == r)) {
      throw Error("enumerated triple failed validation");
    }
  }
  return cls;
}

// log c / log R(abc), with the radical product formed from prime
// logarithms so it never overflows. Display metric only.
inline double quality(const AbcTriple& t) {
  const Radical r = equation_radical(t);
  double log_radical = 0.0;
  for (Natural p : r.primes()) {
    log_radical += std::log(static_cast<double>(p));
  }
  return std::log(static_cast<double>(t.c)) / log_radical;
}

// Reporting layer over a class: per-type tallies plus triple counts when
// the bound is halved and quartered (stabilized counts suggest, but never
// prove, that the class has been seen in full).
struct ClassReport {
  struct Row {
    AbcTriple triple;
    EquationType type;
    double quality = 0.0;
  };

  Radical radical;
  Natural bound = 0;
  std::size_t total = 0;
  std::map<EquationType, std::size_t> per_type;
  std::vector<Row> rows;
  std::size_t at_half = 0;
  std::size_t at_quarter = 0;
  std::string note;  // parity diagnostic for radicals without 2
};

inline ClassReport build_report(const RadicalClass& cls) {
  ClassReport report;
  report.radical = cls.radical;
  report.bound = cls.bound;
  report.total = cls.triples.size();
  for (const AbcTriple& t : cls.triples) {
    const EquationType type = type_of(t);
    report.per_type[type] += 1;
    report.rows.push_back({t, type, quality(t)});
    if (t.c <= cls.bound / 2) ++report.at_half;
    if (t.c <= cls.bound / 4) ++report.at_quarter;
  }
  if (!cls.radical.contains(2)) {
    report.note = "empty: radical lacks prime 2";
  }
  return report;
}

// The radicals a sweep will visit: every subset of the pool with size in
// [2, max_omega], smallest radicals first, then lexicographic.
inline std::vector<Radical> sweep_targets(const std::vector<Natural>& pool,
                                          unsigned max_omega) {
  if (max_omega < 2) throw DomainError("max omega must be at least 2");
  const PrimeSet pool_set = PrimeSet::from_values(pool);
  const auto& primes = pool_set.primes();
  std::vector<Radical> targets;
  std::vector<Natural> subset;
  auto choose = [&](auto&& self, std::size_t start) -> void {
    if (subset.size() >= 2) targets.push_back(PrimeSet::from_sorted(subset));
    if (subset.size() == max_omega) return;
    for (std::size_t i = start; i < primes.size(); ++i) {
      subset.push_back(primes[i]);
      self(self, i + 1);
      subset.pop_back();
    }
  };
  choose(choose, 0);
  std::sort(targets.begin(), targets.end());
  return targets;
}

// Classes for every sweep target. Subsets without the prime 2 are
// recorded as empty without searching.
inline std::map<Radical, RadicalClass> sweep(const std::vector<Natural>& pool,
                                             unsigned max_omega, Natural bound,
                                             unsigned workers = 1) {
  std::map<Radical, RadicalClass> classes;
  for (const Radical& r : sweep_targets(pool, max_omega)) {
    if (r.contains(2)) {
      classes.emplace(r, enumerate_class(r, bound, workers));
    } else {
      classes.emplace(r, RadicalClass{r, bound, {}});
    }
  }
  return classes;
}

}  // namespace abceq
