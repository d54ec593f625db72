// Enumerates a radical class and lists its triples by descending quality
// q = log c / log R(abc); q > 1 marks the interesting ones.

#include <algorithm>
#include <cstdio>
#include <cstdlib>

#include "abceq/abceq.hpp"

int main(int argc, char** argv) {
  using namespace abceq;
  std::vector<Natural> primes{2, 3, 5, 7};
  Natural bound = 10000000;
  if (argc > 1) bound = std::strtoull(argv[1], nullptr, 10);
  bound = std::min(std::max(bound, Natural{3}), kNaturalMax);

  const auto report = build_report(
      enumerate_class(PrimeSet::from_values(primes), bound, 4));
  auto rows = report.rows;
  std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
    return x.quality > y.quality;
  });

  std::printf("C_{2.3.5.7} up to %llu: %zu equations\n",
              static_cast<unsigned long long>(bound), rows.size());
  const std::size_t shown = std::min<std::size_t>(rows.size(), 10);
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& row = rows[i];
    std::printf("%10llu + %10llu = %10llu   %-12s q=%.4f\n",
                static_cast<unsigned long long>(row.triple.a),
                static_cast<unsigned long long>(row.triple.b),
                static_cast<unsigned long long>(row.triple.c),
                render_type(row.type).c_str(), row.quality);
  }
  return 0;
}
