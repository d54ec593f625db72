// Prints the equation-type table for omega = 2..6, one column per omega,
// the way the library enumerates it.

#include <iomanip>
#include <iostream>

#include "abceq/types.hpp"

int main() {
  using namespace abceq;
  constexpr unsigned kFirst = 2, kLast = 6;
  std::vector<std::vector<EquationType>> columns;
  std::size_t rows = 0;
  for (unsigned w = kFirst; w <= kLast; ++w) {
    columns.push_back(enumerate_types(w));
    rows = std::max(rows, columns.back().size());
  }
  for (unsigned w = kFirst; w <= kLast; ++w) {
    std::cout << std::setw(14) << ("omega=" + std::to_string(w));
  }
  std::cout << "\n";
  for (std::size_t row = 0; row < rows; ++row) {
    for (const auto& column : columns) {
      std::cout << std::setw(14)
                << (row < column.size() ? render_type(column[row]) : "");
    }
    std::cout << "\n";
  }
  for (const auto& column : columns) {
    std::cout << std::setw(14) << column.size();
  }
  std::cout << "  <- counts, each floor((omega+1)^2/4) - 1\n";
  return 0;
}
