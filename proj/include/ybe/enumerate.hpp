#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ybe/quadratic_set.hpp"

namespace ybe {

struct EnumerationFilter {
  bool solution = false;
  bool nondegenerate = false;
  bool involutive = false;
  bool squarefree = false;
  bool bijective = false;

  bool accepts(const QuadraticSet& q) const;
  // Comma separated subset of {solution, nondegenerate, involutive,
  // squarefree, bijective}; empty string means no filter.
  static EnumerationFilter parse(const std::string& text);
  std::string to_string() const;
};

// Limits that decide which search strategy is admissible.
//  - Without the `solution` filter every raw table is visited, which is only
//    allowed while (n^2)^(n^2) <= max_raw_tables.
//  - With `solution`, sizes up to max_solution_n are searched; at
//    n >= nondegenerate_only_from the `nondegenerate` filter is required.
struct EnumerationBudget {
  std::uint64_t max_raw_tables = 1'000'000;
  int max_solution_n = 4;
  int nondegenerate_only_from = 4;
};

using QuadraticSetVisitor = std::function<void(const QuadraticSet&)>;

// Visits every quadratic set on n points passing `filter`, in increasing
// lexicographic order of the flattened table. Throws BudgetExceeded when the
// request is outside `budget`.
void for_each_quadratic_set(int n, const EnumerationFilter& filter, const QuadraticSetVisitor& visit,
                            const EnumerationBudget& budget = {});

std::vector<QuadraticSet> enumerate(int n, const EnumerationFilter& filter,
                                    const EnumerationBudget& budget = {});

}  // namespace ybe
