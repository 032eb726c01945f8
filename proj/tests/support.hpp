#pragma once

#include <random>
#include <vector>

#include "ybe/quadratic_set.hpp"

namespace ybe::testing {

inline QuadraticSet example_s() { return QuadraticSet(2, {{1, 1}, {0, 1}, {1, 0}, {0, 0}}); }

inline QuadraticSet example_t() {
  return permutation_solution(permutation_from_cycles("(1,2)(3,4)", 4), permutation_from_cycles("(1,2)", 4));
}

// n = 4, mpl 2, retraction is the permutation solution f = g = (1,2).
inline QuadraticSet nontrivial_retraction_example() {
  const std::vector<std::pair<int, int>> one_based = {{2, 2}, {1, 2}, {4, 2}, {3, 2}, {3, 4}, {4, 4}, {1, 4}, {2, 4},
                                                      {3, 1}, {4, 1}, {1, 1}, {2, 1}, {2, 3}, {1, 3}, {4, 3}, {3, 3}};
  std::vector<QuadraticSet::Pair> t;
  for (auto [a, b] : one_based) t.emplace_back(a - 1, b - 1);
  return QuadraticSet(4, t);
}

// Degenerate solution whose retraction depends on representatives: classes
// {1,2}, {3} and r(3,2) = (1,2) while r(3,1) = (1,1).
inline QuadraticSet ill_defined_example() {
  std::vector<QuadraticSet::Pair> t(9, {0, 0});
  t[2 * 3 + 1] = {0, 1};
  return QuadraticSet(3, t);
}

// Table decoded from a mixed-radix index: cell i holds (d / n, d % n) with d
// the i-th base-n^2 digit.
inline QuadraticSet table_from_index(int n, std::uint64_t index) {
  const int cells = n * n;
  std::vector<QuadraticSet::Pair> t(static_cast<std::size_t>(cells));
  for (int i = cells - 1; i >= 0; --i) {
    const int d = static_cast<int>(index % static_cast<std::uint64_t>(cells));
    index /= static_cast<std::uint64_t>(cells);
    t[static_cast<std::size_t>(i)] = {d / n, d % n};
  }
  return QuadraticSet(n, t);
}

inline QuadraticSet random_table(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<QuadraticSet::Pair> t;
  for (int i = 0; i < n * n; ++i) t.emplace_back(pick(rng), pick(rng));
  return QuadraticSet(n, t);
}

// All permutations of 0..n-1 in lexicographic order.
inline std::vector<Map> all_permutations(int n) {
  Map p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  std::vector<Map> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace ybe::testing
