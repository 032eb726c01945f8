#include "ybe/enumerate.hpp"

#include <sstream>

#include "ybe/errors.hpp"

namespace ybe {

bool EnumerationFilter::accepts(const QuadraticSet& q) const {
  if (solution && !check_ybe(q)) return false;
  if (nondegenerate && !is_nondegenerate(q)) return false;
  if (involutive && !is_involutive(q)) return false;
  if (squarefree && !is_squarefree(q)) return false;
  if (bijective && !is_bijective(q)) return false;
  return true;
}

EnumerationFilter EnumerationFilter::parse(const std::string& text) {
  EnumerationFilter f;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item == "solution") {
      f.solution = true;
    } else if (item == "nondegenerate") {
      f.nondegenerate = true;
    } else if (item == "involutive") {
      f.involutive = true;
    } else if (item == "squarefree") {
      f.squarefree = true;
    } else if (item == "bijective") {
      f.bijective = true;
    } else {
      throw InvalidInput("unknown filter '" + item + "'");
    }
  }
  return f;
}

std::string EnumerationFilter::to_string() const {
  std::string out;
  auto add = [&out](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += ',';
    out += name;
  };
  add(solution, "solution");
  add(nondegenerate, "nondegenerate");
  add(involutive, "involutive");
  add(squarefree, "squarefree");
  add(bijective, "bijective");
  return out;
}

namespace {

// Depth-first search over the table cells in row-major order. Candidate
// values are tried in lexicographic order, so the leaves come out sorted by
// flattened table. Partial tables are pruned with every constraint that can
// already be decided.
class TableSearch {
 public:
  TableSearch(int n, const EnumerationFilter& filter, const QuadraticSetVisitor& visit)
      : n_(n),
        filter_(filter),
        visit_(visit),
        first_(static_cast<std::size_t>(n * n), -1),
        second_(static_cast<std::size_t>(n * n), -1),
        row_used_(static_cast<std::size_t>(n * n), false),
        col_used_(static_cast<std::size_t>(n * n), false),
        pair_used_(static_cast<std::size_t>(n * n), false) {}

  void run() { descend(0); }

 private:
  int cell(int x, int y) const { return x * n_ + y; }
  bool assigned(int x, int y) const { return first_[static_cast<std::size_t>(cell(x, y))] >= 0; }
  int r1(int x, int y) const { return first_[static_cast<std::size_t>(cell(x, y))]; }
  int r2(int x, int y) const { return second_[static_cast<std::size_t>(cell(x, y))]; }

  void descend(int pos) {
    if (pos == n_ * n_) {
      std::vector<QuadraticSet::Pair> t(static_cast<std::size_t>(n_ * n_));
      for (std::size_t i = 0; i < t.size(); ++i) t[i] = {first_[i], second_[i]};
      QuadraticSet q(n_, std::move(t));
      if (filter_.accepts(q)) visit_(q);
      return;
    }
    const int x = pos / n_;
    const int y = pos % n_;
    for (int a = 0; a < n_; ++a) {
      if (filter_.squarefree && x == y && a != x) continue;
      if (filter_.nondegenerate && row_used_[static_cast<std::size_t>(x * n_ + a)]) continue;
      for (int b = 0; b < n_; ++b) {
        if (filter_.squarefree && x == y && b != y) continue;
        if (filter_.nondegenerate && col_used_[static_cast<std::size_t>(y * n_ + b)]) continue;
        if (filter_.bijective && pair_used_[static_cast<std::size_t>(cell(a, b))]) continue;
        assign(pos, x, y, a, b);
        if (consistent()) descend(pos + 1);
        unassign(pos, x, y, a, b);
      }
    }
  }

  void assign(int pos, int x, int y, int a, int b) {
    first_[static_cast<std::size_t>(pos)] = a;
    second_[static_cast<std::size_t>(pos)] = b;
    row_used_[static_cast<std::size_t>(x * n_ + a)] = true;
    col_used_[static_cast<std::size_t>(y * n_ + b)] = true;
    pair_used_[static_cast<std::size_t>(cell(a, b))] = true;
  }

  void unassign(int pos, int x, int y, int a, int b) {
    first_[static_cast<std::size_t>(pos)] = -1;
    second_[static_cast<std::size_t>(pos)] = -1;
    row_used_[static_cast<std::size_t>(x * n_ + a)] = false;
    col_used_[static_cast<std::size_t>(y * n_ + b)] = false;
    pair_used_[static_cast<std::size_t>(cell(a, b))] = false;
  }

  bool consistent() const {
    if (filter_.involutive && !involution_consistent()) return false;
    if (filter_.solution && !braid_consistent()) return false;
    return true;
  }

  bool involution_consistent() const {
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) {
        if (!assigned(x, y)) continue;
        int a = r1(x, y), b = r2(x, y);
        if (assigned(a, b) && (r1(a, b) != x || r2(a, b) != y)) return false;
      }
    return true;
  }

  // Every triple whose six table lookups are all defined must satisfy the
  // braid relation.
  bool braid_consistent() const {
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) {
        if (!assigned(x, y)) continue;
        const int a = r1(x, y), b = r2(x, y);
        for (int z = 0; z < n_; ++z) {
          if (!assigned(b, z) || !assigned(y, z)) continue;
          const int c = r1(b, z), d = r2(b, z);
          const int u = r1(y, z), v = r2(y, z);
          if (!assigned(x, u)) continue;
          const int s = r1(x, u), t = r2(x, u);
          if (assigned(t, v)) {
            if (r2(t, v) != d) return false;
            if (assigned(a, c) && (r1(a, c) != s || r2(a, c) != r1(t, v))) return false;
          } else if (assigned(a, c) && r1(a, c) != s) {
            return false;
          }
        }
      }
    return true;
  }

  int n_;
  const EnumerationFilter& filter_;
  const QuadraticSetVisitor& visit_;
  std::vector<int> first_;
  std::vector<int> second_;
  std::vector<bool> row_used_;
  std::vector<bool> col_used_;
  std::vector<bool> pair_used_;
};

}  // namespace

void for_each_quadratic_set(int n, const EnumerationFilter& filter, const QuadraticSetVisitor& visit,
                            const EnumerationBudget& budget) {
  if (n < 1) throw InvalidInput("enumerate: n must be positive");
  if (!filter.solution) {
    // (n^2)^(n^2), saturating.
    const std::uint64_t base = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
    std::uint64_t raw = 1;
    for (std::uint64_t i = 0; i < base && raw <= budget.max_raw_tables; ++i) raw *= base;
    if (raw > budget.max_raw_tables) {
      throw BudgetExceeded("enumerate: raw scan of n=" + std::to_string(n) +
                           " tables exceeds the budget; add the 'solution' filter");
    }
  } else {
    if (n > budget.max_solution_n) {
      throw BudgetExceeded("enumerate: n=" + std::to_string(n) + " exceeds the solution search budget (n <= " +
                           std::to_string(budget.max_solution_n) + ")");
    }
    if (n >= budget.nondegenerate_only_from && !filter.nondegenerate) {
      throw BudgetExceeded("enumerate: n=" + std::to_string(n) + " requires the 'nondegenerate' filter");
    }
  }
  TableSearch(n, filter, visit).run();
}

std::vector<QuadraticSet> enumerate(int n, const EnumerationFilter& filter, const EnumerationBudget& budget) {
  std::vector<QuadraticSet> out;
  for_each_quadratic_set(n, filter, [&out](const QuadraticSet& q) { out.push_back(q); }, budget);
  return out;
}

}  // namespace ybe
