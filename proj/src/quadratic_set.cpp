#include "ybe/quadratic_set.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "ybe/errors.hpp"

namespace ybe {

bool is_permutation(std::span<const int> map) {
  std::vector<bool> seen(map.size(), false);
  for (int v : map) {
    if (v < 0 || static_cast<std::size_t>(v) >= map.size() || seen[static_cast<std::size_t>(v)]) {
      return false;
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

Map compose(std::span<const int> f, std::span<const int> g) {
  Map out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = f[static_cast<std::size_t>(g[i])];
  return out;
}

Map inverse_permutation(std::span<const int> p) {
  Map inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return inv;
}

unsigned permutation_order(std::span<const int> p) {
  unsigned order = 1;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start]) continue;
    unsigned len = 0;
    for (std::size_t x = start; !seen[x]; x = static_cast<std::size_t>(p[x])) {
      seen[x] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

Map permutation_from_cycles(const std::string& cycles, int n) {
  Map p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<int> cycle;
  bool open = false;
  std::size_t i = 0;
  auto close_cycle = [&] {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      p[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
    }
    cycle.clear();
  };
  while (i < cycles.size()) {
    char c = cycles[i];
    if (c == '(') {
      if (open) throw InvalidInput("nested '(' in cycle notation");
      open = true;
      ++i;
    } else if (c == ')') {
      if (!open) throw InvalidInput("unbalanced ')' in cycle notation");
      open = false;
      close_cycle();
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      int v = 0;
      while (i < cycles.size() && std::isdigit(static_cast<unsigned char>(cycles[i]))) {
        v = v * 10 + (cycles[i] - '0');
        ++i;
      }
      if (!open) throw InvalidInput("point outside of a cycle");
      if (v < 1 || v > n) throw InvalidInput("cycle point " + std::to_string(v) + " out of range 1.." + std::to_string(n));
      if (std::find(cycle.begin(), cycle.end(), v - 1) != cycle.end()) {
        throw InvalidInput("repeated point in cycle");
      }
      cycle.push_back(v - 1);
    } else {
      ++i;  // separators: spaces, commas
    }
  }
  if (open) throw InvalidInput("unterminated cycle");
  if (!is_permutation(p)) throw InvalidInput("cycles are not disjoint");
  return p;
}

QuadraticSet::QuadraticSet(int n, std::vector<Pair> table) : n_(n), table_(std::move(table)) {
  if (n < 1) throw InvalidInput("quadratic set size must be positive");
  if (table_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw InvalidInput("table must have n*n entries");
  }
  for (std::size_t i = 0; i < table_.size(); ++i) {
    auto [a, b] = table_[i];
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw InvalidInput("table entry at (" + std::to_string(i / n + 1) + "," + std::to_string(i % n + 1) +
                         ") out of range");
    }
  }
}

QuadraticSet QuadraticSet::flip(int n) {
  std::vector<Pair> t;
  t.reserve(static_cast<std::size_t>(n * n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t.emplace_back(y, x);
  return QuadraticSet(n, std::move(t));
}

Map QuadraticSet::left_action(int x) const {
  Map m(static_cast<std::size_t>(n_));
  for (int y = 0; y < n_; ++y) m[static_cast<std::size_t>(y)] = left(x, y);
  return m;
}

Map QuadraticSet::right_action(int y) const {
  Map m(static_cast<std::size_t>(n_));
  for (int x = 0; x < n_; ++x) m[static_cast<std::size_t>(x)] = right(y, x);
  return m;
}

std::vector<int> QuadraticSet::flattened() const {
  std::vector<int> f;
  f.reserve(table_.size() * 2);
  for (auto [a, b] : table_) {
    f.push_back(a);
    f.push_back(b);
  }
  return f;
}

QuadraticSet QuadraticSet::relabel(std::span<const int> sigma) const {
  std::vector<Pair> t(table_.size());
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) {
      auto [a, b] = (*this)(x, y);
      t[static_cast<std::size_t>(sigma[x] * n_ + sigma[y])] = {sigma[a], sigma[b]};
    }
  return QuadraticSet(n_, std::move(t));
}

bool check_ybe(const QuadraticSet& q) {
  const int n = q.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto [a, b] = q(x, y);  // r1
      for (int z = 0; z < n; ++z) {
        // r1 r2 r1 (x, y, z)
        auto [c, d] = q(b, z);
        auto [e, f] = q(a, c);
        // r2 r1 r2 (x, y, z)
        auto [u, v] = q(y, z);
        auto [s, t] = q(x, u);
        auto [w, h] = q(t, v);
        if (e != s || f != w || d != h) return false;
      }
    }
  return true;
}

bool is_bijective(const QuadraticSet& q) {
  std::set<QuadraticSet::Pair> image(q.table().begin(), q.table().end());
  return image.size() == q.table().size();
}

bool is_nondegenerate(const QuadraticSet& q) {
  for (int x = 0; x < q.size(); ++x) {
    if (!is_permutation(q.left_action(x)) || !is_permutation(q.right_action(x))) return false;
  }
  return true;
}

bool is_involutive(const QuadraticSet& q) {
  for (int x = 0; x < q.size(); ++x)
    for (int y = 0; y < q.size(); ++y) {
      auto [a, b] = q(x, y);
      if (q(a, b) != QuadraticSet::Pair{x, y}) return false;
    }
  return true;
}

bool is_squarefree(const QuadraticSet& q) {
  for (int x = 0; x < q.size(); ++x) {
    if (q(x, x) != QuadraticSet::Pair{x, x}) return false;
  }
  return true;
}

SolutionProfile profile(const QuadraticSet& q) {
  return {check_ybe(q), is_bijective(q), is_nondegenerate(q), is_involutive(q), is_squarefree(q)};
}

QuadraticSet permutation_solution(std::span<const int> f, std::span<const int> g) {
  if (f.size() != g.size()) throw InvalidInput("permutation_solution: f and g have different sizes");
  if (f.empty()) throw InvalidInput("permutation_solution: empty permutation");
  if (!is_permutation(f) || !is_permutation(g)) {
    throw InvalidInput("permutation_solution: f and g must be permutations");
  }
  const int n = static_cast<int>(f.size());
  std::vector<QuadraticSet::Pair> t;
  t.reserve(static_cast<std::size_t>(n * n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t.emplace_back(f[y], g[x]);
  return QuadraticSet(n, std::move(t));
}

QuadraticSet canonicalize(const QuadraticSet& q) {
  if (q.size() > 6) throw BudgetExceeded("canonicalize supports n <= 6");
  Map sigma(static_cast<std::size_t>(q.size()));
  std::iota(sigma.begin(), sigma.end(), 0);
  QuadraticSet best = q;
  do {
    QuadraticSet c = q.relabel(sigma);
    if (c < best) best = std::move(c);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best;
}

}  // namespace ybe
