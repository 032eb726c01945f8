#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ybe {

// A self-map of {0..n-1}, stored as its image list.
using Map = std::vector<int>;

bool is_permutation(std::span<const int> map);
Map compose(std::span<const int> f, std::span<const int> g);  // f after g
Map inverse_permutation(std::span<const int> p);
// Multiplicative order of a permutation.
unsigned permutation_order(std::span<const int> p);
// Parses cycle notation over 1-based points, e.g. "(1 2)(3 4)" or "(1,2)".
Map permutation_from_cycles(const std::string& cycles, int n);

// A finite quadratic set (X, r). Elements of X are 0..n-1 internally; every
// serialized or printed form is 1-based.
//
// r(x, y) = (L_x(y), R_y(x)): `left(x, y)` is the first component, and
// `right(y, x)` the second one, so `right` takes the acting element first.
class QuadraticSet {
 public:
  using Pair = std::pair<int, int>;

  // `table[x * n + y]` is r(x, y). Throws InvalidInput on out-of-range entries.
  QuadraticSet(int n, std::vector<Pair> table);

  static QuadraticSet flip(int n);

  int size() const { return n_; }
  const Pair& operator()(int x, int y) const { return table_[static_cast<std::size_t>(x * n_ + y)]; }
  int left(int x, int y) const { return (*this)(x, y).first; }
  int right(int y, int x) const { return (*this)(x, y).second; }

  Map left_action(int x) const;
  Map right_action(int y) const;

  const std::vector<Pair>& table() const { return table_; }
  // r1(0,0), r2(0,0), r1(0,1), ... as 0-based values; the lexicographic key.
  std::vector<int> flattened() const;

  // The same quadratic set with every element x renamed to sigma[x].
  QuadraticSet relabel(std::span<const int> sigma) const;

  friend auto operator<=>(const QuadraticSet& a, const QuadraticSet& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.table_ <=> b.table_;
  }
  friend bool operator==(const QuadraticSet&, const QuadraticSet&) = default;

 private:
  int n_;
  std::vector<Pair> table_;
};

struct SolutionProfile {
  bool is_solution = false;
  bool is_bijective = false;
  bool is_nondegenerate = false;
  bool is_involutive = false;
  bool is_squarefree = false;
};

// Pointwise braid relation r1 r2 r1 == r2 r1 r2 over all n^3 triples.
bool check_ybe(const QuadraticSet& q);
bool is_bijective(const QuadraticSet& q);
bool is_nondegenerate(const QuadraticSet& q);
bool is_involutive(const QuadraticSet& q);
bool is_squarefree(const QuadraticSet& q);
SolutionProfile profile(const QuadraticSet& q);

// r(x, y) = (f(y), g(x)). Throws InvalidInput if f, g are not permutations of
// the same set.
QuadraticSet permutation_solution(std::span<const int> f, std::span<const int> g);

// Least flattened table over all n! relabelings (n <= 6).
QuadraticSet canonicalize(const QuadraticSet& q);

}  // namespace ybe
