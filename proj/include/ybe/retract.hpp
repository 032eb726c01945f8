#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ybe/quadratic_set.hpp"

namespace ybe {

// Partition of X by equality of (L_x, R_x). Classes are numbered 0..k-1 in
// order of their least member.
struct ClassMap {
  int n = 0;
  int k = 0;
  std::vector<int> assign;  // element -> class
  std::vector<int> reps;    // class -> least member

  bool is_identity() const { return k == n; }
  std::vector<int> members(int c) const;
};

ClassMap class_map(const QuadraticSet& q);

// The induced solution on retraction classes. Every representative pair of
// every class pair is checked; a representative-dependent image raises
// IllDefinedRetraction. Requires check_ybe(q).
QuadraticSet retract(const QuadraticSet& q);
QuadraticSet retract(const QuadraticSet& q, const ClassMap& classes);

struct RetractionTower {
  std::vector<QuadraticSet> levels;  // levels[0] is the input
  std::vector<ClassMap> class_maps;  // class_maps[i] partitions levels[i]
  bool stabilized = false;           // the last level is a fixed point of retraction

  std::vector<int> sizes() const;
};

// Iterates retract until a fixed point or `max_depth` retractions; a
// non-positive max_depth means q.size(). IllDefinedRetraction carries the
// level at which it happened.
RetractionTower tower(const QuadraticSet& q, int max_depth = 0);

// Least m with |Ret^m(q)| = 1, or nullopt if the tower stalls above size 1.
std::optional<int> mpl(const QuadraticSet& q);

// True iff Ret(q) is the flip on the classes.
bool is_retraction_trivial(const QuadraticSet& q);

// (f, g) on classes when Ret(q) is a permutation solution
// r(x, y) = (f(y), g(x)).
std::optional<std::pair<Map, Map>> retraction_permutation_maps(const QuadraticSet& q);

}  // namespace ybe
