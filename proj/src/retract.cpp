#include "ybe/retract.hpp"

#include <map>

#include "ybe/errors.hpp"

namespace ybe {

IllDefinedRetraction::IllDefinedRetraction(int left_class, int right_class, int level)
    : Error("retraction is not well defined: the image of class pair (" + std::to_string(left_class + 1) + "," +
            std::to_string(right_class + 1) + ") at level " + std::to_string(level) +
            " depends on the representatives"),
      left_class_(left_class),
      right_class_(right_class),
      level_(level) {}

std::vector<int> ClassMap::members(int c) const {
  std::vector<int> out;
  for (int x = 0; x < n; ++x) {
    if (assign[static_cast<std::size_t>(x)] == c) out.push_back(x);
  }
  return out;
}

ClassMap class_map(const QuadraticSet& q) {
  ClassMap cm;
  cm.n = q.size();
  cm.assign.assign(static_cast<std::size_t>(cm.n), -1);
  std::map<std::pair<Map, Map>, int> seen;
  for (int x = 0; x < cm.n; ++x) {
    auto key = std::make_pair(q.left_action(x), q.right_action(x));
    auto [it, inserted] = seen.emplace(std::move(key), cm.k);
    if (inserted) {
      cm.reps.push_back(x);
      ++cm.k;
    }
    cm.assign[static_cast<std::size_t>(x)] = it->second;
  }
  return cm;
}

namespace {

void require_solution(const QuadraticSet& q, const char* op) {
  if (!check_ybe(q)) throw PreconditionError(std::string(op) + ": input is not a solution");
}

QuadraticSet retract_unchecked(const QuadraticSet& q, const ClassMap& cm, int level) {
  const int k = cm.k;
  std::vector<QuadraticSet::Pair> t(static_cast<std::size_t>(k * k), {-1, -1});
  for (int x = 0; x < q.size(); ++x)
    for (int y = 0; y < q.size(); ++y) {
      const int cx = cm.assign[static_cast<std::size_t>(x)];
      const int cy = cm.assign[static_cast<std::size_t>(y)];
      auto [a, b] = q(x, y);
      QuadraticSet::Pair img{cm.assign[static_cast<std::size_t>(a)], cm.assign[static_cast<std::size_t>(b)]};
      auto& slot = t[static_cast<std::size_t>(cx * k + cy)];
      if (slot.first < 0) {
        slot = img;
      } else if (slot != img) {
        throw IllDefinedRetraction(cx, cy, level);
      }
    }
  return QuadraticSet(k, std::move(t));
}

}  // namespace

QuadraticSet retract(const QuadraticSet& q, const ClassMap& classes) {
  require_solution(q, "retract");
  QuadraticSet out = retract_unchecked(q, classes, 0);
  if (!check_ybe(out)) throw Error("retract: induced map fails the braid relation");
  return out;
}

QuadraticSet retract(const QuadraticSet& q) { return retract(q, class_map(q)); }

std::vector<int> RetractionTower::sizes() const {
  std::vector<int> s;
  for (const auto& l : levels) s.push_back(l.size());
  return s;
}

RetractionTower tower(const QuadraticSet& q, int max_depth) {
  require_solution(q, "tower");
  if (max_depth <= 0) max_depth = q.size();
  RetractionTower tw;
  tw.levels.push_back(q);
  for (int depth = 0;; ++depth) {
    const QuadraticSet& cur = tw.levels.back();
    ClassMap cm = class_map(cur);
    tw.class_maps.push_back(cm);
    if (cm.is_identity()) {
      tw.stabilized = true;
      break;
    }
    if (depth == max_depth) break;
    QuadraticSet next = retract_unchecked(cur, cm, depth);
    if (!check_ybe(next)) throw Error("tower: induced map fails the braid relation");
    tw.levels.push_back(std::move(next));
  }
  return tw;
}

std::optional<int> mpl(const QuadraticSet& q) {
  RetractionTower tw = tower(q);
  if (tw.levels.back().size() != 1) return std::nullopt;
  return static_cast<int>(tw.levels.size()) - 1;
}

bool is_retraction_trivial(const QuadraticSet& q) {
  QuadraticSet r = retract(q);
  return r == QuadraticSet::flip(r.size());
}

std::optional<std::pair<Map, Map>> retraction_permutation_maps(const QuadraticSet& q) {
  QuadraticSet r = retract(q);
  const int k = r.size();
  Map f = r.left_action(0);
  Map g = r.right_action(0);
  for (int c = 1; c < k; ++c) {
    if (r.left_action(c) != f || r.right_action(c) != g) return std::nullopt;
  }
  if (!is_permutation(f) || !is_permutation(g)) return std::nullopt;
  return std::make_pair(std::move(f), std::move(g));
}

}  // namespace ybe
