#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "support.hpp"
#include "ybe/document.hpp"
#include "ybe/enumerate.hpp"
#include "ybe/errors.hpp"

using namespace ybe;
using namespace ybe::testing;

namespace {

// Braid relation evaluated by composing the three maps on X^3 as functions.
bool braid_oracle(const QuadraticSet& q) {
  const int n = q.size();
  auto r1 = [&](std::array<int, 3> t) {
    auto [a, b] = q(t[0], t[1]);
    return std::array<int, 3>{a, b, t[2]};
  };
  auto r2 = [&](std::array<int, 3> t) {
    auto [a, b] = q(t[1], t[2]);
    return std::array<int, 3>{t[0], a, b};
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const std::array<int, 3> t{x, y, z};
        if (r1(r2(r1(t))) != r2(r1(r2(t)))) return false;
      }
  return true;
}

}  // namespace

TEST(QuadraticSet, ExampleProfiles) {
  const auto s = profile(example_s());
  EXPECT_TRUE(s.is_solution);
  EXPECT_TRUE(s.is_involutive);
  EXPECT_TRUE(s.is_nondegenerate);
  EXPECT_FALSE(s.is_squarefree);

  const auto t = profile(example_t());
  EXPECT_TRUE(t.is_solution);
  EXPECT_FALSE(t.is_involutive);
  EXPECT_TRUE(t.is_nondegenerate);

  for (int n = 1; n <= 4; ++n) {
    const auto f = profile(QuadraticSet::flip(n));
    EXPECT_TRUE(f.is_solution && f.is_involutive && f.is_nondegenerate && f.is_squarefree && f.is_bijective);
  }
}

TEST(QuadraticSet, PermutationSolutionFacts) {
  // r(x,y) = (f(y), g(x)) is a solution iff fg = gf, involutive iff g = f^-1.
  const auto perms = all_permutations(3);
  for (const auto& f : perms)
    for (const auto& g : perms) {
      const QuadraticSet q = permutation_solution(f, g);
      EXPECT_EQ(check_ybe(q), compose(f, g) == compose(g, f));
      EXPECT_EQ(is_involutive(q), g == inverse_permutation(f));
      EXPECT_TRUE(is_nondegenerate(q));
    }
  EXPECT_THROW(permutation_solution(Map{0, 1}, Map{0, 1, 2}), InvalidInput);
  EXPECT_THROW(permutation_solution(Map{0, 0}, Map{0, 1}), InvalidInput);
}

TEST(QuadraticSet, BraidCheckMatchesOracle) {
  for (std::uint64_t i = 0; i < 256; ++i) {
    const QuadraticSet q = table_from_index(2, i);
    EXPECT_EQ(check_ybe(q), braid_oracle(q));
  }
  std::mt19937_64 rng(1);
  for (int i = 0; i < 2000; ++i) {
    const QuadraticSet q = random_table(3, rng);
    EXPECT_EQ(check_ybe(q), braid_oracle(q));
  }
}

TEST(QuadraticSet, RejectsBadTables) {
  EXPECT_THROW(QuadraticSet(2, {{0, 0}, {0, 2}, {0, 0}, {0, 0}}), InvalidInput);
  EXPECT_THROW(QuadraticSet(2, {{0, 0}}), InvalidInput);
}

TEST(QuadraticSet, RelabelPreservesProfile) {
  const QuadraticSet t = example_t();
  for (const auto& sigma : all_permutations(4)) {
    const QuadraticSet u = t.relabel(sigma);
    EXPECT_TRUE(check_ybe(u));
    EXPECT_EQ(canonicalize(u), canonicalize(t));
  }
}

TEST(QuadraticSet, PermutationFromCycles) {
  EXPECT_EQ(permutation_from_cycles("(1,2)(3,4)", 4), (Map{1, 0, 3, 2}));
  EXPECT_EQ(permutation_from_cycles("(1,3,2)", 3), (Map{2, 0, 1}));
  EXPECT_EQ(permutation_from_cycles("", 2), (Map{0, 1}));
  EXPECT_EQ(permutation_order(permutation_from_cycles("(1,2)(3,4,5)", 5)), 6u);
}

TEST(Enumerate, RawScanAtTwo) {
  // Every filter combination against a scan of all 256 tables.
  const std::vector<std::string> filters = {"",         "solution",  "solution,nondegenerate", "solution,involutive",
                                            "bijective", "squarefree", "solution,squarefree,bijective"};
  for (const auto& text : filters) {
    const auto f = EnumerationFilter::parse(text);
    std::vector<QuadraticSet> scan;
    for (std::uint64_t i = 0; i < 256; ++i) {
      const QuadraticSet q = table_from_index(2, i);
      const auto p = profile(q);
      if ((!f.solution || p.is_solution) && (!f.nondegenerate || p.is_nondegenerate) &&
          (!f.involutive || p.is_involutive) && (!f.squarefree || p.is_squarefree) &&
          (!f.bijective || p.is_bijective)) {
        scan.push_back(q);
      }
    }
    EXPECT_EQ(enumerate(2, f), scan) << text;
  }
}

TEST(Enumerate, NondegenerateAtThreeMatchesPermutationFamilies) {
  const auto perms = all_permutations(3);
  std::vector<QuadraticSet> brute;
  for (const auto& l0 : perms)
    for (const auto& l1 : perms)
      for (const auto& l2 : perms) {
        const std::array<const Map*, 3> l{&l0, &l1, &l2};
        for (const auto& r0 : perms)
          for (const auto& r1 : perms)
            for (const auto& r2 : perms) {
              const std::array<const Map*, 3> r{&r0, &r1, &r2};
              std::vector<QuadraticSet::Pair> t;
              for (int x = 0; x < 3; ++x)
                for (int y = 0; y < 3; ++y) t.emplace_back((*l[x])[y], (*r[y])[x]);
              QuadraticSet q(3, t);
              if (check_ybe(q)) brute.push_back(std::move(q));
            }
      }
  std::sort(brute.begin(), brute.end());
  EXPECT_EQ(enumerate(3, EnumerationFilter::parse("solution,nondegenerate")), brute);
}

TEST(Enumerate, OrderAndCounts) {
  EXPECT_EQ(enumerate(1, {}).size(), 1u);
  const auto sols = enumerate(3, EnumerationFilter::parse("solution"));
  for (std::size_t i = 1; i < sols.size(); ++i) EXPECT_LT(sols[i - 1].flattened(), sols[i].flattened());
  for (const auto& q : sols) EXPECT_TRUE(check_ybe(q));
  EXPECT_EQ(enumerate(3, EnumerationFilter::parse("solution")), sols);  // deterministic
  const auto inv = enumerate(3, EnumerationFilter::parse("solution,involutive"));
  std::vector<QuadraticSet> expected;
  std::copy_if(sols.begin(), sols.end(), std::back_inserter(expected), [](const auto& q) { return is_involutive(q); });
  EXPECT_EQ(inv, expected);
}

TEST(Enumerate, Budget) {
  EXPECT_THROW(enumerate(3, {}), BudgetExceeded);
  EXPECT_THROW(enumerate(4, EnumerationFilter::parse("solution")), BudgetExceeded);
  EXPECT_THROW(enumerate(5, EnumerationFilter::parse("solution,nondegenerate")), BudgetExceeded);
  EXPECT_THROW(EnumerationFilter::parse("solution,bogus"), InvalidInput);
}

TEST(Document, RoundTrip) {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& q : enumerate(n, EnumerationFilter::parse("solution"))) {
      const auto doc = parse_document(serialize_document(q));
      ASSERT_EQ(doc.set, q);
    }
  }
  const auto named = parse_document(serialize_document(example_s(), "s"));
  EXPECT_EQ(named.name, "s");
}

TEST(Document, PermutationForm) {
  const auto doc = parse_document(R"({"n": 4, "permutation": {"f": [2,1,4,3], "g": [2,1,3,4]}})");
  EXPECT_EQ(doc.set, example_t());
  EXPECT_FALSE(doc.name.has_value());
}

namespace {

std::string parse_error(const std::string& text) {
  try {
    parse_document(text);
  } catch (const InvalidInput& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Document, ErrorsNameFieldAndIndex) {
  EXPECT_NE(parse_error(R"({"n": 2, "r": [[[1,1],[1,2]],[[2,1],[0,1]]]})").find("r[2][2][1]"), std::string::npos);
  EXPECT_NE(parse_error(R"({"n": 2, "r": [[[1,1],[1,2]],[[2,1],[1,3]]]})").find("out of range 1..2"),
            std::string::npos);
  EXPECT_NE(parse_error(R"({"n": 2, "r": [[[1,1],[1,2]],[[2,1]]]})").find("r[2]"), std::string::npos);
  EXPECT_NE(parse_error(R"({"r": []})").find("'n'"), std::string::npos);
  EXPECT_NE(parse_error(R"({"n": 2})").find("exactly one"), std::string::npos);
  EXPECT_NE(parse_error(R"({"n": 2, "permutation": {"f": [1,1], "g": [1,2]}})").find("permutation.f"),
            std::string::npos);
  EXPECT_NE(parse_error(R"({"n": 2, "permutation": {"f": [1,2]}})").find("permutation.g"), std::string::npos);
  EXPECT_NE(parse_error(R"({"n": 2, "r": [[[1,1],[1,2]],[[2,1],[1,1]])").find("malformed"), std::string::npos);
  EXPECT_THROW(load_document("/nonexistent/doc.json"), InvalidInput);
}
