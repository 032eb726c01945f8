// Acceptance suite. Prints one PASS/FAIL line per criterion; extra
// "finding:" lines report empirical outcomes that are not pass conditions.
//
//   acceptance            run criteria 1..10
//   acceptance 3 7        run only the listed criteria
//
// Exit status is 0 iff every selected criterion passed.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "ybe/enumerate.hpp"
#include "ybe/errors.hpp"
#include "ybe/lie.hpp"
#include "ybe/linearize.hpp"
#include "ybe/qtwist.hpp"
#include "ybe/report.hpp"
#include "ybe/retract.hpp"

using namespace ybe;
using namespace ybe::testing;

namespace {

// Wall-clock limits per criterion, seconds.
constexpr double kLimitC1 = 1.0;
constexpr double kLimitC2 = 1.0;
constexpr double kLimitC3 = 60.0;
constexpr double kLimitC4 = 60.0;
constexpr double kLimitC5 = 600.0;
constexpr double kLimitC6 = 600.0;
constexpr double kLimitC7 = 300.0;
constexpr double kLimitC8 = 1800.0;
constexpr double kLimitC9 = 600.0;
constexpr double kLimitC10 = 300.0;

constexpr int kRandomTablesC3 = 10000;
constexpr std::uint64_t kSeedC3 = 0x5EEDC3;

struct Outcome {
  bool ok = true;
  std::string detail;
  std::vector<std::string> findings;
};

void require(Outcome& o, bool cond, const std::string& what) {
  if (!cond && o.ok) {
    o.ok = false;
    o.detail = what;
  }
}

std::vector<QuadraticSet> solutions_up_to(int max_n, const std::string& filter) {
  std::vector<QuadraticSet> out;
  for (int n = 1; n <= max_n; ++n) {
    for (auto& q : enumerate(n, EnumerationFilter::parse(filter))) out.push_back(std::move(q));
  }
  return out;
}

std::string show(const QuadraticSet& q) { return flattened_json(q).dump(); }

CycVector vec(std::initializer_list<long> xs) {
  CycVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

bool proportional(const CycVector& a, const CycVector& b) {
  std::optional<CycNum> ratio;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() != b[i].is_zero()) return false;
    if (a[i].is_zero()) continue;
    const CycNum r = a[i] / b[i];
    if (ratio && !(*ratio == r)) return false;
    ratio = r;
  }
  return ratio.has_value();
}

// Maps each expected vector to the index of the proportional computed one.
std::optional<std::vector<std::size_t>> match_basis(const std::vector<CycVector>& expected,
                                                    const std::vector<CycVector>& computed) {
  std::vector<std::size_t> idx;
  for (const auto& e : expected) {
    std::optional<std::size_t> hit;
    for (std::size_t k = 0; k < computed.size(); ++k)
      if (proportional(e, computed[k])) hit = k;
    if (!hit) return std::nullopt;
    idx.push_back(*hit);
  }
  return idx;
}

Outcome c1() {
  Outcome o;
  const QTwist tw = q_matrix(example_s());
  const std::vector<std::vector<CycNum>> expected = {{1, -1}, {-1, 1}};
  require(o, tw.qmatrix == expected, "qmatrix differs from [[1,-1],[-1,1]]");
  require(o, tw.dim() == 2 && proportional(tw.basis[0], vec({1, 1})) && proportional(tw.basis[1], vec({1, -1})),
          "eigenbasis not proportional to (x1+x2, x1-x2)");
  const Report r = qmatrix_report(example_s());
  require(o, r["qmatrix"].dump() == R"([["1","-1"],["-1","1"]])", "report qmatrix " + r["qmatrix"].dump());
  return o;
}

Outcome c2() {
  Outcome o;
  const QTwist tw = q_matrix(example_t());
  // Reference ordering v1 = x1+x2, v2 = x1-x2, v3 = x3+x4, v4 = x3-x4.
  const std::vector<CycVector> reference = {vec({1, 1, 0, 0}), vec({1, -1, 0, 0}), vec({0, 0, 1, 1}),
                                            vec({0, 0, 1, -1})};
  const std::vector<std::vector<long>> expected = {{1, -1, 1, -1}, {-1, 1, -1, 1}, {1, -1, 1, -1}, {1, -1, 1, -1}};
  const auto perm = match_basis(reference, tw.basis);
  require(o, perm.has_value(), "computed basis does not match the reference eigenvectors");
  if (!perm) return o;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      require(o, tw.qmatrix[(*perm)[i]][(*perm)[j]] == CycNum(expected[i][j]),
              "q[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "] differs");
    }
  const auto rel = quadratic_relations(tw, is_involutive(example_t()));
  const int v4 = static_cast<int>((*perm)[3]);
  require(o, std::find(rel.zero_squares.begin(), rel.zero_squares.end(), v4) != rel.zero_squares.end(),
          "v4^2 = 0 not reported");
  std::ostringstream ord;
  for (std::size_t i = 0; i < 4; ++i) ord << (i ? "," : "") << (*perm)[i] + 1;
  o.findings.push_back("reference v1..v4 sit at computed positions " + ord.str());
  return o;
}

Outcome c3() {
  Outcome o;
  int mismatches = 0, solutions = 0;
  for (std::uint64_t i = 0; i < 256; ++i) {
    const QuadraticSet q = table_from_index(2, i);
    if (check_operator_identities(q) != check_ybe(q)) ++mismatches;
  }
  std::mt19937_64 rng(kSeedC3);
  for (int i = 0; i < kRandomTablesC3; ++i) {
    const QuadraticSet q = random_table(3, rng);
    const bool s = check_ybe(q);
    solutions += s;
    if (check_operator_identities(q) != s) ++mismatches;
  }
  // Random tables are almost never solutions, so every enumerated n=3
  // solution is added as a positive sample.
  std::size_t enumerated = 0;
  for (const auto& q : enumerate(3, EnumerationFilter::parse("solution"))) {
    ++enumerated;
    if (!check_operator_identities(q)) ++mismatches;
  }
  require(o, mismatches == 0, std::to_string(mismatches) + " mismatches");
  o.findings.push_back(std::to_string(solutions) + " of the random n=3 tables are solutions; " +
                       std::to_string(enumerated) + " enumerated solutions added");
  return o;
}

Outcome c4() {
  Outcome o;
  std::size_t count = 0;
  for (const auto& q : solutions_up_to(3, "solution")) {
    ++count;
    require(o, build_R_from_operators(build_operators(q)) == build_R_direct(q), "R differs on " + show(q));
  }
  o.findings.push_back(std::to_string(count) + " solutions compared");
  return o;
}

Outcome c5() {
  Outcome o;
  std::size_t count = 0;
  for (int n = 1; n <= 4; ++n) {
    for (const auto& q : enumerate(n, EnumerationFilter::parse("solution,nondegenerate"))) {
      if (!is_retraction_trivial(q)) continue;
      ++count;
      const QTwist tw = q_matrix(q);
      const CycMatrix r = build_R_direct(q).matrix.cast<CycNum>();
      for (std::size_t i = 0; i < tw.dim(); ++i)
        for (std::size_t j = 0; j < tw.dim(); ++j) {
          const CycVector lhs = r * kron(tw.basis[i], tw.basis[j]);
          CycVector rhs = kron(tw.basis[j], tw.basis[i]);
          for (auto& x : rhs) x *= tw.qmatrix[i][j];
          require(o, lhs == rhs, "R(v_i (x) v_j) != q_ij v_j (x) v_i on " + show(q));
          require(o, tw.qmatrix[i][j].is_root_of_unity(), "q_ij not a root of unity on " + show(q));
        }
    }
  }
  o.findings.push_back(std::to_string(count) + " trivial-retraction solutions reconstructed");
  return o;
}

Outcome c6() {
  Outcome o;
  std::size_t count = 0, trivial = 0;
  for (const auto& q : solutions_up_to(3, "solution,nondegenerate")) {
    ++count;
    const TheoremCheck th = theorem_check(q);
    require(o, th.agree(), "a, b, c disagree on " + show(q));
    trivial += th.a;
  }
  o.findings.push_back(std::to_string(count) + " solutions, " + std::to_string(trivial) + " with trivial retraction");
  return o;
}

Outcome c7() {
  Outcome o;
  std::size_t count = 0, failed_nondeg = 0, failed_deg = 0, ill_defined = 0;
  std::optional<QuadraticSet> first;
  for (const auto& q : solutions_up_to(3, "solution")) {
    ++count;
    bool ok = false;
    try {
      ok = check_commutation_formulas(q);
    } catch (const IllDefinedRetraction&) {
      ++ill_defined;
    }
    if (!ok) {
      (is_nondegenerate(q) ? failed_nondeg : failed_deg) += 1;
      if (!first) first = q;
    }
  }
  const std::size_t failed = failed_nondeg + failed_deg;
  require(o, failed == 0,
          std::to_string(failed) + " of " + std::to_string(count) + " solutions fail" +
              (first ? ", first " + show(*first) : std::string()));
  o.findings.push_back("failures: " + std::to_string(failed_nondeg) + " non-degenerate, " +
                       std::to_string(failed_deg) + " degenerate (" + std::to_string(ill_defined) +
                       " with ill-defined retraction)");
  return o;
}

Outcome c8() {
  Outcome o;
  std::size_t count = 0, nonzero = 0, mismatched = 0;
  std::map<std::string, std::size_t> shapes;
  for (const auto& q : solutions_up_to(4, "solution,nondegenerate,involutive")) {
    ++count;
    const SemisimplicityReport rep = semisimplicity_report(q);
    require(o, rep.trivially_semisimple || rep.derived_is_semisimple,
            "[g,g] nonzero with degenerate Killing form on " + show(q));
    if (rep.trivially_semisimple) continue;
    ++nonzero;
    std::string shape = "dim " + std::to_string(rep.dim_derived) + " rank " + std::to_string(rep.rank_estimate);
    if (rep.type_a_candidate) {
      shape += " sl";
      for (int k : *rep.type_a_candidate) shape += " " + std::to_string(k);
    } else {
      ++mismatched;
      shape += " no type-A fingerprint";
      o.findings.push_back("type-A fingerprint missing on " + show(q));
    }
    ++shapes[shape];
  }
  o.findings.push_back(std::to_string(count) + " involutive solutions, " + std::to_string(nonzero) +
                       " with nonzero [g,g], " + std::to_string(mismatched) + " fingerprint mismatches");
  for (const auto& [shape, k] : shapes) o.findings.push_back("[g,g] " + shape + ": " + std::to_string(k));
  return o;
}

std::string cybe_sweep() {
  std::ostringstream os;
  for (const auto& q : solutions_up_to(3, "solution,nondegenerate")) os << show(q) << ' ' << check_cybe(q) << '\n';
  return os.str();
}

Outcome c9() {
  Outcome o;
  const std::string first = cybe_sweep();
  const std::string second = cybe_sweep();
  require(o, first == second, "CYBE report not deterministic");
  const auto lines = std::count(first.begin(), first.end(), '\n');
  std::size_t yes = 0;
  for (std::size_t p = first.find(" 1\n"); p != std::string::npos; p = first.find(" 1\n", p + 1)) ++yes;
  require(o, lines > 0, "empty sweep");
  o.findings.push_back("classical YBE holds on " + std::to_string(yes) + " of " + std::to_string(lines) +
                       " non-degenerate solutions");
  return o;
}

Outcome c10() {
  Outcome o;
  const auto nondeg = solutions_up_to(3, "solution,nondegenerate");
  for (const auto& q : nondeg) {
    const LieAlgebraRep g = lie_closure(lie_generators(q));
    require(o, check_jacobi(g), "Jacobi fails on " + show(q));
    const KillingData k = killing(g);
    require(o, k.gram == k.gram.transpose(), "Killing form not symmetric on " + show(q));
    require(o, check_killing_invariance(g, k), "Killing form not invariant on " + show(q));
    for (const auto& d : derived_series(g)) {
      require(o, check_jacobi(d), "Jacobi fails on a derived algebra of " + show(q));
      require(o, check_killing_invariance(d, killing(d)), "Killing invariance fails on a derived algebra");
    }
  }

  std::mt19937_64 rng(1010);
  std::uniform_int_distribution<int> pick(2, 7);  // |a| >= 2 keeps a - root of unity nonzero
  std::vector<QuadraticSet> twisted;
  for (const auto& q : nondeg)
    if (is_retraction_trivial(q)) twisted.push_back(q);
  twisted.push_back(example_t());
  for (const auto& q : twisted) {
    const QTwist tw = q_matrix(q);
    auto scaled = tw.basis;
    for (auto& v : scaled) {
      const CycNum c = CycNum(pick(rng)) - CycNum::zeta(2 * tw.modulus, pick(rng));
      for (auto& x : v) x *= c;
    }
    require(o, qmatrix_from_basis(build_R_direct(q), scaled) == tw.qmatrix, "qmatrix not scale invariant on " + show(q));
  }

  std::size_t retracted = 0;
  for (const auto& q : solutions_up_to(3, "solution")) {
    std::optional<QuadraticSet> r;
    try {
      r = retract(q);
    } catch (const IllDefinedRetraction&) {
      continue;
    }
    ++retracted;
    require(o, check_ybe(*r), "retraction is not a solution for " + show(q));
    const auto m = mpl(q);
    if (m && *m >= 1) require(o, mpl(*r) == *m - 1, "mpl decrement law fails on " + show(q));
  }
  o.findings.push_back(std::to_string(nondeg.size()) + " Lie algebras, " + std::to_string(twisted.size()) +
                       " q-matrices, " + std::to_string(retracted) + " retractions checked");
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double limit;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "example s q-matrix and eigenbasis", kLimitC1, c1},
      {2, "example t q-matrix and v4^2 = 0", kLimitC2, c2},
      {3, "operator identities equal the braid check", kLimitC3, c3},
      {4, "R from operators equals R direct, n <= 3", kLimitC4, c4},
      {5, "q-twist reconstruction, trivial retraction, n <= 4", kLimitC5, c5},
      {6, "theorem a <=> b <=> c, non-degenerate n <= 3", kLimitC6, c6},
      {7, "commutation formulas, every solution n <= 3", kLimitC7, c7},
      {8, "involutive n <= 4: [g,g] zero or Killing-nondegenerate", kLimitC8, c8},
      {9, "classical YBE sweep completes deterministically", kLimitC9, c9},
      {10, "property suites", kLimitC10, c10},
  };

  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

  int failures = 0;
  for (const auto& c : all) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs > c.limit) {
      o.ok = false;
      o.detail = "time limit " + std::to_string(c.limit) + " s exceeded";
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (o.ok ? "[PASS]" : "[FAIL]") << " C" << c.id << ' ' << c.title << " (" << secs << " s)";
    if (!o.ok) line << ": " << o.detail;
    std::cout << line.str() << '\n';
    for (const auto& f : o.findings) std::cout << "    finding: " << f << '\n';
    failures += !o.ok;
  }
  return failures == 0 ? 0 : 1;
}
