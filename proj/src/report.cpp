#include "ybe/report.hpp"

#include "ybe/lie.hpp"
#include "ybe/linearize.hpp"
#include "ybe/qtwist.hpp"
#include "ybe/retract.hpp"

namespace ybe {

namespace {

Report one_based(const Map& m) {
  Report a = Report::array();
  for (int v : m) a.push_back(v + 1);
  return a;
}

Report optional_parts(const std::optional<std::vector<int>>& parts) {
  if (!parts) return nullptr;
  Report a = Report::array();
  for (int k : *parts) a.push_back(k);
  return a;
}

}  // namespace

Report table_json(const QuadraticSet& q) {
  Report rows = Report::array();
  for (int x = 0; x < q.size(); ++x) {
    Report row = Report::array();
    for (int y = 0; y < q.size(); ++y) {
      auto [a, b] = q(x, y);
      row.push_back(Report::array({a + 1, b + 1}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Report flattened_json(const QuadraticSet& q) {
  Report a = Report::array();
  for (int v : q.flattened()) a.push_back(v + 1);
  return a;
}

Report verify_report(const QuadraticSet& q) {
  const SolutionProfile p = profile(q);
  Report r;
  r["command"] = "verify";
  r["n"] = q.size();
  r["solution"] = p.is_solution;
  r["involutive"] = p.is_involutive;
  r["squarefree"] = p.is_squarefree;
  r["nondegenerate"] = p.is_nondegenerate;
  r["bijective"] = p.is_bijective;
  const bool identities = check_operator_identities(q);
  r["operator_identities"] = identities;
  r["identities_agree"] = identities == p.is_solution;
  r["linear_ybe"] = check_linear_ybe(build_R_direct(q));
  return r;
}

Report retract_report(const QuadraticSet& q, bool with_levels, int max_depth) {
  const RetractionTower tw = tower(q, max_depth);
  Report r;
  r["command"] = "retract";
  r["n"] = q.size();

  const ClassMap& cm = tw.class_maps.front();
  Report classes = Report::array();
  for (int c = 0; c < cm.k; ++c) {
    Report members = Report::array();
    for (int x : cm.members(c)) members.push_back(x + 1);
    classes.push_back(std::move(members));
  }
  r["classes"] = std::move(classes);
  const QuadraticSet& first = tw.levels.size() > 1 ? tw.levels[1] : tw.levels[0];
  r["retraction"] = table_json(first);
  r["tower"] = tw.sizes();
  r["stabilized"] = tw.stabilized;
  if (tw.levels.back().size() == 1) {
    r["mpl"] = static_cast<int>(tw.levels.size()) - 1;
  } else {
    r["mpl"] = nullptr;
  }
  r["retraction_trivial"] = first == QuadraticSet::flip(first.size());
  if (auto fg = retraction_permutation_maps(q)) {
    r["permutation_maps"] = {{"f", one_based(fg->first)}, {"g", one_based(fg->second)}};
  } else {
    r["permutation_maps"] = nullptr;
  }
  if (with_levels) {
    Report levels = Report::array();
    for (const auto& l : tw.levels) levels.push_back(table_json(l));
    r["levels"] = std::move(levels);
  }
  return r;
}

Report qmatrix_report(const QuadraticSet& q) {
  const QTwist tw = q_matrix(q);
  const QuadraticRelations rel = quadratic_relations(tw, is_involutive(q));
  Report r;
  r["command"] = "qmatrix";
  r["n"] = q.size();
  r["modulus"] = tw.modulus;
  Report basis = Report::array();
  for (const auto& v : tw.basis) {
    Report coords = Report::array();
    for (const auto& x : v) coords.push_back(x.to_string());
    basis.push_back(std::move(coords));
  }
  r["basis"] = std::move(basis);
  Report cls = Report::array();
  for (int c : tw.class_of) cls.push_back(c + 1);
  r["class_of"] = std::move(cls);
  Report qm = Report::array();
  for (const auto& row : tw.qmatrix) {
    Report entries = Report::array();
    for (const auto& x : row) entries.push_back(x.to_string());
    qm.push_back(std::move(entries));
  }
  r["qmatrix"] = std::move(qm);
  r["qexponents"] = tw.qexponents;
  Report comm = Report::array();
  for (const auto& [i, j, v] : rel.commutation) comm.push_back(Report::array({i + 1, j + 1, v.to_string()}));
  r["commutation"] = std::move(comm);
  Report zs = Report::array();
  for (int i : rel.zero_squares) zs.push_back(i + 1);
  r["zero_squares"] = std::move(zs);
  Report zp = Report::array();
  for (const auto& [i, j] : rel.zero_products) zp.push_back(Report::array({i + 1, j + 1}));
  r["zero_products"] = std::move(zp);
  return r;
}

namespace {

void fill_lie_fields(Report& r, const QuadraticSet& q) {
  const SemisimplicityReport ss = semisimplicity_report(q);
  const TheoremCheck th = theorem_check(q);
  r["dim_g"] = ss.dim_g;
  r["abelian"] = th.c;
  r["derived_dims"] = ss.derived_dims;
  r["dim_derived"] = ss.dim_derived;
  r["killing_determinant"] = to_string(ss.killing_determinant);
  r["derived_is_semisimple"] = ss.derived_is_semisimple;
  r["trivially_semisimple"] = ss.trivially_semisimple;
  r["rank_estimate"] = ss.rank_estimate;
  r["type_a_candidate"] = optional_parts(ss.type_a_candidate);
  r["theorem"] = {{"a", th.a}, {"b", th.b}, {"c", th.c}};
  r["theorem_agrees"] = th.agree();
}

}  // namespace

Report lie_report(const QuadraticSet& q) {
  Report r;
  r["command"] = "lie";
  r["n"] = q.size();
  fill_lie_fields(r, q);
  r["commutation_formulas"] = check_commutation_formulas(q);
  r["cybe"] = check_cybe(q);
  return r;
}

Report experiment_line(const QuadraticSet& q) {
  Report r;
  r["table"] = flattened_json(q);
  r["involutive"] = is_involutive(q);
  r["squarefree"] = is_squarefree(q);
  const auto level = mpl(q);
  if (level) {
    r["mpl"] = *level;
  } else {
    r["mpl"] = nullptr;
  }
  fill_lie_fields(r, q);
  r["cybe"] = check_cybe(q);
  return r;
}

}  // namespace ybe
