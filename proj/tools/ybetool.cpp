// ybetool: command line front end for the ybetwist library.
//
// Exit codes: 0 success, 2 semantic refusal (not a solution, precondition
// unmet, budget exceeded), 1 I/O or parse failure.

#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ybe/document.hpp"
#include "ybe/enumerate.hpp"
#include "ybe/errors.hpp"
#include "ybe/report.hpp"
#include "ybe/retract.hpp"

namespace {

using ybe::Report;

constexpr int kOk = 0;
constexpr int kIoError = 1;
constexpr int kRefused = 2;

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string list_str(const Report& arr) {
  std::string s = "[";
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) s += ", ";
    s += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
  }
  return s + "]";
}

void print_table(std::ostream& os, const Report& table, const std::string& indent) {
  for (const auto& row : table) {
    os << indent;
    for (std::size_t y = 0; y < row.size(); ++y) {
      if (y) os << ' ';
      os << '(' << row[y][0] << ',' << row[y][1] << ')';
    }
    os << '\n';
  }
}

std::string theorem_str(const Report& th) {
  const bool a = th["a"], b = th["b"], c = th["c"];
  if (a == b && b == c) return std::string("a=b=c=") + yes_no(a);
  return std::string("a=") + yes_no(a) + " b=" + yes_no(b) + " c=" + yes_no(c) + " (DISAGREE)";
}

void emit(const Report& r, bool json_lines, void (*human)(const Report&)) {
  if (json_lines) {
    std::cout << r.dump() << '\n';
  } else {
    human(r);
  }
}

void human_verify(const Report& r) {
  std::cout << "solution: " << yes_no(r["solution"]) << "; involutive: " << yes_no(r["involutive"])
            << "; square-free: " << yes_no(r["squarefree"]) << "; non-degenerate: " << yes_no(r["nondegenerate"])
            << "; bijective: " << yes_no(r["bijective"]) << '\n';
  std::cout << "operator identities: " << yes_no(r["operator_identities"])
            << (r["identities_agree"].get<bool>() ? " (agree with the pointwise check)"
                                                  : " (DISAGREE with the pointwise check)")
            << '\n';
  std::cout << "linear YBE: " << yes_no(r["linear_ybe"]) << '\n';
}

void human_retract(const Report& r) {
  std::cout << "classes:";
  for (const auto& cls : r["classes"]) {
    std::cout << " {";
    for (std::size_t i = 0; i < cls.size(); ++i) std::cout << (i ? "," : "") << cls[i];
    std::cout << '}';
  }
  std::cout << "\nretraction:\n";
  print_table(std::cout, r["retraction"], "  ");
  if (r.contains("levels")) {
    for (std::size_t i = 0; i < r["levels"].size(); ++i) {
      std::cout << "level " << i << ":\n";
      print_table(std::cout, r["levels"][i], "  ");
    }
  }
  std::cout << "tower: " << list_str(r["tower"]) << "; mpl: " << (r["mpl"].is_null() ? "none" : r["mpl"].dump())
            << "; retraction trivial: " << yes_no(r["retraction_trivial"]) << '\n';
  if (!r["permutation_maps"].is_null()) {
    std::cout << "retraction is a permutation solution: f=" << list_str(r["permutation_maps"]["f"])
              << " g=" << list_str(r["permutation_maps"]["g"]) << '\n';
  }
}

void human_qmatrix(const Report& r) {
  std::cout << "field: Q(zeta(" << r["modulus"] << "))\n";
  for (std::size_t i = 0; i < r["basis"].size(); ++i) {
    std::cout << "v" << i + 1 << " = " << list_str(r["basis"][i]) << "  [class " << r["class_of"][i] << "]\n";
  }
  std::cout << "q =\n";
  for (const auto& row : r["qmatrix"]) std::cout << "  " << list_str(row) << '\n';
  std::cout << "relations:\n";
  for (const auto& c : r["commutation"]) {
    std::cout << "  v" << c[0] << " v" << c[1] << " = " << c[2].get<std::string>() << " v" << c[1] << " v" << c[0]
              << '\n';
  }
  std::cout << "zero squares:";
  if (r["zero_squares"].empty()) std::cout << " none";
  for (std::size_t k = 0; k < r["zero_squares"].size(); ++k) {
    std::cout << (k ? ", v" : " v") << r["zero_squares"][k] << "^2";
  }
  std::cout << "\nzero products:";
  if (r["zero_products"].empty()) std::cout << " none";
  for (std::size_t k = 0; k < r["zero_products"].size(); ++k) {
    const auto& p = r["zero_products"][k];
    std::cout << (k ? ", v" : " v") << p[0] << "*v" << p[1];
  }
  std::cout << '\n';
}

void human_lie(const Report& r) {
  std::cout << "dim g: " << r["dim_g"] << "; abelian: " << yes_no(r["abelian"])
            << "; theorem: " << theorem_str(r["theorem"]) << '\n';
  std::cout << "derived series dims: " << list_str(r["derived_dims"]) << '\n';
  std::cout << "[g,g]: dim " << r["dim_derived"] << "; Killing determinant "
            << r["killing_determinant"].get<std::string>() << "; semisimple: "
            << (r["trivially_semisimple"].get<bool>() ? "trivially (zero)" : yes_no(r["derived_is_semisimple"]))
            << '\n';
  std::cout << "rank estimate: " << r["rank_estimate"] << "; type A candidate: "
            << (r["type_a_candidate"].is_null() ? "none" : list_str(r["type_a_candidate"])) << '\n';
  std::cout << "commutation formulas: " << yes_no(r["commutation_formulas"])
            << "; classical YBE: " << yes_no(r["cybe"]) << '\n';
}

std::string experiment_human(const Report& r) {
  std::ostringstream os;
  os << list_str(r["table"]) << " inv=" << yes_no(r["involutive"])
     << " mpl=" << (r["mpl"].is_null() ? "none" : r["mpl"].dump()) << " theorem " << theorem_str(r["theorem"])
     << " dim_g=" << r["dim_g"] << " dim_derived=" << r["dim_derived"] << " semisimple="
     << (r["trivially_semisimple"].get<bool>() ? "trivial" : yes_no(r["derived_is_semisimple"]))
     << " rank=" << r["rank_estimate"]
     << " typeA=" << (r["type_a_candidate"].is_null() ? "none" : list_str(r["type_a_candidate"]))
     << " cybe=" << yes_no(r["cybe"]);
  return os.str();
}

// Loads a document and requires it to be a solution; returns the exit code
// to use on failure, or -1 when the caller should proceed.
int load_solution(const std::string& path, ybe::SolutionDocument& out) {
  try {
    out = ybe::load_document(path);
  } catch (const ybe::InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  }
  if (!ybe::check_ybe(out.set)) {
    std::cerr << "refused: the input is not a solution of the braid relation\n";
    return kRefused;
  }
  return -1;
}

int run_guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const ybe::InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const ybe::Error& e) {
    // IllDefinedRetraction, RetractionNotTrivial, PreconditionError, BudgetExceeded
    std::cerr << "refused: " << e.what() << '\n';
    return kRefused;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of finite set-theoretic solutions of the Yang-Baxter equation"};
  app.require_subcommand(1);

  bool json_lines = false;
  app.add_flag("--json-lines", json_lines, "Emit one JSON object per report line");

  std::string path;
  bool with_tower = false;
  int max_depth = 0;

  auto* verify = app.add_subcommand("verify", "Profile flags and the operator-identity cross-check");
  verify->add_option("file", path, "Solution document")->required();

  auto* retract = app.add_subcommand("retract", "Retraction classes, tower and multipermutation level");
  retract->add_option("file", path, "Solution document")->required();
  retract->add_flag("--tower", with_tower, "Print every level of the retraction tower");
  retract->add_option("--max-depth", max_depth, "Maximum number of retractions (default: n)");

  auto* qmatrix = app.add_subcommand("qmatrix", "Joint eigenbasis and q-matrix (trivial retraction only)");
  qmatrix->add_option("file", path, "Solution document")->required();

  auto* lie = app.add_subcommand("lie", "Lie algebra invariants (non-degenerate solutions)");
  lie->add_option("file", path, "Solution document")->required();

  int n = 0;
  std::string filter;
  bool force = false;
  auto* enumerate = app.add_subcommand("enumerate", "Stream every quadratic set of size n passing a filter");
  enumerate->add_option("n", n, "Size")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--filter", filter, "Comma separated: solution,nondegenerate,involutive,squarefree,bijective");
  enumerate->add_flag("--force", force, "Lift the size budget");

  auto* experiment = app.add_subcommand("experiment", "Lie algebra sweep over non-degenerate solutions of size n");
  experiment->add_option("n", n, "Size")->required()->check(CLI::PositiveNumber);
  experiment->add_option("--filter", filter, "Additional filters, e.g. involutive");
  experiment->add_flag("--force", force, "Allow n > 4");

  for (auto* sub : {verify, retract, qmatrix, lie, enumerate, experiment}) {
    sub->add_flag("--json-lines", json_lines, "Emit one JSON object per report line");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kIoError;
  }

  if (verify->parsed()) {
    return run_guarded([&] {
      ybe::SolutionDocument doc = ybe::load_document(path);
      const Report r = ybe::verify_report(doc.set);
      emit(r, json_lines, human_verify);
      return r["solution"].get<bool>() ? kOk : kRefused;
    });
  }

  if (retract->parsed() || qmatrix->parsed() || lie->parsed()) {
    ybe::SolutionDocument doc{std::nullopt, ybe::QuadraticSet::flip(1)};
    if (int code = load_solution(path, doc); code >= 0) return code;
    return run_guarded([&] {
      if (retract->parsed()) {
        emit(ybe::retract_report(doc.set, with_tower, max_depth), json_lines, human_retract);
      } else if (qmatrix->parsed()) {
        emit(ybe::qmatrix_report(doc.set), json_lines, human_qmatrix);
      } else {
        if (!ybe::is_nondegenerate(doc.set)) {
          throw ybe::PreconditionError("lie: the solution is degenerate");
        }
        emit(ybe::lie_report(doc.set), json_lines, human_lie);
      }
      return kOk;
    });
  }

  ybe::EnumerationBudget budget;
  if (force) {
    budget.max_solution_n = 64;
    budget.max_raw_tables = UINT64_MAX;
    budget.nondegenerate_only_from = 64;
  }

  if (enumerate->parsed()) {
    return run_guarded([&] {
      const auto f = ybe::EnumerationFilter::parse(filter);
      ybe::for_each_quadratic_set(
          n, f, [](const ybe::QuadraticSet& q) { std::cout << ybe::serialize_document(q) << '\n'; }, budget);
      return kOk;
    });
  }

  // experiment
  return run_guarded([&] {
    if (n > 4 && !force) throw ybe::BudgetExceeded("experiment: n > 4 needs --force");
    auto f = ybe::EnumerationFilter::parse(filter);
    f.solution = true;
    f.nondegenerate = true;
    std::size_t total = 0, agree = 0, semisimple = 0, nonabelian = 0, fingerprint_missing = 0, cybe = 0;
    ybe::for_each_quadratic_set(
        n, f,
        [&](const ybe::QuadraticSet& q) {
          const Report line = ybe::experiment_line(q);
          ++total;
          if (line["theorem_agrees"].get<bool>()) ++agree;
          if (line["derived_is_semisimple"].get<bool>()) ++semisimple;
          if (!line["trivially_semisimple"].get<bool>()) ++nonabelian;
          if (line["type_a_candidate"].is_null()) ++fingerprint_missing;
          if (line["cybe"].get<bool>()) ++cybe;
          if (json_lines) {
            std::cout << line.dump() << '\n';
          } else {
            std::cout << experiment_human(line) << '\n';
          }
        },
        budget);
    Report summary;
    summary["summary"] = {{"n", n},
                          {"filter", f.to_string()},
                          {"solutions", total},
                          {"theorem_agree", agree},
                          {"nonabelian_derived", nonabelian},
                          {"derived_semisimple", semisimple},
                          {"type_a_missing", fingerprint_missing},
                          {"cybe_true", cybe}};
    if (json_lines) {
      std::cout << summary.dump() << '\n';
    } else {
      std::cout << "solutions: " << total << "; theorem a=b=c: " << agree << "/" << total
                << "; nonzero [g,g]: " << nonabelian << "; [g,g] semisimple: " << semisimple << "/" << total
                << "; type-A fingerprint missing: " << fingerprint_missing << "; classical YBE holds: " << cybe
                << "/" << total << '\n';
    }
    return kOk;
  });
}
