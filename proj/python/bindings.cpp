#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "ybe/document.hpp"
#include "ybe/enumerate.hpp"
#include "ybe/errors.hpp"
#include "ybe/report.hpp"
#include "ybe/retract.hpp"

namespace py = pybind11;

namespace {

using Table = std::vector<std::vector<std::pair<int, int>>>;

ybe::QuadraticSet from_table(const Table& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<ybe::QuadraticSet::Pair> cells;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) throw ybe::InvalidInput("table must be n x n");
    for (auto [k, l] : row) cells.emplace_back(k - 1, l - 1);
  }
  return ybe::QuadraticSet(n, std::move(cells));
}

Table to_table(const ybe::QuadraticSet& q) {
  Table rows(static_cast<std::size_t>(q.size()));
  for (int x = 0; x < q.size(); ++x)
    for (int y = 0; y < q.size(); ++y) {
      auto [k, l] = q(x, y);
      rows[static_cast<std::size_t>(x)].emplace_back(k + 1, l + 1);
    }
  return rows;
}

// Reports cross the boundary as JSON text; the Python side decodes them.
std::string dump(const ybe::Report& r) { return r.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact invariants of finite set-theoretic Yang-Baxter solutions";

  auto base = py::register_exception<ybe::Error>(m, "Error");
  py::register_exception<ybe::PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<ybe::InvalidInput>(m, "InvalidInput", base.ptr());
  py::register_exception<ybe::BudgetExceeded>(m, "BudgetExceeded", base.ptr());
  py::register_exception<ybe::IllDefinedRetraction>(m, "IllDefinedRetraction", base.ptr());
  py::register_exception<ybe::RetractionNotTrivial>(m, "RetractionNotTrivial", base.ptr());

  py::class_<ybe::QuadraticSet>(m, "QuadraticSet")
      .def(py::init(&from_table), py::arg("table"), "From an n x n table of 1-based (k, l) pairs.")
      .def_static("flip", &ybe::QuadraticSet::flip)
      .def_static("from_document", [](const std::string& text) { return ybe::parse_document(text).set; })
      .def_static("load", [](const std::string& path) { return ybe::load_document(path).set; })
      .def_static("permutation",
                  [](std::vector<int> f, std::vector<int> g) {
                    for (auto& v : f) --v;
                    for (auto& v : g) --v;
                    return ybe::permutation_solution(f, g);
                  })
      .def_property_readonly("n", &ybe::QuadraticSet::size)
      .def("table", &to_table)
      .def("document", [](const ybe::QuadraticSet& q) { return ybe::serialize_document(q); })
      .def("is_solution", &ybe::check_ybe)
      .def("is_involutive", &ybe::is_involutive)
      .def("is_nondegenerate", &ybe::is_nondegenerate)
      .def("is_bijective", &ybe::is_bijective)
      .def("is_squarefree", &ybe::is_squarefree)
      .def("mpl", &ybe::mpl)
      .def("tower_sizes", [](const ybe::QuadraticSet& q) { return ybe::tower(q).sizes(); })
      .def(py::self == py::self)
      .def("__repr__", [](const ybe::QuadraticSet& q) { return "QuadraticSet(" + ybe::serialize_document(q) + ")"; });

  m.def("_verify", [](const ybe::QuadraticSet& q) { return dump(ybe::verify_report(q)); });
  m.def(
      "_retract", [](const ybe::QuadraticSet& q, bool levels) { return dump(ybe::retract_report(q, levels)); },
      py::arg("q"), py::arg("levels") = false);
  m.def("_qmatrix", [](const ybe::QuadraticSet& q) { return dump(ybe::qmatrix_report(q)); });
  m.def("_lie", [](const ybe::QuadraticSet& q) {
    if (!ybe::is_nondegenerate(q)) throw ybe::PreconditionError("lie: the solution is degenerate");
    return dump(ybe::lie_report(q));
  });
  m.def(
      "enumerate",
      [](int n, const std::string& filter) { return ybe::enumerate(n, ybe::EnumerationFilter::parse(filter)); },
      py::arg("n"), py::arg("filter") = "", "Quadratic sets of size n passing the filter, in canonical order.");
}
