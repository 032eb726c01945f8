#pragma once

#include "json.hpp"
#include "ybe/quadratic_set.hpp"

namespace ybe {

// Machine-readable analysis reports. All element indices are 1-based and all
// exact field elements are rendered as strings (see CycNum::to_string).
using Report = nlohmann::ordered_json;

Report table_json(const QuadraticSet& q);  // n x n array of [k, l]
Report flattened_json(const QuadraticSet& q);

// Profile flags and the operator-identity cross-check.
Report verify_report(const QuadraticSet& q);

// Classes, retraction table, tower, mpl, trivial-retraction flag. With
// `with_levels` the table of every tower level is included. Requires a
// solution; IllDefinedRetraction propagates.
Report retract_report(const QuadraticSet& q, bool with_levels = false, int max_depth = 0);

// Joint eigenbasis, q-matrix and degree-2 relations. Throws
// RetractionNotTrivial / PreconditionError on refusal.
Report qmatrix_report(const QuadraticSet& q);

// Lie algebra invariants for a non-degenerate solution.
Report lie_report(const QuadraticSet& q);

// One sweep line: table, flags, theorem triple, Lie dimensions, semisimplicity,
// type-A fingerprint, CYBE outcome. Requires a non-degenerate solution.
Report experiment_line(const QuadraticSet& q);

}  // namespace ybe
