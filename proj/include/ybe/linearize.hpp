#pragma once

#include <vector>

#include "ybe/matrix.hpp"
#include "ybe/quadratic_set.hpp"
#include "ybe/retract.hpp"

namespace ybe {

// The class-indexed operators on V = span(X): lbar[c] and rbar[c] are the
// matrices of L_x and R_x for any x in class c, proj[c] the coordinate
// projector onto the span of class c.
struct OperatorFamily {
  int n = 0;
  int k = 0;
  std::vector<RatMatrix> lbar;
  std::vector<RatMatrix> rbar;
  std::vector<RatMatrix> proj;
  ClassMap classes;

  int class_of(int x) const { return classes.assign[static_cast<std::size_t>(x)]; }
};

// Requires check_ybe(q). Verifies the projector identities and, for
// non-degenerate q, that lbar/rbar are permutation matrices and that the
// intertwining relations hold; throws Error on violation.
OperatorFamily build_operators(const QuadraticSet& q);

// Matrix of R on V (x) V; e_x (x) e_y has index x * n + y.
struct RMatrix {
  int n = 0;
  RatMatrix matrix;

  friend bool operator==(const RMatrix&, const RMatrix&) = default;
};

RMatrix build_R_direct(const QuadraticSet& q);
// R = (sum_{c,d} lbar[c] proj[d] (x) rbar[d] proj[c]) o tau.
RMatrix build_R_from_operators(const OperatorFamily& fam);

// The flip tau on V (x) V.
RatMatrix flip_matrix(int n);

// (R (x) I)(I (x) R)(R (x) I) == (I (x) R)(R (x) I)(I (x) R) on V^{(x)3}.
bool check_linear_ybe(const RMatrix& r);

// The three operator identities characterizing solutions, evaluated as
// matrix equalities on End(V) for every element triple, with operators indexed
// by the classes of the computed elements.
bool check_operator_identities(const QuadraticSet& q);

bool is_permutation_matrix(const RatMatrix& m);
bool is_projector(const RatMatrix& m);

}  // namespace ybe
