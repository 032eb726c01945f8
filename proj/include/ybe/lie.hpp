#pragma once

#include <optional>
#include <vector>

#include "ybe/linearize.hpp"
#include "ybe/matrix.hpp"
#include "ybe/quadratic_set.hpp"

namespace ybe {

// A subspace of Q^d kept in reduced row-echelon form. Rows are sorted by
// pivot column; coordinates of a member v in this basis are v[pivot_i].
class EchelonSpan {
 public:
  explicit EchelonSpan(std::size_t ambient) : ambient_(ambient) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Adds v to the span; returns false if it was already a member.
  bool add(std::vector<Rational> v);
  bool contains(const std::vector<Rational>& v) const;
  std::optional<std::vector<Rational>> coordinates(const std::vector<Rational>& v) const;

 private:
  std::vector<Rational> residual(std::vector<Rational> v) const;

  std::size_t ambient_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

std::vector<Rational> flatten(const RatMatrix& m);
RatMatrix unflatten(const std::vector<Rational>& v, std::size_t n);

// A Lie subalgebra of gl_n(Q) with an echelon basis and structure constants
// [b_i, b_j] = sum_k structure[i][j][k] b_k.
struct LieAlgebraRep {
  int n = 0;  // matrices are n x n
  std::vector<RatMatrix> basis;
  std::vector<std::vector<std::vector<Rational>>> structure;
  std::vector<RatMatrix> generators;

  std::size_t dim() const { return basis.size(); }
  // Coordinates of m in `basis`, or nullopt if m is outside the algebra.
  std::optional<std::vector<Rational>> coordinates(const RatMatrix& m) const;
};

// The 2k^2 operators lbar[c] proj[d] followed by rbar[c] proj[d], c-major.
std::vector<RatMatrix> lie_generators(const QuadraticSet& q);

// Saturates span(gens) under brackets. `n` is only consulted when gens is empty.
LieAlgebraRep lie_closure(const std::vector<RatMatrix>& gens, int n = 0);

// Builds the algebra spanned by `elements`, which must already be closed
// under brackets (throws Error otherwise).
LieAlgebraRep span_algebra(const std::vector<RatMatrix>& elements, int n);

bool is_abelian(const LieAlgebraRep& g);
bool check_antisymmetry(const LieAlgebraRep& g);
bool check_jacobi(const LieAlgebraRep& g);

LieAlgebraRep derived_algebra(const LieAlgebraRep& g);
// g, [g,g], [[g,g],[g,g]], ... ending with the first term equal to its
// predecessor's dimension or with the zero algebra.
std::vector<LieAlgebraRep> derived_series(const LieAlgebraRep& g);

struct KillingData {
  RatMatrix gram;
  Rational determinant;
  bool nondegenerate = true;
};

// K(b_i, b_j) = trace(ad b_i ad b_j) from structure constants.
KillingData killing(const LieAlgebraRep& g);
// K([b_i,b_j], b_k) == K(b_i, [b_j,b_k]) for all basis triples, and symmetry.
bool check_killing_invariance(const LieAlgebraRep& g, const KillingData& k);

// Dimension of the centralizer of sum_i coeffs[i] b_i.
std::size_t centralizer_dimension(const LieAlgebraRep& g, const std::vector<Rational>& coeffs);

// Smallest (lexicographic, ascending parts) multiset {k_i >= 2} with
// sum(k_i^2 - 1) == dim and sum(k_i - 1) == rank: the dimension/rank
// fingerprint of sl_{k_1} x ... x sl_{k_m}. Heuristic only.
std::optional<std::vector<int>> type_a_fingerprint(std::size_t dim, std::size_t rank);

struct SemisimplicityReport {
  std::size_t dim_g = 0;
  std::size_t dim_derived = 0;
  bool derived_is_semisimple = false;
  bool trivially_semisimple = false;  // [g,g] = 0
  Rational killing_determinant;       // of [g,g]
  std::size_t rank_estimate = 0;
  std::optional<std::vector<int>> type_a_candidate;
  std::vector<std::size_t> derived_dims;  // dims of the derived series of g
};

SemisimplicityReport analyze_semisimplicity(const LieAlgebraRep& g);
// Requires a non-degenerate solution.
SemisimplicityReport semisimplicity_report(const QuadraticSet& q);

struct TheoremCheck {
  bool a = false;  // Ret(X,r) is the flip
  bool b = false;  // span{lbar, rbar, proj} is abelian
  bool c = false;  // g(X,r) is abelian

  bool agree() const { return a == b && b == c; }
};

// Requires a non-degenerate solution.
TheoremCheck theorem_check(const QuadraticSet& q);

// The three bracket formulas for [Lp, Lp], [Rp, Rp], [Lp, Rp], evaluated
// for every element quadruple (x, y, z, w). Requires check_ybe(q).
bool check_commutation_formulas(const QuadraticSet& q);

// Classical YBE for rhat = sum_{c,d} lbar[c] proj[d] (x) rbar[d] proj[c] in
// its leg embeddings on V^{(x)3}. Requires check_ybe(q).
bool check_cybe(const QuadraticSet& q);

}  // namespace ybe
