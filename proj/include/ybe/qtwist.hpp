#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ybe/cyclotomic.hpp"
#include "ybe/linearize.hpp"

namespace ybe {

using CycVector = std::vector<CycNum>;

// lcm of the orders of every lbar/rbar permutation: all eigenvalues of the
// family are N-th roots of unity for this N. Requires permutation matrices.
unsigned family_modulus(const OperatorFamily& fam);

// A basis of V made of joint eigenvectors of every lbar[c], rbar[c], proj[c].
// Eigenvalues are recorded as exponents e of zeta_N.
struct JointEigenbasis {
  unsigned modulus = 1;
  std::vector<CycVector> vectors;                    // coordinates in the X basis
  std::vector<int> class_of;                         // the class whose projector fixes v_i
  std::vector<std::vector<unsigned>> left_exponents;   // [i][c]: lbar[c] v_i = zeta^e v_i
  std::vector<std::vector<unsigned>> right_exponents;  // [i][c]: rbar[c] v_i = zeta^e v_i
};

// Iterative eigenspace refinement: start from the class subspaces, then split
// by lbar[0..k-1] and rbar[0..k-1] in that order, eigenvalue exponents
// ascending. Each vector is scaled so its first nonzero coordinate is 1.
// Throws NotCommuting if the family does not commute and IncompleteSplit if an
// operator is not diagonalizable on a subspace.
JointEigenbasis joint_eigenbasis(const OperatorFamily& fam);

struct QTwist {
  unsigned modulus = 1;
  std::vector<CycVector> basis;
  std::vector<std::vector<CycNum>> qmatrix;
  std::vector<std::vector<unsigned>> qexponents;  // q[i][j] = zeta_N^e
  std::vector<int> class_of;
  std::vector<std::vector<unsigned>> left_exponents;
  std::vector<std::vector<unsigned>> right_exponents;

  std::size_t dim() const { return basis.size(); }
  CycNum lambda(std::size_t i, std::size_t c) const;  // eigenvalue of lbar[c] on v_i
  CycNum mu(std::size_t i, std::size_t c) const;      // eigenvalue of rbar[c] on v_i
};

// Requires a non-degenerate solution with trivial retraction; throws
// PreconditionError / RetractionNotTrivial otherwise. Every QTwist invariant
// is checked exactly before returning, including R(v_i (x) v_j) = q_ij v_j (x) v_i.
QTwist q_matrix(const QuadraticSet& q);

// Reads q_ij off R(v_i (x) v_j) = q_ij v_j (x) v_i for an arbitrary basis.
// Throws Error if some image is not proportional to v_j (x) v_i.
std::vector<std::vector<CycNum>> qmatrix_from_basis(const RMatrix& r, const std::vector<CycVector>& basis);

// Degree-2 part of T(V)/(Id - R) in the twisted basis.
struct QuadraticRelations {
  // (i, j, q_ij) with i < j: v_i v_j = q_ij v_j v_i.
  std::vector<std::tuple<int, int, CycNum>> commutation;
  // i with q_ii != 1, hence v_i^2 = 0.
  std::vector<int> zero_squares;
  // (i, j), i <= j, with q_ij q_ji != 1, hence v_i v_j = 0.
  std::vector<std::pair<int, int>> zero_products;
  // zero_products is empty exactly when the caller-supplied involutive flag is set.
  bool consistent_with_involutivity = true;
};

QuadraticRelations quadratic_relations(const QTwist& tw, bool involutive);

}  // namespace ybe
