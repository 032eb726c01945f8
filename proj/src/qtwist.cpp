#include "ybe/qtwist.hpp"

#include "ybe/errors.hpp"

namespace ybe {

namespace {

Map matrix_to_map(const RatMatrix& m) {
  Map out(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (m(i, j) == 1) out[j] = static_cast<int>(i);
    }
  return out;
}

void normalize_leading(CycVector& v) {
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    const CycNum inv = x.inverse();
    for (auto& y : v) {
      if (!y.is_zero()) y *= inv;
    }
    return;
  }
}

struct Subspace {
  std::vector<CycVector> basis;
  int cls = 0;
  std::vector<unsigned> exponents;
};

void require_commuting(const OperatorFamily& fam) {
  std::vector<std::pair<std::string, const RatMatrix*>> ops;
  for (int c = 0; c < fam.k; ++c) {
    ops.emplace_back("L" + std::to_string(c + 1), &fam.lbar[static_cast<std::size_t>(c)]);
    ops.emplace_back("R" + std::to_string(c + 1), &fam.rbar[static_cast<std::size_t>(c)]);
    ops.emplace_back("p" + std::to_string(c + 1), &fam.proj[static_cast<std::size_t>(c)]);
  }
  for (std::size_t a = 0; a < ops.size(); ++a)
    for (std::size_t b = a + 1; b < ops.size(); ++b) {
      if (!commutator(*ops[a].second, *ops[b].second).is_zero()) {
        throw NotCommuting("operators " + ops[a].first + " and " + ops[b].first + " do not commute");
      }
    }
}

}  // namespace

unsigned family_modulus(const OperatorFamily& fam) {
  unsigned m = 1;
  for (int c = 0; c < fam.k; ++c) {
    for (const RatMatrix* op : {&fam.lbar[static_cast<std::size_t>(c)], &fam.rbar[static_cast<std::size_t>(c)]}) {
      if (!is_permutation_matrix(*op)) {
        throw PreconditionError("family_modulus: operator is not a permutation matrix (degenerate solution)");
      }
      m = lcm_u(m, permutation_order(matrix_to_map(*op)));
    }
  }
  return m;
}

JointEigenbasis joint_eigenbasis(const OperatorFamily& fam) {
  require_commuting(fam);
  const unsigned N = family_modulus(fam);
  const auto n = static_cast<std::size_t>(fam.n);

  std::vector<Subspace> subs;
  for (int c = 0; c < fam.k; ++c) {
    Subspace s;
    s.cls = c;
    for (int x : fam.classes.members(c)) {
      CycVector e(n);
      e[static_cast<std::size_t>(x)] = CycNum(1);
      s.basis.push_back(std::move(e));
    }
    subs.push_back(std::move(s));
  }

  std::vector<CycMatrix> ops;
  for (const auto& m : fam.lbar) ops.push_back(m.cast<CycNum>());
  for (const auto& m : fam.rbar) ops.push_back(m.cast<CycNum>());

  std::vector<CycNum> eigenvalues;
  for (unsigned e = 0; e < N; ++e) eigenvalues.push_back(CycNum::zeta(N, e));

  for (const CycMatrix& A : ops) {
    std::vector<Subspace> next;
    for (const Subspace& s : subs) {
      const CycMatrix B = CycMatrix::from_columns(s.basis, n);
      const CycMatrix AB = A * B;
      std::size_t found = 0;
      for (unsigned e = 0; e < N; ++e) {
        CycMatrix M = AB - B * eigenvalues[e];
        auto coords = kernel(M);
        if (coords.empty()) continue;
        Subspace child;
        child.cls = s.cls;
        child.exponents = s.exponents;
        child.exponents.push_back(e);
        for (const auto& c : coords) child.basis.push_back(B * c);
        found += coords.size();
        next.push_back(std::move(child));
      }
      if (found != s.basis.size()) {
        throw IncompleteSplit("joint_eigenbasis: eigenspaces of dimension " + std::to_string(found) +
                              " in a subspace of dimension " + std::to_string(s.basis.size()));
      }
    }
    subs = std::move(next);
  }

  JointEigenbasis out;
  out.modulus = N;
  const auto k = static_cast<std::size_t>(fam.k);
  for (Subspace& s : subs) {
    for (CycVector& v : s.basis) {
      normalize_leading(v);
      out.vectors.push_back(std::move(v));
      out.class_of.push_back(s.cls);
      out.left_exponents.emplace_back(s.exponents.begin(), s.exponents.begin() + static_cast<long>(k));
      out.right_exponents.emplace_back(s.exponents.begin() + static_cast<long>(k), s.exponents.end());
    }
  }
  if (out.vectors.size() != n) throw IncompleteSplit("joint_eigenbasis: basis does not span V");
  return out;
}

CycNum QTwist::lambda(std::size_t i, std::size_t c) const {
  return CycNum::zeta(modulus, left_exponents.at(i).at(c));
}

CycNum QTwist::mu(std::size_t i, std::size_t c) const {
  return CycNum::zeta(modulus, right_exponents.at(i).at(c));
}

std::vector<std::vector<CycNum>> qmatrix_from_basis(const RMatrix& r, const std::vector<CycVector>& basis) {
  const CycMatrix R = r.matrix.cast<CycNum>();
  const std::size_t n = basis.size();
  std::vector<std::vector<CycNum>> q(n, std::vector<CycNum>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const CycVector image = R * kron(basis[i], basis[j]);
      const CycVector swapped = kron(basis[j], basis[i]);
      std::size_t pivot = 0;
      while (pivot < swapped.size() && swapped[pivot].is_zero()) ++pivot;
      if (pivot == swapped.size()) throw Error("qmatrix_from_basis: zero basis vector");
      const CycNum factor = image[pivot] / swapped[pivot];
      for (std::size_t t = 0; t < swapped.size(); ++t) {
        if (!(image[t] == factor * swapped[t])) {
          throw Error("qmatrix_from_basis: R(v_" + std::to_string(i + 1) + " (x) v_" + std::to_string(j + 1) +
                      ") is not a multiple of the flipped tensor");
        }
      }
      q[i][j] = factor;
    }
  return q;
}

QTwist q_matrix(const QuadraticSet& q) {
  if (!check_ybe(q)) throw PreconditionError("q_matrix: input is not a solution");
  if (!is_nondegenerate(q)) throw PreconditionError("q_matrix: input is degenerate");
  if (!is_retraction_trivial(q)) throw RetractionNotTrivial("q_matrix: the retraction is not the flip solution");

  const OperatorFamily fam = build_operators(q);
  JointEigenbasis eig = joint_eigenbasis(fam);
  const unsigned N = eig.modulus;
  const std::size_t n = eig.vectors.size();

  QTwist tw;
  tw.modulus = N;
  tw.basis = std::move(eig.vectors);
  tw.class_of = std::move(eig.class_of);
  tw.left_exponents = std::move(eig.left_exponents);
  tw.right_exponents = std::move(eig.right_exponents);

  // Each v_i is an eigenvector of every operator with the recorded eigenvalue.
  for (std::size_t i = 0; i < n; ++i) {
    const CycVector& v = tw.basis[i];
    for (std::size_t c = 0; c < static_cast<std::size_t>(fam.k); ++c) {
      auto scaled = [&v](const CycNum& s) {
        CycVector w = v;
        for (auto& x : w) x *= s;
        return w;
      };
      if (fam.lbar[c].cast<CycNum>() * v != scaled(tw.lambda(i, c)) ||
          fam.rbar[c].cast<CycNum>() * v != scaled(tw.mu(i, c)) ||
          fam.proj[c].cast<CycNum>() * v != scaled(CycNum(tw.class_of[i] == static_cast<int>(c) ? 1L : 0L))) {
        throw Error("q_matrix: basis vector " + std::to_string(i + 1) + " is not a joint eigenvector");
      }
    }
  }

  // q_ij = lambda_{j, z(i)} * mu_{i, z(j)}
  tw.qmatrix.assign(n, std::vector<CycNum>(n));
  tw.qexponents.assign(n, std::vector<unsigned>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto zi = static_cast<std::size_t>(tw.class_of[i]);
      const auto zj = static_cast<std::size_t>(tw.class_of[j]);
      const unsigned e = (tw.left_exponents[j][zi] + tw.right_exponents[i][zj]) % N;
      tw.qexponents[i][j] = e;
      tw.qmatrix[i][j] = CycNum::zeta(N, e);
    }

  const auto direct = qmatrix_from_basis(build_R_direct(q), tw.basis);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!(direct[i][j] == tw.qmatrix[i][j])) {
        throw Error("q_matrix: reconstruction R(v_i (x) v_j) = q_ij v_j (x) v_i fails");
      }
      if (!tw.qmatrix[i][j].pow(N).is_one()) throw Error("q_matrix: entry is not an N-th root of unity");
    }
  return tw;
}

QuadraticRelations quadratic_relations(const QTwist& tw, bool involutive) {
  QuadraticRelations rel;
  const std::size_t n = tw.dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (!tw.qmatrix[i][i].is_one()) rel.zero_squares.push_back(static_cast<int>(i));
    for (std::size_t j = i; j < n; ++j) {
      if (j > i) rel.commutation.emplace_back(static_cast<int>(i), static_cast<int>(j), tw.qmatrix[i][j]);
      if (!(tw.qmatrix[i][j] * tw.qmatrix[j][i]).is_one()) {
        rel.zero_products.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  rel.consistent_with_involutivity = rel.zero_products.empty() == involutive;
  return rel;
}

}  // namespace ybe
