#include "ybe/linearize.hpp"

#include "ybe/errors.hpp"

namespace ybe {

namespace {

OperatorFamily make_family(const QuadraticSet& q) {
  OperatorFamily fam;
  fam.n = q.size();
  fam.classes = class_map(q);
  fam.k = fam.classes.k;
  for (int c = 0; c < fam.k; ++c) {
    const int rep = fam.classes.reps[static_cast<std::size_t>(c)];
    fam.lbar.push_back(RatMatrix::from_map(q.left_action(rep)));
    fam.rbar.push_back(RatMatrix::from_map(q.right_action(rep)));
    RatMatrix p(static_cast<std::size_t>(fam.n), static_cast<std::size_t>(fam.n));
    for (int x : fam.classes.members(c)) p(static_cast<std::size_t>(x), static_cast<std::size_t>(x)) = 1;
    fam.proj.push_back(std::move(p));
  }
  return fam;
}

void verify_family(const QuadraticSet& q, const OperatorFamily& fam) {
  const auto n = static_cast<std::size_t>(fam.n);
  RatMatrix sum(n, n);
  for (int c = 0; c < fam.k; ++c) {
    sum += fam.proj[static_cast<std::size_t>(c)];
    for (int d = 0; d < fam.k; ++d) {
      RatMatrix prod = fam.proj[static_cast<std::size_t>(c)] * fam.proj[static_cast<std::size_t>(d)];
      bool ok = c == d ? prod == fam.proj[static_cast<std::size_t>(c)] : prod.is_zero();
      if (!ok) throw Error("operator family: class projectors are not orthogonal idempotents");
    }
  }
  if (!(sum == RatMatrix::identity(n))) throw Error("operator family: projectors do not sum to the identity");

  if (!is_nondegenerate(q)) return;
  for (int c = 0; c < fam.k; ++c) {
    if (!is_permutation_matrix(fam.lbar[static_cast<std::size_t>(c)]) ||
        !is_permutation_matrix(fam.rbar[static_cast<std::size_t>(c)])) {
      throw Error("operator family: action of a non-degenerate solution is not a permutation matrix");
    }
  }
  // Lbar[x] p[y] = p[x |> y] Lbar[x] and Rbar[z] p[y] = p[y <| z] Rbar[z].
  for (int x = 0; x < fam.n; ++x)
    for (int y = 0; y < fam.n; ++y) {
      const auto& L = fam.lbar[static_cast<std::size_t>(fam.class_of(x))];
      const auto& R = fam.rbar[static_cast<std::size_t>(fam.class_of(x))];
      const auto& py = fam.proj[static_cast<std::size_t>(fam.class_of(y))];
      const auto& pl = fam.proj[static_cast<std::size_t>(fam.class_of(q.left(x, y)))];
      const auto& pr = fam.proj[static_cast<std::size_t>(fam.class_of(q.right(x, y)))];
      if (!(L * py == pl * L)) throw Error("operator family: left intertwining relation fails");
      if (!(R * py == pr * R)) throw Error("operator family: right intertwining relation fails");
    }
}

}  // namespace

bool is_permutation_matrix(const RatMatrix& m) {
  if (!m.square()) return false;
  std::vector<int> row_hits(m.rows(), 0);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    int ones = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const Rational& v = m(i, j);
      if (v == 1) {
        ++ones;
        ++row_hits[i];
      } else if (sgn(v) != 0) {
        return false;
      }
    }
    if (ones != 1) return false;
  }
  for (int h : row_hits) {
    if (h != 1) return false;
  }
  return true;
}

bool is_projector(const RatMatrix& m) { return m.square() && m * m == m; }

OperatorFamily build_operators(const QuadraticSet& q) {
  if (!check_ybe(q)) throw PreconditionError("build_operators: input is not a solution");
  OperatorFamily fam = make_family(q);
  verify_family(q, fam);
  return fam;
}

RMatrix build_R_direct(const QuadraticSet& q) {
  const int n = q.size();
  RMatrix r{n, RatMatrix(static_cast<std::size_t>(n * n), static_cast<std::size_t>(n * n))};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto [a, b] = q(x, y);
      r.matrix(static_cast<std::size_t>(a * n + b), static_cast<std::size_t>(x * n + y)) = 1;
    }
  return r;
}

RatMatrix flip_matrix(int n) {
  RatMatrix t(static_cast<std::size_t>(n * n), static_cast<std::size_t>(n * n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t(static_cast<std::size_t>(y * n + x), static_cast<std::size_t>(x * n + y)) = 1;
  return t;
}

RMatrix build_R_from_operators(const OperatorFamily& fam) {
  const auto nn = static_cast<std::size_t>(fam.n * fam.n);
  RatMatrix sum(nn, nn);
  for (int c = 0; c < fam.k; ++c)
    for (int d = 0; d < fam.k; ++d) {
      sum += kron(fam.lbar[static_cast<std::size_t>(c)] * fam.proj[static_cast<std::size_t>(d)],
                  fam.rbar[static_cast<std::size_t>(d)] * fam.proj[static_cast<std::size_t>(c)]);
    }
  return RMatrix{fam.n, sum * flip_matrix(fam.n)};
}

bool check_linear_ybe(const RMatrix& r) {
  const auto id = RatMatrix::identity(static_cast<std::size_t>(r.n));
  const RatMatrix r12 = kron(r.matrix, id);
  const RatMatrix r23 = kron(id, r.matrix);
  return r12 * r23 * r12 == r23 * r12 * r23;
}

bool check_operator_identities(const QuadraticSet& q) {
  const OperatorFamily fam = make_family(q);
  const int n = q.size();
  auto L = [&fam](int x) -> const RatMatrix& { return fam.lbar[static_cast<std::size_t>(fam.class_of(x))]; };
  auto R = [&fam](int x) -> const RatMatrix& { return fam.rbar[static_cast<std::size_t>(fam.class_of(x))]; };
  auto P = [&fam](int x) -> const RatMatrix& { return fam.proj[static_cast<std::size_t>(fam.class_of(x))]; };

  // L_x L_y = L_{x |> y} L_{x <| y}
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto [a, b] = q(x, y);
      if (!(L(x) * L(y) == L(a) * L(b))) return false;
    }
  // R_z R_y = R_{y <| z} R_{y |> z}
  for (int y = 0; y < n; ++y)
    for (int z = 0; z < n; ++z) {
      auto [u, v] = q(y, z);
      if (!(R(z) * R(y) == R(v) * R(u))) return false;
    }
  // R_{(x <| y) |> z} L_x p_y = L_{x <| (y |> z)} R_z p_y
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const RatMatrix lp = L(x) * P(y);
      for (int z = 0; z < n; ++z) {
        const int left_index = q.left(q.right(y, x), z);
        const int right_index = q.right(q.left(y, z), x);
        if (!(R(left_index) * lp == L(right_index) * R(z) * P(y))) return false;
      }
    }
  return true;
}

}  // namespace ybe
