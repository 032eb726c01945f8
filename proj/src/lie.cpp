#include "ybe/lie.hpp"

#include <algorithm>
#include <functional>

#include "ybe/errors.hpp"
#include "ybe/retract.hpp"

namespace ybe {

std::vector<Rational> EchelonSpan::residual(std::vector<Rational> v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational c = v[pivots_[i]];
    if (sgn(c) == 0) continue;
    for (std::size_t t = pivots_[i]; t < ambient_; ++t) {
      if (sgn(rows_[i][t]) != 0) v[t] -= c * rows_[i][t];
    }
  }
  return v;
}

bool EchelonSpan::add(std::vector<Rational> v) {
  if (v.size() != ambient_) throw InvalidInput("EchelonSpan::add: wrong vector length");
  v = residual(std::move(v));
  std::size_t p = 0;
  while (p < ambient_ && sgn(v[p]) == 0) ++p;
  if (p == ambient_) return false;
  const Rational lead = v[p];
  for (std::size_t t = p; t < ambient_; ++t) v[t] /= lead;
  for (auto& row : rows_) {
    const Rational c = row[p];
    if (sgn(c) == 0) continue;
    for (std::size_t t = p; t < ambient_; ++t) {
      if (sgn(v[t]) != 0) row[t] -= c * v[t];
    }
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

bool EchelonSpan::contains(const std::vector<Rational>& v) const {
  auto r = residual(v);
  return std::all_of(r.begin(), r.end(), [](const Rational& x) { return sgn(x) == 0; });
}

std::optional<std::vector<Rational>> EchelonSpan::coordinates(const std::vector<Rational>& v) const {
  if (!contains(v)) return std::nullopt;
  std::vector<Rational> c(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

std::vector<Rational> flatten(const RatMatrix& m) { return m.data(); }

RatMatrix unflatten(const std::vector<Rational>& v, std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i * n + j];
  return m;
}

std::optional<std::vector<Rational>> LieAlgebraRep::coordinates(const RatMatrix& m) const {
  const auto nn = static_cast<std::size_t>(n * n);
  EchelonSpan span(nn);
  for (const auto& b : basis) span.add(flatten(b));
  // `basis` is stored in echelon form, so re-adding it reproduces the same rows.
  return span.coordinates(flatten(m));
}

namespace {

LieAlgebraRep from_span(const EchelonSpan& span, int n, std::vector<RatMatrix> generators) {
  LieAlgebraRep g;
  g.n = n;
  g.generators = std::move(generators);
  for (const auto& row : span.rows()) g.basis.push_back(unflatten(row, static_cast<std::size_t>(n)));
  const std::size_t d = g.basis.size();
  g.structure.assign(d, std::vector<std::vector<Rational>>(d, std::vector<Rational>(d)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      auto coords = span.coordinates(flatten(commutator(g.basis[i], g.basis[j])));
      if (!coords) throw Error("Lie algebra: span is not closed under the bracket");
      for (std::size_t k = 0; k < d; ++k) {
        g.structure[i][j][k] = (*coords)[k];
        g.structure[j][i][k] = -(*coords)[k];
      }
    }
  return g;
}

}  // namespace

std::vector<RatMatrix> lie_generators(const QuadraticSet& q) {
  const OperatorFamily fam = build_operators(q);
  std::vector<RatMatrix> gens;
  for (int c = 0; c < fam.k; ++c)
    for (int d = 0; d < fam.k; ++d)
      gens.push_back(fam.lbar[static_cast<std::size_t>(c)] * fam.proj[static_cast<std::size_t>(d)]);
  for (int c = 0; c < fam.k; ++c)
    for (int d = 0; d < fam.k; ++d)
      gens.push_back(fam.rbar[static_cast<std::size_t>(c)] * fam.proj[static_cast<std::size_t>(d)]);
  return gens;
}

LieAlgebraRep lie_closure(const std::vector<RatMatrix>& gens, int n) {
  if (!gens.empty()) n = static_cast<int>(gens.front().rows());
  if (n <= 0) throw InvalidInput("lie_closure: unknown matrix size");
  for (const auto& m : gens) {
    if (m.rows() != static_cast<std::size_t>(n) || m.cols() != static_cast<std::size_t>(n)) {
      throw InvalidInput("lie_closure: generators must be square of equal size");
    }
  }
  const auto nn = static_cast<std::size_t>(n * n);
  EchelonSpan span(nn);
  for (const auto& m : gens) span.add(flatten(m));

  bool grew = true;
  while (grew) {
    grew = false;
    const auto rows = span.rows();
    std::vector<RatMatrix> current;
    for (const auto& r : rows) current.push_back(unflatten(r, static_cast<std::size_t>(n)));
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        if (span.add(flatten(commutator(current[i], current[j])))) grew = true;
      }
  }
  return from_span(span, n, gens);
}

LieAlgebraRep span_algebra(const std::vector<RatMatrix>& elements, int n) {
  EchelonSpan span(static_cast<std::size_t>(n * n));
  for (const auto& m : elements) span.add(flatten(m));
  return from_span(span, n, elements);
}

bool is_abelian(const LieAlgebraRep& g) {
  for (const auto& row : g.structure)
    for (const auto& c : row)
      for (const auto& v : c) {
        if (sgn(v) != 0) return false;
      }
  return true;
}

bool check_antisymmetry(const LieAlgebraRep& g) {
  const std::size_t d = g.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        if (g.structure[i][j][k] != -g.structure[j][i][k]) return false;
      }
  return true;
}

bool check_jacobi(const LieAlgebraRep& g) {
  // sum_l c^l_{ij} c^m_{lk} + c^l_{jk} c^m_{li} + c^l_{ki} c^m_{lj} = 0
  const std::size_t d = g.dim();
  const auto& c = g.structure;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k)
        for (std::size_t m = 0; m < d; ++m) {
          Rational s = 0;
          for (std::size_t l = 0; l < d; ++l) {
            s += c[i][j][l] * c[l][k][m] + c[j][k][l] * c[l][i][m] + c[k][i][l] * c[l][j][m];
          }
          if (sgn(s) != 0) return false;
        }
  return true;
}

LieAlgebraRep derived_algebra(const LieAlgebraRep& g) {
  std::vector<RatMatrix> brackets;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      RatMatrix b = commutator(g.basis[i], g.basis[j]);
      if (!b.is_zero()) brackets.push_back(std::move(b));
    }
  return span_algebra(brackets, g.n);
}

std::vector<LieAlgebraRep> derived_series(const LieAlgebraRep& g) {
  std::vector<LieAlgebraRep> series{g};
  while (series.back().dim() > 0) {
    LieAlgebraRep next = derived_algebra(series.back());
    const bool stable = next.dim() == series.back().dim();
    series.push_back(std::move(next));
    if (stable) break;
  }
  return series;
}

KillingData killing(const LieAlgebraRep& g) {
  const std::size_t d = g.dim();
  const auto& c = g.structure;
  KillingData out;
  out.gram = RatMatrix(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) {
          if (sgn(c[i][k][l]) != 0 && sgn(c[j][l][k]) != 0) s += c[i][k][l] * c[j][l][k];
        }
      out.gram(i, j) = s;
      out.gram(j, i) = s;
    }
  out.determinant = d == 0 ? Rational(1) : determinant(out.gram);
  out.nondegenerate = sgn(out.determinant) != 0;
  return out;
}

bool check_killing_invariance(const LieAlgebraRep& g, const KillingData& k) {
  const std::size_t d = g.dim();
  if (!(k.gram == k.gram.transpose())) return false;
  const auto& c = g.structure;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t t = 0; t < d; ++t) {
        // K([b_i,b_j], b_t) vs K(b_i, [b_j,b_t])
        Rational lhs = 0, rhs = 0;
        for (std::size_t l = 0; l < d; ++l) {
          lhs += c[i][j][l] * k.gram(l, t);
          rhs += c[j][t][l] * k.gram(i, l);
        }
        if (lhs != rhs) return false;
      }
  return true;
}

std::size_t centralizer_dimension(const LieAlgebraRep& g, const std::vector<Rational>& coeffs) {
  const std::size_t d = g.dim();
  RatMatrix ad(d, d);  // ad(h)_{l,k} = sum_i h_i c^l_{ik}
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(coeffs[i]) == 0) continue;
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t l = 0; l < d; ++l) ad(l, k) += coeffs[i] * g.structure[i][k][l];
  }
  return d - rank(ad);
}

std::optional<std::vector<int>> type_a_fingerprint(std::size_t dim, std::size_t rank) {
  std::vector<int> parts;
  std::function<bool(int, long, long)> search = [&](int min_part, long dim_left, long rank_left) {
    if (dim_left == 0 && rank_left == 0) return true;
    if (dim_left <= 0 || rank_left <= 0) return false;
    for (int k = min_part; k - 1 <= rank_left; ++k) {
      const long dk = static_cast<long>(k) * k - 1;
      if (dk > dim_left) break;
      parts.push_back(k);
      if (search(k, dim_left - dk, rank_left - (k - 1))) return true;
      parts.pop_back();
    }
    return false;
  };
  if (search(2, static_cast<long>(dim), static_cast<long>(rank))) return parts;
  return std::nullopt;
}

SemisimplicityReport analyze_semisimplicity(const LieAlgebraRep& g) {
  SemisimplicityReport rep;
  rep.dim_g = g.dim();
  const auto series = derived_series(g);
  for (const auto& term : series) rep.derived_dims.push_back(term.dim());
  const LieAlgebraRep& derived = series.size() > 1 ? series[1] : series[0];
  rep.dim_derived = series.size() > 1 ? derived.dim() : g.dim();
  if (rep.dim_derived == 0) {
    rep.derived_is_semisimple = true;
    rep.trivially_semisimple = true;
    rep.killing_determinant = 1;
    rep.rank_estimate = 0;
    rep.type_a_candidate = std::vector<int>{};
    return rep;
  }
  const KillingData kd = killing(derived);
  rep.killing_determinant = kd.determinant;
  rep.derived_is_semisimple = kd.nondegenerate;

  // Generic element: coefficients 1, 2, 3, ... then shifted by one, twice.
  std::size_t best = derived.dim();
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<Rational> coeffs(derived.dim());
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = static_cast<long>(i) + 1 + attempt;
    best = std::min(best, centralizer_dimension(derived, coeffs));
  }
  rep.rank_estimate = best;
  rep.type_a_candidate = type_a_fingerprint(rep.dim_derived, rep.rank_estimate);
  return rep;
}

namespace {
void require_nondegenerate_solution(const QuadraticSet& q, const char* op) {
  if (!check_ybe(q)) throw PreconditionError(std::string(op) + ": input is not a solution");
  if (!is_nondegenerate(q)) throw PreconditionError(std::string(op) + ": input is degenerate");
}
}  // namespace

SemisimplicityReport semisimplicity_report(const QuadraticSet& q) {
  require_nondegenerate_solution(q, "semisimplicity_report");
  return analyze_semisimplicity(lie_closure(lie_generators(q)));
}

TheoremCheck theorem_check(const QuadraticSet& q) {
  require_nondegenerate_solution(q, "theorem_check");
  TheoremCheck t;
  t.a = is_retraction_trivial(q);

  const OperatorFamily fam = build_operators(q);
  std::vector<const RatMatrix*> ops;
  for (int c = 0; c < fam.k; ++c) {
    ops.push_back(&fam.lbar[static_cast<std::size_t>(c)]);
    ops.push_back(&fam.rbar[static_cast<std::size_t>(c)]);
    ops.push_back(&fam.proj[static_cast<std::size_t>(c)]);
  }
  t.b = true;
  for (std::size_t i = 0; i < ops.size() && t.b; ++i)
    for (std::size_t j = i + 1; j < ops.size(); ++j) {
      if (!commutator(*ops[i], *ops[j]).is_zero()) {
        t.b = false;
        break;
      }
    }

  t.c = is_abelian(lie_closure(lie_generators(q)));
  return t;
}

bool check_commutation_formulas(const QuadraticSet& q) {
  const OperatorFamily fam = build_operators(q);
  const int n = q.size();
  auto L = [&](int x) -> const RatMatrix& { return fam.lbar[static_cast<std::size_t>(fam.class_of(x))]; };
  auto R = [&](int x) -> const RatMatrix& { return fam.rbar[static_cast<std::size_t>(fam.class_of(x))]; };
  auto P = [&](int x) -> const RatMatrix& { return fam.proj[static_cast<std::size_t>(fam.class_of(x))]; };
  auto la = [&](int x, int y) { return q.left(x, y); };   // x |> y
  auto ra = [&](int y, int x) { return q.right(x, y); };  // y <| x

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const RatMatrix lpx = L(x) * P(y);
      const RatMatrix rpx = R(x) * P(y);
      for (int z = 0; z < n; ++z)
        for (int w = 0; w < n; ++w) {
          const RatMatrix lpz = L(z) * P(w);
          const RatMatrix rpz = R(z) * P(w);

          const RatMatrix ll = P(la(x, y)) * P(la(x, la(z, w))) * L(x) * L(z) -
                               P(la(z, w)) * P(la(z, la(x, y))) * L(z) * L(x);
          if (!(commutator(lpx, lpz) == ll)) return false;

          const RatMatrix rr = P(ra(y, x)) * P(ra(ra(w, z), x)) * R(x) * R(z) -
                               P(ra(w, z)) * P(ra(ra(y, x), z)) * R(z) * R(x);
          if (!(commutator(rpx, rpz) == rr)) return false;

          const RatMatrix lr = P(la(x, y)) * P(la(x, ra(w, z))) * L(x) * R(z) -
                               P(ra(w, z)) * P(ra(la(x, y), z)) * R(z) * L(x);
          if (!(commutator(lpx, rpz) == lr)) return false;
        }
    }
  return true;
}

bool check_cybe(const QuadraticSet& q) {
  const OperatorFamily fam = build_operators(q);
  const auto n = static_cast<std::size_t>(fam.n);
  const RatMatrix id = RatMatrix::identity(n);
  const std::size_t n3 = n * n * n;
  RatMatrix r12(n3, n3), r13(n3, n3), r23(n3, n3);
  for (int c = 0; c < fam.k; ++c)
    for (int d = 0; d < fam.k; ++d) {
      const RatMatrix a = fam.lbar[static_cast<std::size_t>(c)] * fam.proj[static_cast<std::size_t>(d)];
      const RatMatrix b = fam.rbar[static_cast<std::size_t>(d)] * fam.proj[static_cast<std::size_t>(c)];
      r12 += kron(kron(a, b), id);
      r13 += kron(kron(a, id), b);
      r23 += kron(kron(id, a), b);
    }
  const RatMatrix total = commutator(r12, r13) + commutator(r12, r23) + commutator(r13, r23);
  return total.is_zero();
}

}  // namespace ybe
