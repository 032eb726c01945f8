#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ybe/cyclotomic.hpp"
#include "ybe/errors.hpp"

namespace ybe {

// Dense row-major matrix over an exact field (Rational or CycNum).
template <class F>
class ExactMatrix {
 public:
  using value_type = F;

  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ExactMatrix identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }
  static ExactMatrix zero(std::size_t rows, std::size_t cols) { return ExactMatrix(rows, cols); }

  // Matrix of a map of {0..n-1} to itself acting on basis vectors:
  // column j has a single 1 in row map[j].
  static ExactMatrix from_map(std::span<const int> map) {
    ExactMatrix m(map.size(), map.size());
    for (std::size_t j = 0; j < map.size(); ++j) m(static_cast<std::size_t>(map[j]), j) = F(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<F>& data() const { return data_; }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!ybe::is_zero(x)) return false;
    }
    return true;
  }

  ExactMatrix& operator+=(const ExactMatrix& rhs) {
    check_same_shape(rhs);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
  }
  ExactMatrix& operator-=(const ExactMatrix& rhs) {
    check_same_shape(rhs);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
  }
  ExactMatrix& operator*=(const F& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(ExactMatrix a, const F& s) { return a *= s; }
  friend ExactMatrix operator*(const F& s, ExactMatrix a) { return a *= s; }

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw InvalidInput("matrix product: dimension mismatch");
    ExactMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& aik = a(i, k);
        if (ybe::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const F& bkj = b(k, j);
          if (!ybe::is_zero(bkj)) out(i, j) += aik * bkj;
        }
      }
    }
    return out;
  }

  friend std::vector<F> operator*(const ExactMatrix& a, const std::vector<F>& v) {
    if (a.cols_ != v.size()) throw InvalidInput("matrix-vector product: dimension mismatch");
    std::vector<F> out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (!ybe::is_zero(a(i, k)) && !ybe::is_zero(v[k])) out[i] += a(i, k) * v[k];
      }
    }
    return out;
  }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  ExactMatrix transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  F trace() const {
    F t{};
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
  }

  std::vector<F> column(std::size_t j) const {
    std::vector<F> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  static ExactMatrix from_columns(const std::vector<std::vector<F>>& cols, std::size_t rows) {
    ExactMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j].at(i);
    return m;
  }

  // Entry-wise conversion, e.g. Rational -> CycNum.
  template <class G>
  ExactMatrix<G> cast() const {
    ExactMatrix<G> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = G((*this)(i, j));
    return out;
  }

 private:
  void check_same_shape(const ExactMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InvalidInput("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

using RatMatrix = ExactMatrix<Rational>;
using CycMatrix = ExactMatrix<CycNum>;

template <class F>
ExactMatrix<F> commutator(const ExactMatrix<F>& a, const ExactMatrix<F>& b) {
  return a * b - b * a;
}

// Kronecker product. Row/column index (i, k) of the result is i * b.rows() + k,
// so for V (x) V with dim V = n the basis vector e_x (x) e_y sits at x * n + y.
template <class F>
ExactMatrix<F> kron(const ExactMatrix<F>& a, const ExactMatrix<F>& b) {
  ExactMatrix<F> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const F& aij = a(i, j);
      if (is_zero(aij)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          if (!is_zero(b(k, l))) out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    }
  }
  return out;
}

template <class F>
std::vector<F> kron(const std::vector<F>& a, const std::vector<F>& b) {
  std::vector<F> out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t k = 0; k < b.size(); ++k) out[i * b.size() + k] = a[i] * b[k];
  }
  return out;
}

template <class F>
struct RrefResult {
  ExactMatrix<F> reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

// Reduced row-echelon form. The pivot in each column is the first nonzero
// entry at or below the current row.
template <class F>
RrefResult<F> rref(ExactMatrix<F> m) {
  RrefResult<F> out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    }
    const F inv = inverse(m(row, col));
    for (std::size_t j = col; j < m.cols(); ++j) {
      if (!is_zero(m(row, j))) m(row, j) *= inv;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      const F factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (!is_zero(m(row, j))) m(i, j) -= factor * m(row, j);
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  out.reduced = std::move(m);
  return out;
}

template <class F>
std::size_t rank(const ExactMatrix<F>& m) {
  return rref(m).rank;
}

// Basis of the null space, one vector per free column in increasing order;
// the vector for free column f has a 1 in position f.
template <class F>
std::vector<std::vector<F>> kernel(const ExactMatrix<F>& m) {
  const auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<F> v(m.cols());
    v[f] = F(1);
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Determinant by fraction-field elimination.
template <class F>
F determinant(ExactMatrix<F> m) {
  if (!m.square()) throw InvalidInput("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  F det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && is_zero(m(p, col))) ++p;
    if (p == n) return F(0);
    if (p != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    const F inv = inverse(m(col, col));
    for (std::size_t i = col + 1; i < n; ++i) {
      if (is_zero(m(i, col))) continue;
      const F factor = m(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) m(i, j) -= factor * m(col, j);
    }
  }
  return det;
}

}  // namespace ybe
