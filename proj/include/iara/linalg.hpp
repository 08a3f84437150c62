#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iara/cyclotomic.hpp"
#include "iara/error.hpp"

namespace iara {

template <class F>
using Vec = std::vector<F>;

template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : r_(r), c_(c), d_(r * c, F(0)) {}
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }
  static Matrix from_columns(const std::vector<Vec<F>>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw Error(ErrorCode::InvalidArgument, "column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }
  static Matrix from_rows(const std::vector<Vec<F>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw Error(ErrorCode::InvalidArgument, "row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  F& operator()(std::size_t i, std::size_t j) { return d_[i * c_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return d_[i * c_ + j]; }

  Vec<F> column(std::size_t j) const {
    Vec<F> v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  Vec<F> row(std::size_t i) const { return Vec<F>(d_.begin() + i * c_, d_.begin() + (i + 1) * c_); }

  Matrix transpose() const {
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
    Matrix p(a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
      for (std::size_t k = 0; k < a.c_; ++k) {
        const F& x = a(i, k);
        if (is_zero(x)) continue;
        for (std::size_t j = 0; j < b.c_; ++j)
          if (!is_zero(b(k, j))) p(i, j) += x * b(k, j);
      }
    return p;
  }
  friend Vec<F> operator*(const Matrix& a, const Vec<F>& v) {
    if (a.c_ != v.size()) throw Error(ErrorCode::InvalidArgument, "matrix-vector shape mismatch");
    Vec<F> out(a.r_, F(0));
    for (std::size_t i = 0; i < a.r_; ++i)
      for (std::size_t k = 0; k < a.c_; ++k)
        if (!is_zero(a(i, k)) && !is_zero(v[k])) out[i] += a(i, k) * v[k];
    return out;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.d_.size(); ++i) a.d_[i] += b.d_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.d_.size(); ++i) a.d_[i] -= b.d_[i];
    return a;
  }
  Matrix scaled(const F& s) const {
    Matrix m = *this;
    for (auto& x : m.d_) x *= s;
    return m;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.d_ == b.d_;
  }
  bool is_zero_matrix() const {
    for (const auto& x : d_)
      if (!is_zero(x)) return false;
    return true;
  }
  bool is_diagonal() const {
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j)
        if (i != j && !is_zero((*this)(i, j))) return false;
    return true;
  }

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<F> d_;
};

// Reduced row echelon form in place; returns pivot columns.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    F inv = F(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j)
      if (!is_zero(m(row, j))) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      F f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!is_zero(m(row, j))) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
  return rref(m).size();
}

// Basis of {x | m x = 0}.
template <class F>
std::vector<Vec<F>> kernel(Matrix<F> m) {
  auto piv = rref(m);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<Vec<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_piv[free]) continue;
    Vec<F> v(m.cols(), F(0));
    v[free] = F(1);
    for (std::size_t r = 0; r < piv.size(); ++r)
      if (!is_zero(m(r, free))) v[piv[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
std::optional<Vec<F>> solve(const Matrix<F>& a, const Vec<F>& b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::InvalidArgument, "rhs length mismatch");
  Matrix<F> aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto piv = rref(aug);
  Vec<F> x(a.cols(), F(0));
  for (std::size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] == a.cols()) return std::nullopt;
    x[piv[r]] = aug(r, a.cols());
  }
  return x;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const std::size_t n = a.rows();
  Matrix<F> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = F(1);
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix<F> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

template <class F>
F determinant(Matrix<F> m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "determinant of non-square matrix");
  F det(1);
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(m(p, c))) ++p;
    if (p == n) return F(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    F inv = F(1) / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      F f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

// Indices of a maximal linearly independent subset of the given vectors, greedy in order.
template <class F>
std::vector<std::size_t> independent_subset(const std::vector<Vec<F>>& vs) {
  std::vector<std::size_t> chosen;
  if (vs.empty()) return chosen;
  const std::size_t n = vs[0].size();
  std::vector<Vec<F>> echelon;  // rows with distinct leading positions
  std::vector<std::size_t> lead;
  for (std::size_t idx = 0; idx < vs.size(); ++idx) {
    Vec<F> v = vs[idx];
    for (std::size_t r = 0; r < echelon.size(); ++r) {
      if (is_zero(v[lead[r]])) continue;
      F f = v[lead[r]];
      for (std::size_t j = 0; j < n; ++j)
        if (!is_zero(echelon[r][j])) v[j] -= f * echelon[r][j];
    }
    std::size_t p = 0;
    while (p < n && is_zero(v[p])) ++p;
    if (p == n) continue;
    F inv = F(1) / v[p];
    for (auto& x : v) x *= inv;
    for (std::size_t r = 0; r < echelon.size(); ++r) {
      if (is_zero(echelon[r][p])) continue;
      F f = echelon[r][p];
      for (std::size_t j = 0; j < n; ++j) echelon[r][j] -= f * v[j];
    }
    echelon.push_back(std::move(v));
    lead.push_back(p);
    chosen.push_back(idx);
  }
  return chosen;
}

// Expresses vectors in the span of a fixed family of independent column vectors.
template <class F>
class Expresser {
 public:
  Expresser() = default;
  explicit Expresser(std::vector<Vec<F>> basis, std::size_t ambient) : basis_(std::move(basis)), n_(ambient) {
    const std::size_t k = basis_.size();
    if (k == 0) return;
    Matrix<F> bt = Matrix<F>::from_rows(basis_, n_);
    Matrix<F> red = bt;
    rows_ = rref(red);
    if (rows_.size() != k) throw Error(ErrorCode::InvalidArgument, "expresser basis is dependent");
    Matrix<F> sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = basis_[j][rows_[i]];
    auto inv = inverse(sub);
    if (!inv) throw Error(ErrorCode::InvalidArgument, "expresser pivot block singular");
    inv_ = *inv;
  }

  std::size_t size() const { return basis_.size(); }
  std::size_t ambient() const { return n_; }
  const std::vector<Vec<F>>& basis() const { return basis_; }

  std::optional<Vec<F>> try_coords(const Vec<F>& v) const {
    const std::size_t k = basis_.size();
    Vec<F> picked(k);
    for (std::size_t i = 0; i < k; ++i) picked[i] = v[rows_[i]];
    Vec<F> c = k ? inv_ * picked : Vec<F>{};
    Vec<F> back(n_, F(0));
    for (std::size_t j = 0; j < k; ++j) {
      if (is_zero(c[j])) continue;
      for (std::size_t i = 0; i < n_; ++i)
        if (!is_zero(basis_[j][i])) back[i] += c[j] * basis_[j][i];
    }
    if (back != v) return std::nullopt;
    return c;
  }
  Vec<F> coords(const Vec<F>& v) const {
    auto c = try_coords(v);
    if (!c) throw Error(ErrorCode::NotInSpan, "vector outside the spanned subspace");
    return *c;
  }

 private:
  std::vector<Vec<F>> basis_;
  std::size_t n_ = 0;
  std::vector<std::size_t> rows_;
  Matrix<F> inv_;
};

template <class F>
bool is_zero_vec(const Vec<F>& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

}  // namespace iara
