// Copyright 2026 The wittext Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WITTEXT_MATRIX_HPP
#define WITTEXT_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wittext/errors.hpp"
#include "wittext/quad.hpp"

namespace wittext {

// dense row-major matrix over an exact field F
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<F> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) throw Error(ErrorKind::ShapeMismatch, "entry count");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }
  static Matrix scalar(std::size_t n, const F& s) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<F>& entries() const { return data_; }

  F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const F& x : data_)
      if (!wittext::is_zero(x)) return false;
    return true;
  }
  bool is_square() const { return rows_ == cols_; }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const F& s) {
    if (wittext::is_zero(s)) {
      for (F& x : data_) x = F(0);
      return *this;
    }
    for (F& x : data_)
      if (!wittext::is_zero(x)) x *= s;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const F& s) { return a *= s; }
  friend Matrix operator*(const F& s, Matrix a) { return a *= s; }
  Matrix operator-() const {
    Matrix r(*this);
    for (F& x : r.data_) x = -x;
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw Error(ErrorKind::ShapeMismatch, "product " + a.shape() + " * " + b.shape());
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& x = a(i, k);
        if (wittext::is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const F& y = b(k, j);
          if (!wittext::is_zero(y)) r(i, j) += x * y;
        }
      }
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw Error(ErrorKind::ShapeMismatch, shape() + " vs " + o.shape());
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

using FieldMatrix = Matrix<QuadScalar>;

template <class F>
Matrix<F> commutator(const Matrix<F>& a, const Matrix<F>& b) {
  return a * b - b * a;
}

template <class F>
Matrix<F> power(const Matrix<F>& a, long n) {
  Matrix<F> r = Matrix<F>::identity(a.rows());
  for (long k = 0; k < n; ++k) r = r * a;
  return r;
}

// reduced row echelon form in place; returns pivot columns
template <class F>
std::vector<std::size_t> row_reduce(Matrix<F>& m, std::size_t ncols_pivot) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols_pivot && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && wittext::is_zero(m(piv, col))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    F inv = F(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j)
      if (!wittext::is_zero(m(row, j))) m(row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || wittext::is_zero(m(r, col))) continue;
      F factor = m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!wittext::is_zero(m(row, j))) m(r, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
  return row_reduce(m, m.cols()).size();
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& a) {
  if (!a.is_square()) throw Error(ErrorKind::ShapeMismatch, "inverse of " + a.shape());
  std::size_t n = a.rows();
  Matrix<F> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = F(1);
  }
  auto piv = row_reduce(aug, n);
  if (piv.size() != n) return std::nullopt;
  Matrix<F> r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
  return r;
}

template <class F>
struct AffineSolutionSet {
  std::vector<F> particular;
  std::vector<std::vector<F>> basis;
};

// y with y^T A = 0 and y^T rhs != 0
template <class F>
struct Inconsistent {
  std::vector<F> witness;
};

template <class F>
using LinearSolution = std::variant<AffineSolutionSet<F>, Inconsistent<F>>;

template <class F>
std::vector<F> mat_vec(const Matrix<F>& a, const std::vector<F>& x) {
  if (x.size() != a.cols()) throw Error(ErrorKind::ShapeMismatch, "mat_vec");
  std::vector<F> r(a.rows(), F(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!wittext::is_zero(a(i, j)) && !wittext::is_zero(x[j])) r[i] += a(i, j) * x[j];
  return r;
}

template <class F>
LinearSolution<F> solve_linear(const Matrix<F>& a, const std::vector<F>& rhs) {
  if (rhs.size() != a.rows()) throw Error(ErrorKind::ShapeMismatch, "solve_linear rhs");
  std::size_t n = a.cols();
  Matrix<F> aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = rhs[i];
  }
  auto pivots = row_reduce(aug, n);
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r) {
    if (wittext::is_zero(aug(r, n))) continue;
    // recover a certificate from the transposed system A^T y = 0, rhs^T y = 1
    Matrix<F> at(n + 1, a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < n; ++j) at(j, i) = a(i, j);
      at(n, i) = rhs[i];
    }
    std::vector<F> target(n + 1, F(0));
    target[n] = F(1);
    auto dual = solve_linear(at, target);
    return Inconsistent<F>{std::get<AffineSolutionSet<F>>(dual).particular};
  }
  AffineSolutionSet<F> out;
  out.particular.assign(n, F(0));
  std::vector<bool> is_pivot(n, false);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    out.particular[pivots[r]] = aug(r, n);
    is_pivot[pivots[r]] = true;
  }
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(n, F(0));
    v[free] = F(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -aug(r, free);
    out.basis.push_back(std::move(v));
  }
  return out;
}

// c - tau Id nilpotent; returns sqrt(c) as the binomial series at tau
template <class F>
Matrix<F> nilpotent_sqrt(const Matrix<F>& c, const F& tau, const F& sqrt_tau) {
  if (!c.is_square()) throw Error(ErrorKind::ShapeMismatch, "nilpotent_sqrt of " + c.shape());
  if (wittext::is_zero(tau)) throw Error(ErrorKind::TauZero, "tau = 0");
  std::size_t n = c.rows();
  Matrix<F> nil = c - Matrix<F>::scalar(n, tau);
  if (!power(nil, static_cast<long>(n)).is_zero())
    throw Error(ErrorKind::NotNilpotent, "c - tau Id is not nilpotent");
  Matrix<F> sum(n, n);
  Matrix<F> term = Matrix<F>::identity(n);
  F tau_pow(1);
  for (std::size_t k = 0; k < std::max<std::size_t>(n, 1); ++k) {
    if (term.is_zero()) break;
    Rational coeff = half_binomial(static_cast<long>(k));
    sum += term * (F(coeff) / tau_pow);
    term = term * nil;
    tau_pow *= tau;
  }
  return sum * sqrt_tau;
}

// P(X, n) for a square matrix; factors commute
template <class F>
Matrix<F> matrix_pochhammer(const Matrix<F>& x, long n) {
  std::size_t l = x.rows();
  Matrix<F> id = Matrix<F>::identity(l);
  if (n >= 0) {
    Matrix<F> r = id;
    for (long t = 0; t < n; ++t) r = r * (x + id * F(t));
    return r;
  }
  Matrix<F> d = id;
  for (long t = n; t < 0; ++t) d = d * (x + id * F(t));
  auto inv = inverse(d);
  if (!inv) throw Error(ErrorKind::SingularPochhammerBlock, "singular factor in P(X, " + std::to_string(n) + ")");
  return *inv;
}

// ((-1)^i / 2) (i (1 + X) - (mu + 2i)) P((1 + X + mu) / 2, i), X a square root of the Casimir
template <class F>
Matrix<F> matrix_coefficient(const Matrix<F>& sqrt_c, const F& mu, int i) {
  std::size_t l = sqrt_c.rows();
  Matrix<F> id = Matrix<F>::identity(l);
  Matrix<F> one_plus = id + sqrt_c;
  Matrix<F> lin = one_plus * F(i) - id * (mu + F(2 * i));
  Matrix<F> poch = matrix_pochhammer((one_plus + id * mu) * F(Rational(1, 2)), i);
  return lin * poch * F(Rational(i % 2 == 0 ? 1 : -1, 2));
}

}  // namespace wittext

#endif  // WITTEXT_MATRIX_HPP
