#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <type_traits>
#include <utility>
#include <vector>

namespace gentle {

using Rational = mpq_class;

// Integers modulo the Mersenne prime 2^61 - 1.
class Fp {
 public:
  static constexpr std::uint64_t modulus = (std::uint64_t{1} << 61) - 1;

  Fp() = default;
  static Fp from_int(long long x) {
    long long r = x % static_cast<long long>(modulus);
    if (r < 0) r += static_cast<long long>(modulus);
    Fp f;
    f.v_ = static_cast<std::uint64_t>(r);
    return f;
  }
  static Fp from_rational(const Rational& q);

  std::uint64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  friend Fp operator+(Fp a, Fp b) {
    std::uint64_t s = a.v_ + b.v_;
    if (s >= modulus) s -= modulus;
    Fp f;
    f.v_ = s;
    return f;
  }
  friend Fp operator-(Fp a, Fp b) {
    Fp f;
    f.v_ = a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + modulus - b.v_;
    return f;
  }
  friend Fp operator-(Fp a) { return Fp() - a; }
  friend Fp operator*(Fp a, Fp b) {
    unsigned __int128 p = static_cast<unsigned __int128>(a.v_) * b.v_;
    std::uint64_t lo = static_cast<std::uint64_t>(p & modulus);
    std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
    std::uint64_t s = lo + hi;
    if (s >= modulus) s -= modulus;
    Fp f;
    f.v_ = s;
    return f;
  }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
  friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

  Fp inverse() const;

 private:
  std::uint64_t v_ = 0;
};

template <class F>
struct FieldOps;

template <>
struct FieldOps<Rational> {
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static Rational inverse(const Rational& x) { return Rational(1) / x; }
  static Rational from(const Rational& q) { return q; }
};

template <>
struct FieldOps<Fp> {
  static bool is_zero(Fp x) { return x.is_zero(); }
  static Fp inverse(Fp x) { return x.inverse(); }
  static Fp from(const Rational& q) { return Fp::from_rational(q); }
};

template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, F(0)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  F& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const F& operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!FieldOps<F>::is_zero(x)) return false;
    return true;
  }

  std::vector<F> column(int c) const {
    std::vector<F> v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<F> data_;
};

template <>
inline Matrix<Fp>::Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, Fp()) {}

template <>
inline Matrix<Fp> Matrix<Fp>::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Fp::from_int(1);
  return m;
}

template <class F>
F one() {
  if constexpr (std::is_same_v<F, Fp>)
    return Fp::from_int(1);
  else
    return F(1);
}

template <class F>
F zero() {
  if constexpr (std::is_same_v<F, Fp>)
    return Fp();
  else
    return F(0);
}

template <class F>
Matrix<F> multiply(const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const F& x = a(i, k);
      if (FieldOps<F>::is_zero(x)) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

template <class F>
std::vector<F> mat_vec(const Matrix<F>& a, const std::vector<F>& v) {
  std::vector<F> out(a.rows(), zero<F>());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k)
      if (!FieldOps<F>::is_zero(v[k])) out[i] += a(i, k) * v[k];
  return out;
}

template <class F>
Matrix<F> convert(const Matrix<Rational>& m) {
  Matrix<F> out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0) out(i, j) = FieldOps<F>::from(m(i, j));
  return out;
}

// Row reduces in place to reduced echelon form; returns pivot columns.
template <class F>
std::vector<int> row_reduce(Matrix<F>& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int c = 0; c < m.cols() && row < m.rows(); ++c) {
    int p = -1;
    for (int r = row; r < m.rows(); ++r)
      if (!FieldOps<F>::is_zero(m(r, c))) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    F inv = FieldOps<F>::inverse(m(row, c));
    for (int j = c; j < m.cols(); ++j) m(row, j) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || FieldOps<F>::is_zero(m(r, c))) continue;
      F f = m(r, c);
      for (int j = c; j < m.cols(); ++j)
        if (!FieldOps<F>::is_zero(m(row, j))) m(r, j) -= f * m(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

template <class F>
int rank(Matrix<F> m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // forward elimination only
  int row = 0;
  for (int c = 0; c < m.cols() && row < m.rows(); ++c) {
    int p = -1;
    for (int r = row; r < m.rows(); ++r)
      if (!FieldOps<F>::is_zero(m(r, c))) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = c; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    if constexpr (std::is_same_v<F, Fp>) {
      // cross-multiplication avoids an inverse per row
      F piv = m(row, c);
      for (int r = row + 1; r < m.rows(); ++r) {
        if (FieldOps<F>::is_zero(m(r, c))) continue;
        F f = m(r, c);
        for (int j = c; j < m.cols(); ++j) m(r, j) = piv * m(r, j) - f * m(row, j);
      }
    } else {
      F inv = FieldOps<F>::inverse(m(row, c));
      for (int r = row + 1; r < m.rows(); ++r) {
        if (FieldOps<F>::is_zero(m(r, c))) continue;
        F f = m(r, c) * inv;
        for (int j = c; j < m.cols(); ++j)
          if (!FieldOps<F>::is_zero(m(row, j))) m(r, j) -= f * m(row, j);
      }
    }
    ++row;
  }
  return row;
}

// Basis of the kernel, one vector per column of the result.
template <class F>
Matrix<F> nullspace(Matrix<F> m) {
  int n = m.cols();
  std::vector<int> pivots = row_reduce(m);
  std::vector<char> is_pivot(n, 0);
  for (int p : pivots) is_pivot[p] = 1;
  int k = n - static_cast<int>(pivots.size());
  Matrix<F> basis(n, k);
  int col = 0;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    basis(f, col) = one<F>();
    for (size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], col) = -m(static_cast<int>(i), f);
    ++col;
  }
  return basis;
}

// Incrementally built basis of a subspace, kept in reduced echelon form.
template <class F>
class EchelonBasis {
 public:
  explicit EchelonBasis(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(rows_.size()); }

  std::vector<F> reduce(std::vector<F> v) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
      const F f = v[pivots_[i]];
      if (FieldOps<F>::is_zero(f)) continue;
      for (int j = 0; j < dim_; ++j)
        if (!FieldOps<F>::is_zero(rows_[i][j])) v[j] -= f * rows_[i][j];
    }
    return v;
  }

  bool contains(const std::vector<F>& v) const {
    for (const auto& x : reduce(v))
      if (!FieldOps<F>::is_zero(x)) return false;
    return true;
  }

  // Adds v if independent; returns whether it was added.
  bool add(const std::vector<F>& v) {
    std::vector<F> r = reduce(v);
    int p = -1;
    for (int j = 0; j < dim_; ++j)
      if (!FieldOps<F>::is_zero(r[j])) {
        p = j;
        break;
      }
    if (p < 0) return false;
    F inv = FieldOps<F>::inverse(r[p]);
    for (auto& x : r) x *= inv;
    for (auto& row : rows_) {
      F f = row[p];
      if (FieldOps<F>::is_zero(f)) continue;
      for (int j = 0; j < dim_; ++j)
        if (!FieldOps<F>::is_zero(r[j])) row[j] -= f * r[j];
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
  }

 private:
  int dim_;
  std::vector<std::vector<F>> rows_;
  std::vector<int> pivots_;
};

// Coordinates with respect to a fixed linearly independent family of vectors.
template <class F>
class CoordinateMap {
 public:
  CoordinateMap() = default;
  // basis: dim x k, independent columns
  explicit CoordinateMap(const Matrix<F>& basis) : k_(basis.cols()) {
    int d = basis.rows();
    Matrix<F> aug(d, k_ + d);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < k_; ++j) aug(i, j) = basis(i, j);
      aug(i, k_ + i) = one<F>();
    }
    row_reduce(aug);
    left_inverse_ = Matrix<F>(k_, d);
    for (int i = 0; i < k_; ++i)
      for (int j = 0; j < d; ++j) left_inverse_(i, j) = aug(i, k_ + j);
  }
  std::vector<F> coordinates(const std::vector<F>& v) const { return mat_vec(left_inverse_, v); }
  int size() const { return k_; }

 private:
  int k_ = 0;
  Matrix<F> left_inverse_;
};

}  // namespace gentle
