#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "trivext/exactla/field.hpp"

namespace trivext {

using Vec = std::vector<Elem>;

/// Dense row-major matrix over F_p. Linear maps act on column vectors.
class Matrix {
public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  Matrix(Field f, std::size_t rows, std::size_t cols, Vec entries)
      : field_(f), rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows * cols) throw std::invalid_argument("matrix entry count mismatch");
  }

  static Matrix identity(Field f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Builds a matrix whose columns are the given vectors.
  static Matrix from_columns(Field f, std::size_t rows, std::span<const Vec> cols) {
    Matrix m(f, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      assert(cols[j].size() == rows);
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  static Matrix from_rows(Field f, std::size_t cols, std::span<const Vec> rows) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      assert(rows[i].size() == cols);
      std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
    }
    return m;
  }

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Vec& entries() const { return a_; }

  Elem& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  Elem operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::span<Elem> row(std::size_t i) { return {a_.data() + i * cols_, cols_}; }
  std::span<const Elem> row(std::size_t i) const { return {a_.data() + i * cols_, cols_}; }

  Vec column(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](Elem e) { return e == 0; });
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Vec apply(std::span<const Elem> v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
    Vec out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::uint64_t acc = 0;
      auto r = row(i);
      for (std::size_t j = 0; j < cols_; ++j) {
        if (r[j] == 0 || v[j] == 0) continue;
        acc += static_cast<std::uint64_t>(r[j]) * v[j];
        if (acc >= (1ull << 62)) acc = field_.reduce(acc);
      }
      out[i] = field_.reduce(acc);
    }
    return out;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix b(field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  Matrix scaled(Elem c) const {
    Matrix m = *this;
    for (auto& e : m.a_) e = field_.mul(e, c);
    return m;
  }

  Matrix operator-() const { return scaled(field_.neg(1)); }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix m = a;
    for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] = a.field_.add(a.a_[k], b.a_[k]);
    return m;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix m = a;
    for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] = a.field_.sub(a.a_[k], b.a_[k]);
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw std::invalid_argument("matrix product shape mismatch: " + a.shape() + " * " +
                                  b.shape());
    }
    const Field& f = a.field_;
    Matrix c(f, a.rows_, b.cols_);
    std::vector<std::uint64_t> acc(b.cols_);
    const std::uint64_t sq = static_cast<std::uint64_t>(f.prime() - 1) * (f.prime() - 1);
    const std::uint64_t budget = sq == 0 ? ~0ull : (~0ull - f.prime()) / sq;
    for (std::size_t i = 0; i < a.rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      std::size_t pending = 0;
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Elem aik = a(i, k);
        if (aik == 0) continue;
        auto brow = b.row(k);
        for (std::size_t j = 0; j < b.cols_; ++j) acc[j] += static_cast<std::uint64_t>(aik) * brow[j];
        if (++pending == budget) {
          for (auto& x : acc) x = f.reduce(x);
          pending = 0;
        }
      }
      auto crow = c.row(i);
      for (std::size_t j = 0; j < b.cols_; ++j) crow[j] = f.reduce(acc[j]);
    }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

private:
  static void check_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("matrix shape mismatch: " + a.shape() + " vs " + b.shape());
  }

  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vec a_;
};

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix k(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  const Field& f = a.field();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Elem aij = a(i, j);
      if (aij == 0) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t s = 0; s < b.cols(); ++s)
          k(i * b.rows() + r, j * b.cols() + s) = f.mul(aij, b(r, s));
    }
  return k;
}

/// Block-diagonal direct sum.
inline Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix m(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

inline Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  Matrix m(a.field(), a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

inline Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
  Matrix m(a.field(), a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

inline Vec unit_vector(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

inline bool is_zero(std::span<const Elem> v) {
  return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

/// dst += c * src
inline void axpy(const Field& f, std::span<Elem> dst, std::span<const Elem> src, Elem c) {
  if (c == 0) return;
  for (std::size_t k = 0; k < dst.size(); ++k) {
    if (src[k] == 0) continue;
    dst[k] = f.reduce(dst[k] + static_cast<std::uint64_t>(c) * src[k]);
  }
}

inline Vec add(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
  Vec v(a.begin(), a.end());
  axpy(f, v, b, 1);
  return v;
}

inline Vec sub(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
  Vec v(a.begin(), a.end());
  axpy(f, v, b, f.neg(1));
  return v;
}

inline Vec scale(const Field& f, std::span<const Elem> a, Elem c) {
  Vec v(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) v[k] = f.mul(a[k], c);
  return v;
}

/// Flattens a matrix row-major into a vector (the coordinate layout used for Hom spaces).
inline Vec flatten(const Matrix& m) { return m.entries(); }

inline Matrix unflatten(Field f, std::size_t rows, std::size_t cols, Vec v) {
  return Matrix(f, rows, cols, std::move(v));
}

}  // namespace trivext
