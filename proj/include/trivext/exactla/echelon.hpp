#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>

#include "trivext/exactla/matrix.hpp"

namespace trivext {

/// Incrementally maintained reduced row echelon form. Pivot of a row is its
/// first nonzero entry; every stored row is zero at every other row's pivot.
class Echelon {
public:
  Echelon(Field f, std::size_t ncols) : field_(f), ncols_(ncols), pivot_row_(ncols, npos) {}

  std::size_t ncols() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }
  const Field& field() const { return field_; }

  /// Reduces v in place against the stored rows.
  void reduce(std::span<Elem> v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      Elem c = v[pivots_[r]];
      if (c != 0) axpy(field_, v, rows_[r], field_.neg(c));
    }
  }

  /// Returns true when v was independent of the stored rows.
  bool insert(Vec v) {
    if (v.size() != ncols_) throw std::invalid_argument("echelon row length mismatch");
    reduce(v);
    auto it = std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; });
    if (it == v.end()) return false;
    std::size_t pc = static_cast<std::size_t>(it - v.begin());
    Elem inv = field_.inv(*it);
    for (auto& e : v) e = field_.mul(e, inv);
    for (auto& row : rows_) {
      Elem c = row[pc];
      if (c != 0) axpy(field_, row, v, field_.neg(c));
    }
    pivot_row_[pc] = rows_.size();
    pivots_.push_back(pc);
    rows_.push_back(std::move(v));
    return true;
  }

  bool contains(std::span<const Elem> v) const {
    Vec w(v.begin(), v.end());
    reduce(w);
    return is_zero(w);
  }

  /// Rows sorted by pivot column: the canonical RREF of the span.
  std::pair<std::vector<Vec>, std::vector<std::size_t>> canonical() const {
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
    std::vector<Vec> rows;
    std::vector<std::size_t> piv;
    for (auto i : order) {
      rows.push_back(rows_[i]);
      piv.push_back(pivots_[i]);
    }
    return {std::move(rows), std::move(piv)};
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
  Field field_;
  std::size_t ncols_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> pivot_row_;
};

/// A subspace of F_p^n held as its canonical reduced echelon basis.
class Subspace {
public:
  Subspace() = default;
  Subspace(Field f, std::size_t ambient) : field_(f), ambient_(ambient) {}

  static Subspace span(Field f, std::size_t ambient, std::span<const Vec> vectors) {
    Echelon e(f, ambient);
    for (const auto& v : vectors) e.insert(v);
    return from_echelon(e);
  }

  static Subspace from_echelon(const Echelon& e) {
    Subspace s(e.field(), e.ncols());
    auto [rows, piv] = e.canonical();
    s.basis_ = std::move(rows);
    s.pivots_ = std::move(piv);
    return s;
  }

  static Subspace whole(Field f, std::size_t n) {
    Subspace s(f, n);
    for (std::size_t i = 0; i < n; ++i) {
      s.basis_.push_back(unit_vector(n, i));
      s.pivots_.push_back(i);
    }
    return s;
  }

  /// Column space of a matrix.
  static Subspace column_space(const Matrix& m) {
    Echelon e(m.field(), m.rows());
    for (std::size_t j = 0; j < m.cols(); ++j) e.insert(m.column(j));
    return from_echelon(e);
  }

  const Field& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  Echelon echelon() const {
    Echelon e(field_, ambient_);
    for (const auto& b : basis_) e.insert(b);
    return e;
  }

  void reduce(std::span<Elem> v) const {
    for (std::size_t r = 0; r < basis_.size(); ++r) {
      Elem c = v[pivots_[r]];
      if (c != 0) axpy(field_, v, basis_[r], field_.neg(c));
    }
  }

  bool contains(std::span<const Elem> v) const {
    Vec w(v.begin(), v.end());
    reduce(w);
    return is_zero(w);
  }

  /// Coordinates of a member vector with respect to basis(). Read off at the pivots.
  Vec coordinates(std::span<const Elem> v) const {
    Vec c(basis_.size());
    for (std::size_t r = 0; r < basis_.size(); ++r) c[r] = v[pivots_[r]];
    return c;
  }

  std::optional<Vec> coordinates_checked(std::span<const Elem> v) const {
    if (!contains(v)) return std::nullopt;
    return coordinates(v);
  }

  Vec combine(std::span<const Elem> coords) const {
    Vec v(ambient_, 0);
    for (std::size_t r = 0; r < basis_.size(); ++r) axpy(field_, v, basis_[r], coords[r]);
    return v;
  }

  /// ambient x dim matrix with the basis as columns.
  Matrix basis_matrix() const { return Matrix::from_columns(field_, ambient_, basis_); }

  bool is_subspace_of(const Subspace& other) const {
    return std::all_of(basis_.begin(), basis_.end(),
                       [&](const Vec& b) { return other.contains(b); });
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

private:
  Field field_;
  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

/// Quotient F^n / sub with the complement basis given by the non-pivot coordinates.
class Quotient {
public:
  Quotient() = default;
  explicit Quotient(Subspace sub) : sub_(std::move(sub)) {
    std::vector<bool> is_pivot(sub_.ambient_dim(), false);
    for (auto p : sub_.pivots()) is_pivot[p] = true;
    for (std::size_t j = 0; j < sub_.ambient_dim(); ++j)
      if (!is_pivot[j]) free_.push_back(j);
  }

  const Subspace& kernel() const { return sub_; }
  std::size_t ambient_dim() const { return sub_.ambient_dim(); }
  std::size_t dim() const { return free_.size(); }
  const std::vector<std::size_t>& free_columns() const { return free_; }

  Vec project(std::span<const Elem> v) const {
    Vec w(v.begin(), v.end());
    sub_.reduce(w);
    Vec q(free_.size());
    for (std::size_t k = 0; k < free_.size(); ++k) q[k] = w[free_[k]];
    return q;
  }

  Vec lift(std::span<const Elem> q) const {
    Vec v(sub_.ambient_dim(), 0);
    for (std::size_t k = 0; k < free_.size(); ++k) v[free_[k]] = q[k];
    return v;
  }

  /// dim x ambient matrix of the projection.
  Matrix projection() const {
    const Field& f = sub_.field();
    Matrix p(f, free_.size(), sub_.ambient_dim());
    std::vector<std::size_t> slot(sub_.ambient_dim(), Echelon::npos);
    for (std::size_t k = 0; k < free_.size(); ++k) {
      slot[free_[k]] = k;
      p(k, free_[k]) = 1;
    }
    for (std::size_t r = 0; r < sub_.dim(); ++r) {
      const auto& row = sub_.basis()[r];
      std::size_t j = sub_.pivots()[r];
      for (std::size_t k = 0; k < free_.size(); ++k) p(k, j) = f.neg(row[free_[k]]);
    }
    return p;
  }

  /// ambient x dim matrix of the chosen section.
  Matrix section() const {
    Matrix s(sub_.field(), sub_.ambient_dim(), free_.size());
    for (std::size_t k = 0; k < free_.size(); ++k) s(free_[k], k) = 1;
    return s;
  }

private:
  Subspace sub_;
  std::vector<std::size_t> free_;
};

struct RankKernel {
  std::size_t rank;
  Subspace kernel;
};

/// Kernel of the RREF system whose rows are given by an Echelon over ncols unknowns.
inline Subspace kernel_of(const Echelon& e) {
  const Field& f = e.field();
  auto [rows, piv] = e.canonical();
  std::vector<bool> is_pivot(e.ncols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<Vec> ker;
  for (std::size_t c = 0; c < e.ncols(); ++c) {
    if (is_pivot[c]) continue;
    Vec v(e.ncols(), 0);
    v[c] = 1;
    for (std::size_t r = 0; r < rows.size(); ++r) v[piv[r]] = f.neg(rows[r][c]);
    ker.push_back(std::move(v));
  }
  return Subspace::span(f, e.ncols(), ker);
}

inline Echelon row_echelon(const Matrix& m) {
  Echelon e(m.field(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto r = m.row(i);
    if (!is_zero(r)) e.insert(Vec(r.begin(), r.end()));
  }
  return e;
}

inline std::size_t rank(const Matrix& m) { return row_echelon(m).rank(); }

inline RankKernel rank_and_kernel(const Matrix& m) {
  Echelon e = row_echelon(m);
  return {e.rank(), kernel_of(e)};
}

inline Quotient quotient_basis(const Subspace& sub) { return Quotient(sub); }

/// Reusable solver for m x = b. Columns of m are eliminated while tracking the
/// combination of original columns that produced each echelon row.
class Solver {
public:
  explicit Solver(const Matrix& m) : field_(m.field()), rows_(m.rows()), cols_(m.cols()),
                                     ech_(m.field(), m.rows() + m.cols()) {
    Echelon dep(field_, cols_);
    for (std::size_t j = 0; j < cols_; ++j) {
      Vec v(rows_ + cols_, 0);
      for (std::size_t i = 0; i < rows_; ++i) v[i] = m(i, j);
      v[rows_ + j] = 1;
      ech_.reduce(v);
      bool col_part_zero = std::all_of(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(rows_),
                                       [](Elem e) { return e == 0; });
      if (col_part_zero) {
        dep.insert(Vec(v.begin() + static_cast<std::ptrdiff_t>(rows_), v.end()));
      } else {
        ech_.insert(std::move(v));
      }
    }
    kernel_ = Subspace::from_echelon(dep);
  }

  std::size_t rank() const { return ech_.rank(); }
  const Subspace& kernel() const { return kernel_; }

  std::optional<Vec> solve(std::span<const Elem> b) const {
    if (b.size() != rows_) throw std::invalid_argument("solve: right-hand side length mismatch");
    Vec v(rows_ + cols_, 0);
    std::copy(b.begin(), b.end(), v.begin());
    ech_.reduce(v);
    for (std::size_t i = 0; i < rows_; ++i)
      if (v[i] != 0) return std::nullopt;
    Vec x(cols_);
    for (std::size_t j = 0; j < cols_; ++j) x[j] = field_.neg(v[rows_ + j]);
    return x;
  }

private:
  Field field_;
  std::size_t rows_, cols_;
  Echelon ech_;
  Subspace kernel_;
};

struct Solution {
  Vec particular;
  Subspace kernel;
};

inline std::optional<Solution> solve(const Matrix& m, std::span<const Elem> b) {
  Solver s(m);
  auto x = s.solve(b);
  if (!x) return std::nullopt;
  return Solution{std::move(*x), s.kernel()};
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  Solver s(m);
  if (s.rank() != m.rows()) return std::nullopt;
  Matrix inv(m.field(), m.rows(), m.rows());
  for (std::size_t j = 0; j < m.rows(); ++j) {
    auto x = s.solve(unit_vector(m.rows(), j));
    for (std::size_t i = 0; i < m.rows(); ++i) inv(i, j) = (*x)[i];
  }
  return inv;
}

inline bool is_invertible(const Matrix& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

/// Sum of subspaces of the same ambient space.
inline Subspace sum(const Subspace& a, const Subspace& b) {
  Echelon e = a.echelon();
  for (const auto& v : b.basis()) e.insert(v);
  return Subspace::from_echelon(e);
}

}  // namespace trivext
