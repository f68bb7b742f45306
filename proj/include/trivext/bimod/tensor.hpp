#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trivext/bimod/bimodule.hpp"

namespace trivext {

/// X (x)_B Y as a quotient of X (x)_k Y (coordinate x * dim Y + y). The section sends
/// the k-th basis vector to the free coordinate pair free_pairs[k].
struct Tensor {
  Bimodule module;
  Quotient quotient;
  Matrix projection;  // dim module x (dim X * dim Y)
  std::size_t dx = 0;
  std::size_t dy = 0;

  std::size_t dim() const { return module.dim; }
  std::pair<std::size_t, std::size_t> free_pair(std::size_t k) const {
    std::size_t c = quotient.free_columns()[k];
    return {c / dy, c % dy};
  }
  /// Class of x (x) y.
  Vec pure(std::span<const Elem> x, std::span<const Elem> y) const {
    const Field& f = module.field();
    Vec v(dx * dy, 0);
    for (std::size_t i = 0; i < dx; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < dy; ++j)
        if (y[j] != 0) v[i * dy + j] = f.mul(x[i], y[j]);
    }
    return projection.apply(v);
  }
  Matrix section() const { return quotient.section(); }
};

namespace detail {

// P * (columns of kron(a, b) at the free pairs of src)
inline Matrix kron_on_section(const Matrix& proj, const Tensor& src, std::size_t dx2, std::size_t dy2,
                              const Matrix& a, const Matrix& b) {
  const Field& f = a.field();
  Matrix cols(f, dx2 * dy2, src.dim());
  for (std::size_t k = 0; k < src.dim(); ++k) {
    auto [x, y] = src.free_pair(k);
    for (std::size_t i = 0; i < dx2; ++i) {
      Elem ax = a(i, x);
      if (ax == 0) continue;
      for (std::size_t j = 0; j < dy2; ++j) {
        Elem by = b(j, y);
        if (by != 0) cols(i * dy2 + j, k) = f.mul(ax, by);
      }
    }
  }
  return proj * cols;
}

}  // namespace detail

/// X (x)_B Y for an A-B-bimodule X and a B-C-bimodule Y.
inline Tensor tensor_over(const Bimodule& x, const Bimodule& y) {
  if (!same_algebra(*x.right, *y.left)) throw std::invalid_argument("tensor_over: middle algebras differ");
  const Field& f = x.field();
  const std::size_t dx = x.dim, dy = y.dim, n = dx * dy;
  Echelon rel(f, n);
  // x.h (x) y - x (x) h.y over algebra generators h of the middle algebra
  for (const auto& h : x.right->generators()) {
    Matrix rh = x.act_right(h);
    Matrix lh = y.act_left(h);
    for (std::size_t i = 0; i < dx; ++i)
      for (std::size_t j = 0; j < dy; ++j) {
        Vec v(n, 0);
        for (std::size_t i2 = 0; i2 < dx; ++i2)
          if (rh(i2, i) != 0) v[i2 * dy + j] = f.add(v[i2 * dy + j], rh(i2, i));
        for (std::size_t j2 = 0; j2 < dy; ++j2)
          if (lh(j2, j) != 0) v[i * dy + j2] = f.sub(v[i * dy + j2], lh(j2, j));
        if (!is_zero(v)) rel.insert(std::move(v));
      }
  }
  Tensor t;
  t.dx = dx;
  t.dy = dy;
  t.quotient = Quotient(Subspace::from_echelon(rel));
  t.projection = t.quotient.projection();
  t.module = Bimodule{x.left, y.right, t.quotient.dim(), {}, {}};
  Matrix idx = Matrix::identity(f, dx), idy = Matrix::identity(f, dy);
  for (const auto& a : x.left_action)
    t.module.left_action.push_back(detail::kron_on_section(t.projection, t, dx, dy, a, idy));
  for (const auto& c : y.right_action)
    t.module.right_action.push_back(detail::kron_on_section(t.projection, t, dx, dy, idx, c));
  return t;
}

/// X (x)_A M as a left module, for an (., A)-bimodule X and a left A-module M.
inline Tensor tensor_module(const Bimodule& x, const LeftModule& m) {
  return tensor_over(x, left_as_bimodule(m, Algebra::ground(m.field())));
}

/// f (x) g : X (x) Y -> X' (x) Y' on the quotients.
inline Matrix tensor_maps(const Tensor& src, const Tensor& dst, const Matrix& f, const Matrix& g) {
  if (f.cols() != src.dx || g.cols() != src.dy || f.rows() != dst.dx || g.rows() != dst.dy)
    throw std::invalid_argument("tensor_maps: shape mismatch");
  return detail::kron_on_section(dst.projection, src, dst.dx, dst.dy, f, g);
}

/// X (x)_B B -> X, x (x) b -> x.b, and its inverse x -> x (x) 1.
struct UnitIso {
  Tensor tensor;
  Matrix forward;   // dim X x dim tensor
  Matrix backward;  // dim tensor x dim X
};

inline UnitIso right_unit(const Bimodule& x) {
  const AlgebraPtr& b = x.right;
  UnitIso u{tensor_over(x, regular_bimodule(b)), {}, {}};
  const Field& f = x.field();
  u.forward = Matrix(f, x.dim, u.tensor.dim());
  for (std::size_t k = 0; k < u.tensor.dim(); ++k) {
    auto [i, j] = u.tensor.free_pair(k);
    Vec col = x.right_action[j].apply(unit_vector(x.dim, i));
    for (std::size_t r = 0; r < x.dim; ++r) u.forward(r, k) = col[r];
  }
  u.backward = Matrix(f, u.tensor.dim(), x.dim);
  for (std::size_t i = 0; i < x.dim; ++i) {
    Vec col = u.tensor.pure(unit_vector(x.dim, i), b->unit());
    for (std::size_t r = 0; r < col.size(); ++r) u.backward(r, i) = col[r];
  }
  return u;
}

/// A (x)_A X -> X, a (x) x -> a.x, and its inverse x -> 1 (x) x.
inline UnitIso left_unit(const Bimodule& x) {
  const AlgebraPtr& a = x.left;
  UnitIso u{tensor_over(regular_bimodule(a), x), {}, {}};
  const Field& f = x.field();
  u.forward = Matrix(f, x.dim, u.tensor.dim());
  for (std::size_t k = 0; k < u.tensor.dim(); ++k) {
    auto [i, j] = u.tensor.free_pair(k);
    Vec col = x.left_action[i].apply(unit_vector(x.dim, j));
    for (std::size_t r = 0; r < x.dim; ++r) u.forward(r, k) = col[r];
  }
  u.backward = Matrix(f, u.tensor.dim(), x.dim);
  for (std::size_t j = 0; j < x.dim; ++j) {
    Vec col = u.tensor.pure(a->unit(), unit_vector(x.dim, j));
    for (std::size_t r = 0; r < col.size(); ++r) u.backward(r, j) = col[r];
  }
  return u;
}

/// (X (x) Y) (x) Z -> X (x) (Y (x) Z), chased through the k-tensor X (x)_k Y (x)_k Z.
struct Associator {
  Tensor xy, xy_z, yz, x_yz;
  Matrix forward;   // dim x_yz x dim xy_z
  Matrix backward;
};

/// Forward associator between already computed tensors xy_z = (X (x) Y) (x) Z and
/// x_yz = X (x) (Y (x) Z).
inline Matrix associator_map(const Tensor& xy, const Tensor& xy_z, const Tensor& yz, const Tensor& x_yz) {
  if (xy_z.dx != xy.dim() || x_yz.dy != yz.dim() || x_yz.dx != xy.dx || yz.dx != xy.dy || yz.dy != xy_z.dy)
    throw std::invalid_argument("associator_map: tensors do not fit together");
  const Field& f = xy.module.field();
  const std::size_t dz = yz.dy, dyz = yz.dim();
  Matrix cols(f, xy.dx * dyz, xy_z.dim());
  for (std::size_t k = 0; k < xy_z.dim(); ++k) {
    auto [r, zc] = xy_z.free_pair(k);
    auto [xc, yc] = xy.free_pair(r);
    // x (x) [y (x) z]
    for (std::size_t m = 0; m < dyz; ++m) cols(xc * dyz + m, k) = yz.projection(m, yc * dz + zc);
  }
  return x_yz.projection * cols;
}

inline Associator associate_tensor(const Bimodule& x, const Bimodule& y, const Bimodule& z) {
  Associator a;
  a.xy = tensor_over(x, y);
  a.xy_z = tensor_over(a.xy.module, z);
  a.yz = tensor_over(y, z);
  a.x_yz = tensor_over(x, a.yz.module);
  a.forward = associator_map(a.xy, a.xy_z, a.yz, a.x_yz);
  auto inv = inverse(a.forward);
  if (!inv) throw std::logic_error("associate_tensor: map is not invertible");
  a.backward = std::move(*inv);
  return a;
}

}  // namespace trivext
