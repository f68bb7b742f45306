#pragma once

#include <memory>
#include <string>
#include <vector>

#include "trivext/bimod/tensor.hpp"

namespace trivext {

/// T = A (+) X with (a, x)(a', x') = (aa', a.x' + x.a'). Basis: A basis, then X basis.
struct TrivialExtension {
  AlgebraPtr base;
  Bimodule bimodule;
  AlgebraPtr total;
  Matrix embed_a;  // dim T x dim A
  Matrix embed_x;  // dim T x dim X

  std::size_t dim_a() const { return base->dim(); }
  std::size_t dim_x() const { return bimodule.dim; }

  /// T as a T-A-bimodule (right action through the embedding of A).
  Bimodule as_left_t_right_a() const {
    Bimodule b{total, base, total->dim(), {}, {}};
    for (std::size_t i = 0; i < total->dim(); ++i) b.left_action.push_back(total->left_mult(i));
    for (std::size_t j = 0; j < base->dim(); ++j) b.right_action.push_back(total->right_mult(j));
    return b;
  }
  /// T as an A-T-bimodule.
  Bimodule as_left_a_right_t() const {
    Bimodule b{base, total, total->dim(), {}, {}};
    for (std::size_t i = 0; i < base->dim(); ++i) b.left_action.push_back(total->left_mult(i));
    for (std::size_t j = 0; j < total->dim(); ++j) b.right_action.push_back(total->right_mult(j));
    return b;
  }
};

using TrivialExtensionPtr = std::shared_ptr<const TrivialExtension>;

inline TrivialExtensionPtr build_trivial_extension(const AlgebraPtr& a, const Bimodule& x,
                                                    std::vector<std::string> x_labels = {}) {
  if (!same_algebra(*x.left, *a) || !same_algebra(*x.right, *a))
    throw std::invalid_argument("trivial extension: bimodule is not over the base algebra");
  if (auto v = bimodule_check(x)) throw std::invalid_argument("trivial extension: " + v->what);
  const Field& f = a->field();
  const std::size_t da = a->dim(), dx = x.dim, dt = da + dx;
  Algebra::Data d;
  d.field = f;
  d.dim = dt;
  d.mult.assign(dt, std::vector<Vec>(dt, Vec(dt, 0)));
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      Vec c = a->coefficients_of(i, j);
      std::copy(c.begin(), c.end(), d.mult[i][j].begin());
    }
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < dx; ++j) {
      Vec lx = x.left_action[i].column(j);   // a_i . x_j
      Vec xr = x.right_action[i].column(j);  // x_j . a_i
      std::copy(lx.begin(), lx.end(), d.mult[i][da + j].begin() + static_cast<std::ptrdiff_t>(da));
      std::copy(xr.begin(), xr.end(), d.mult[da + j][i].begin() + static_cast<std::ptrdiff_t>(da));
    }
  d.unit.assign(dt, 0);
  std::copy(a->unit().begin(), a->unit().end(), d.unit.begin());
  for (const auto& e : a->idempotents()) {
    Vec v(dt, 0);
    std::copy(e.begin(), e.end(), v.begin());
    d.idempotents.push_back(std::move(v));
  }
  for (const auto& r : a->radical().basis()) {
    Vec v(dt, 0);
    std::copy(r.begin(), r.end(), v.begin());
    d.radical.push_back(std::move(v));
  }
  for (std::size_t j = 0; j < dx; ++j) d.radical.push_back(unit_vector(dt, da + j));
  d.labels = a->labels();
  for (std::size_t j = 0; j < dx; ++j)
    d.labels.push_back(j < x_labels.size() ? x_labels[j] : "x" + std::to_string(j));
  auto t = std::make_shared<TrivialExtension>();
  t->base = a;
  t->bimodule = x;
  t->total = std::make_shared<const Algebra>(std::move(d));
  t->embed_a = Matrix(f, dt, da);
  for (std::size_t i = 0; i < da; ++i) t->embed_a(i, i) = 1;
  t->embed_x = Matrix(f, dt, dx);
  for (std::size_t j = 0; j < dx; ++j) t->embed_x(da + j, j) = 1;
  return t;
}

}  // namespace trivext
