#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trivext/algkit/algebra.hpp"

namespace trivext {

/// Finite-dimensional left module: one action matrix per algebra basis element.
struct LeftModule {
  AlgebraPtr algebra;
  std::size_t dim = 0;
  std::vector<Matrix> action;

  const Field& field() const { return algebra->field(); }

  Matrix act(std::span<const Elem> a) const {
    Matrix m(field(), dim, dim);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != 0) m = m + action[i].scaled(a[i]);
    return m;
  }

  static LeftModule zero(AlgebraPtr alg) {
    LeftModule m{alg, 0, {}};
    m.action.assign(alg->dim(), Matrix(alg->field(), 0, 0));
    return m;
  }
};

/// Right module with x.a = action[a] * x on column vectors; action is contravariant.
struct RightModule {
  AlgebraPtr algebra;
  std::size_t dim = 0;
  std::vector<Matrix> action;

  const Field& field() const { return algebra->field(); }

  Matrix act(std::span<const Elem> a) const {
    Matrix m(field(), dim, dim);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != 0) m = m + action[i].scaled(a[i]);
    return m;
  }
};

/// Module morphism: matrix of shape target.dim x source.dim.
struct ModuleMap {
  Matrix matrix;
};

struct ModuleViolation {
  std::size_t i;
  std::size_t j;
  std::string what;
};

namespace detail {

inline std::optional<ModuleViolation> check_actions(const Algebra& alg, std::size_t dim,
                                                    const std::vector<Matrix>& action,
                                                    bool contravariant) {
  if (action.size() != alg.dim()) return ModuleViolation{0, 0, "wrong number of action matrices"};
  for (std::size_t i = 0; i < action.size(); ++i)
    if (action[i].rows() != dim || action[i].cols() != dim)
      return ModuleViolation{i, i, "action matrix has wrong shape"};
  const Field& f = alg.field();
  auto combo = [&](const Vec& c) {
    Matrix m(f, dim, dim);
    for (std::size_t k = 0; k < c.size(); ++k)
      if (c[k] != 0) m = m + action[k].scaled(c[k]);
    return m;
  };
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = 0; j < alg.dim(); ++j) {
      Matrix lhs = action[i] * action[j];
      Matrix rhs = contravariant ? combo(alg.coefficients_of(j, i)) : combo(alg.coefficients_of(i, j));
      if (!(lhs == rhs)) return ModuleViolation{i, j, "action does not respect the product"};
    }
  if (!(combo(alg.unit()) == Matrix::identity(f, dim)))
    return ModuleViolation{0, 0, "unit does not act as the identity"};
  return std::nullopt;
}

}  // namespace detail

inline std::optional<ModuleViolation> check_module(const LeftModule& m) {
  return detail::check_actions(*m.algebra, m.dim, m.action, false);
}

inline std::optional<ModuleViolation> check_module(const RightModule& m) {
  return detail::check_actions(*m.algebra, m.dim, m.action, true);
}

inline bool is_module_map(const LeftModule& src, const LeftModule& dst, const Matrix& f) {
  if (f.rows() != dst.dim || f.cols() != src.dim) return false;
  for (std::size_t i = 0; i < src.action.size(); ++i)
    if (!(f * src.action[i] == dst.action[i] * f)) return false;
  return true;
}

inline LeftModule regular_module(AlgebraPtr alg) {
  LeftModule m{alg, alg->dim(), {}};
  for (std::size_t i = 0; i < alg->dim(); ++i) m.action.push_back(alg->left_mult(i));
  return m;
}

inline RightModule right_regular_module(AlgebraPtr alg) {
  RightModule m{alg, alg->dim(), {}};
  for (std::size_t i = 0; i < alg->dim(); ++i) m.action.push_back(alg->right_mult(i));
  return m;
}

/// Right A-modules are left A^op-modules with the same matrices.
inline LeftModule as_opposite_left(const RightModule& m, AlgebraPtr opposite) {
  return LeftModule{std::move(opposite), m.dim, m.action};
}

inline LeftModule direct_sum(const LeftModule& a, const LeftModule& b) {
  LeftModule m{a.algebra, a.dim + b.dim, {}};
  for (std::size_t i = 0; i < a.action.size(); ++i)
    m.action.push_back(direct_sum(a.action[i], b.action[i]));
  return m;
}

inline LeftModule direct_power(const LeftModule& a, std::size_t n) {
  LeftModule m = LeftModule::zero(a.algebra);
  for (std::size_t k = 0; k < n; ++k) m = direct_sum(m, a);
  return m;
}

/// Module with base change: action' = g^{-1} action g.
inline LeftModule base_change(const LeftModule& m, const Matrix& g) {
  auto inv = inverse(g);
  if (!inv) throw std::invalid_argument("base change matrix is singular");
  LeftModule out{m.algebra, m.dim, {}};
  for (const auto& a : m.action) out.action.push_back(*inv * a * g);
  return out;
}

/// Submodule on an invariant subspace, in the coordinates of the subspace basis.
template <class Module>
Module submodule(const Module& m, const Subspace& u) {
  Module s{m.algebra, u.dim(), {}};
  Matrix basis = u.basis_matrix();
  for (const auto& a : m.action) {
    Matrix img = a * basis;
    Matrix coords(m.field(), u.dim(), u.dim());
    for (std::size_t j = 0; j < u.dim(); ++j) {
      auto c = u.coordinates_checked(img.column(j));
      if (!c) throw std::invalid_argument("submodule: subspace is not invariant");
      for (std::size_t i = 0; i < u.dim(); ++i) coords(i, j) = (*c)[i];
    }
    s.action.push_back(std::move(coords));
  }
  return s;
}

template <class Module>
Module quotient_module(const Module& m, const Quotient& q) {
  Module out{m.algebra, q.dim(), {}};
  Matrix p = q.projection();
  Matrix s = q.section();
  for (const auto& a : m.action) out.action.push_back(p * a * s);
  return out;
}

/// Subspace of the module generated by given vectors (closure under the action).
inline Subspace generated_submodule(const LeftModule& m, std::span<const Vec> gens) {
  Echelon e(m.field(), m.dim);
  for (const auto& g : gens) e.insert(g);
  // A·v is spanned by b_i v, so one pass over the basis suffices for each v
  std::vector<Vec> out;
  for (const auto& g : gens)
    for (const auto& a : m.action) out.push_back(a.apply(g));
  for (auto& v : out) e.insert(v);
  return Subspace::from_echelon(e);
}

/// Sum of images of the given operators applied to the whole module.
inline Subspace image_sum(const Field& f, std::size_t dim, std::span<const Matrix> ops) {
  Echelon e(f, dim);
  for (const auto& op : ops)
    for (std::size_t j = 0; j < op.cols(); ++j) e.insert(op.column(j));
  return Subspace::from_echelon(e);
}

/// dim of e_i M for each idempotent.
inline std::vector<std::size_t> weight_vector(const LeftModule& m) {
  std::vector<std::size_t> w;
  for (const auto& e : m.algebra->idempotents()) w.push_back(trivext::rank(m.act(e)));
  return w;
}

/// Coefficient of e_vertex modulo the radical, for every basis element of a basic algebra.
inline Vec top_coefficient_functional(const Algebra& alg, std::size_t vertex) {
  if (!alg.is_basic()) throw std::invalid_argument("simple modules require a basic algebra");
  const Field& f = alg.field();
  // columns: idempotents then radical basis; solve b = sum c_j e_j + r
  std::vector<Vec> cols = alg.idempotents();
  for (const auto& r : alg.radical().basis()) cols.push_back(r);
  Solver s(Matrix::from_columns(f, alg.dim(), cols));
  Vec out(alg.dim());
  for (std::size_t i = 0; i < alg.dim(); ++i) out[i] = (*s.solve(alg.basis_vector(i)))[vertex];
  return out;
}

/// Simple module at a vertex of a basic algebra.
inline LeftModule simple_module(AlgebraPtr alg, std::size_t vertex) {
  Vec c = top_coefficient_functional(*alg, vertex);
  LeftModule m{alg, 1, {}};
  for (std::size_t i = 0; i < alg->dim(); ++i) m.action.push_back(Matrix(alg->field(), 1, 1, {c[i]}));
  return m;
}

}  // namespace trivext
