#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "trivext/homengine/iso.hpp"

namespace trivext {

/// Structural equality of algebras (same structure constants, idempotents and unit).
inline bool same_algebra(const Algebra& a, const Algebra& b) {
  if (&a == &b) return true;
  if (!(a.field() == b.field()) || a.dim() != b.dim() || a.unit() != b.unit() ||
      a.idempotents() != b.idempotents())
    return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!(a.left_mult(i) == b.left_mult(i))) return false;
  return true;
}

/// Opposite algebra, cached per algebra object.
inline AlgebraPtr opposite_of(const AlgebraPtr& alg) {
  static std::mutex mu;
  static std::map<const Algebra*, std::pair<std::weak_ptr<const Algebra>, AlgebraPtr>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(alg.get());
  if (it != cache.end() && !it->second.first.expired()) return it->second.second;
  for (auto i = cache.begin(); i != cache.end();) i = i->second.first.expired() ? cache.erase(i) : std::next(i);
  AlgebraPtr op = alg->opposite();
  cache[alg.get()] = {alg, op};
  return op;
}

/// A-B-bimodule: left_action[i] is a_i acting on the left, right_action[j] is x -> x.b_j
/// (contravariant in b).
struct Bimodule {
  AlgebraPtr left;
  AlgebraPtr right;
  std::size_t dim = 0;
  std::vector<Matrix> left_action;
  std::vector<Matrix> right_action;

  const Field& field() const { return left->field(); }

  Matrix act_left(std::span<const Elem> a) const { return combine(left_action, a); }
  Matrix act_right(std::span<const Elem> b) const { return combine(right_action, b); }

  LeftModule as_left() const { return LeftModule{left, dim, left_action}; }
  RightModule as_right() const { return RightModule{right, dim, right_action}; }

  /// Action matrices of algebra generators on both sides, for intertwiner systems.
  std::vector<Matrix> generator_actions() const {
    std::vector<Matrix> out;
    for (const auto& g : left->generators()) out.push_back(act_left(g));
    for (const auto& g : right->generators()) out.push_back(act_right(g));
    return out;
  }

private:
  Matrix combine(const std::vector<Matrix>& acts, std::span<const Elem> c) const {
    Matrix m(field(), dim, dim);
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0) m = m + acts[i].scaled(c[i]);
    return m;
  }
};

inline std::optional<ModuleViolation> bimodule_check(const Bimodule& x) {
  if (!(x.left->field() == x.right->field())) return ModuleViolation{0, 0, "algebras over different fields"};
  if (auto v = detail::check_actions(*x.left, x.dim, x.left_action, false)) {
    v->what = "left action: " + v->what;
    return v;
  }
  if (auto v = detail::check_actions(*x.right, x.dim, x.right_action, true)) {
    v->what = "right action: " + v->what;
    return v;
  }
  for (std::size_t i = 0; i < x.left_action.size(); ++i)
    for (std::size_t j = 0; j < x.right_action.size(); ++j)
      if (!(x.left_action[i] * x.right_action[j] == x.right_action[j] * x.left_action[i]))
        return ModuleViolation{i, j, "left and right actions do not commute"};
  return std::nullopt;
}

inline bool is_bimodule_map(const Bimodule& src, const Bimodule& dst, const Matrix& f) {
  if (f.rows() != dst.dim || f.cols() != src.dim) return false;
  for (std::size_t i = 0; i < src.left_action.size(); ++i)
    if (!(f * src.left_action[i] == dst.left_action[i] * f)) return false;
  for (std::size_t j = 0; j < src.right_action.size(); ++j)
    if (!(f * src.right_action[j] == dst.right_action[j] * f)) return false;
  return true;
}

/// A as an A-A-bimodule.
inline Bimodule regular_bimodule(const AlgebraPtr& a) {
  Bimodule b{a, a, a->dim(), {}, {}};
  for (std::size_t i = 0; i < a->dim(); ++i) {
    b.left_action.push_back(a->left_mult(i));
    b.right_action.push_back(a->right_mult(i));
  }
  return b;
}

/// Left A-module as an A-k-bimodule.
inline Bimodule left_as_bimodule(const LeftModule& m, const AlgebraPtr& k) {
  return Bimodule{m.algebra, k, m.dim, m.action, {Matrix::identity(m.field(), m.dim)}};
}

/// Right A-module as a k-A-bimodule.
inline Bimodule right_as_bimodule(const RightModule& m, const AlgebraPtr& k) {
  return Bimodule{k, m.algebra, m.dim, {Matrix::identity(m.field(), m.dim)}, m.action};
}

/// k^n as a bimodule over two copies of the ground field.
inline Bimodule ground_bimodule(const AlgebraPtr& k, std::size_t n) {
  Matrix id = Matrix::identity(k->field(), n);
  return Bimodule{k, k, n, {id}, {id}};
}

inline Bimodule direct_sum(const Bimodule& a, const Bimodule& b) {
  Bimodule s{a.left, a.right, a.dim + b.dim, {}, {}};
  for (std::size_t i = 0; i < a.left_action.size(); ++i) s.left_action.push_back(direct_sum(a.left_action[i], b.left_action[i]));
  for (std::size_t j = 0; j < a.right_action.size(); ++j) s.right_action.push_back(direct_sum(a.right_action[j], b.right_action[j]));
  return s;
}

inline IsoResult bimodule_iso_test(const Bimodule& x, const Bimodule& y, const IsoOptions& opt = {}) {
  if (!same_algebra(*x.left, *y.left) || !same_algebra(*x.right, *y.right)) {
    IsoResult r;
    r.kind = IsoKind::NotIsomorphic;
    r.reason = "bimodules over different algebras";
    return r;
  }
  return action_iso_test(x.field(), x.dim, y.dim, x.generator_actions(), y.generator_actions(), opt);
}

/// Projectivity of a right module: its minimal cover, seen over the opposite algebra,
/// has zero kernel. The certificate is the cover map.
struct ProjectivityResult {
  bool projective = false;
  std::size_t cover_dim = 0;
  std::size_t kernel_dim = 0;
  Matrix cover_map;
};

inline ProjectivityResult right_projective_test(const RightModule& m) {
  ProjectivityResult r;
  if (m.dim == 0) {
    r.projective = true;
    r.cover_map = Matrix(m.field(), 0, 0);
    return r;
  }
  LeftModule op = as_opposite_left(m, opposite_of(m.algebra));
  ProjectiveCover c = projective_cover(op);
  r.cover_dim = c.P.dim;
  r.kernel_dim = c.kernel.dim();
  r.projective = r.kernel_dim == 0;
  r.cover_map = c.map;
  return r;
}

inline ProjectivityResult left_projective_test(const LeftModule& m) {
  ProjectivityResult r;
  if (m.dim == 0) {
    r.projective = true;
    r.cover_map = Matrix(m.field(), 0, 0);
    return r;
  }
  ProjectiveCover c = projective_cover(m);
  r.cover_dim = c.P.dim;
  r.kernel_dim = c.kernel.dim();
  r.projective = r.kernel_dim == 0;
  r.cover_map = c.map;
  return r;
}

}  // namespace trivext
