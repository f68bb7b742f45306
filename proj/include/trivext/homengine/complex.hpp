#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "trivext/algkit/hom.hpp"

namespace trivext {

/// Complex X^lo -> ... -> X^hi of left modules, zero outside [lo, hi].
/// diff[k] is d^{lo+k}: X^{lo+k} -> X^{lo+k+1}.
class BoundedComplex {
public:
  BoundedComplex(AlgebraPtr alg, int lo, std::vector<LeftModule> objects, std::vector<Matrix> diff)
      : alg_(std::move(alg)), lo_(lo), objects_(std::move(objects)), diff_(std::move(diff)) {
    if (objects_.empty()) throw std::invalid_argument("complex needs at least one degree");
    if (diff_.size() + 1 != objects_.size()) throw std::invalid_argument("complex: wrong number of differentials");
    for (std::size_t k = 0; k < diff_.size(); ++k)
      if (diff_[k].rows() != objects_[k + 1].dim || diff_[k].cols() != objects_[k].dim)
        throw std::invalid_argument("complex: differential has wrong shape in degree " + std::to_string(lo_ + static_cast<int>(k)));
  }

  static BoundedComplex stalk(const LeftModule& m, int degree = 0) {
    return BoundedComplex(m.algebra, degree, {m}, {});
  }

  const AlgebraPtr& algebra() const { return alg_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(objects_.size()) - 1; }

  LeftModule object(int n) const {
    if (n < lo() || n > hi()) return LeftModule::zero(alg_);
    return objects_[static_cast<std::size_t>(n - lo_)];
  }
  std::size_t dim(int n) const { return n < lo() || n > hi() ? 0 : objects_[static_cast<std::size_t>(n - lo_)].dim; }

  /// d^n : X^n -> X^{n+1}
  Matrix differential(int n) const {
    if (n < lo() || n >= hi()) return Matrix(alg_->field(), dim(n + 1), dim(n));
    return diff_[static_cast<std::size_t>(n - lo_)];
  }

  /// d^{n+1} d^n = 0 and each d^n is a module map; returns the first failing degree.
  std::optional<std::string> check() const {
    for (int n = lo(); n <= hi(); ++n) {
      if (!is_module_map(object(n), object(n + 1), differential(n)))
        return "d^" + std::to_string(n) + " is not a module map";
      if (!(differential(n + 1) * differential(n)).is_zero())
        return "d^" + std::to_string(n + 1) + " d^" + std::to_string(n) + " != 0";
    }
    return std::nullopt;
  }

private:
  AlgebraPtr alg_;
  int lo_;
  std::vector<LeftModule> objects_;
  std::vector<Matrix> diff_;
};

/// Degreewise maps f^n : X^n -> Y^n for n in [lo, hi] of the union range.
struct ChainMap {
  BoundedComplex source;
  BoundedComplex target;
  std::vector<Matrix> components;  // indexed from lo()

  int lo() const { return std::min(source.lo(), target.lo()); }
  int hi() const { return std::max(source.hi(), target.hi()); }

  Matrix at(int n) const {
    if (n < lo() || n > hi()) return Matrix(source.algebra()->field(), target.dim(n), source.dim(n));
    return components[static_cast<std::size_t>(n - lo())];
  }

  std::optional<std::string> check() const {
    for (int n = lo() - 1; n <= hi(); ++n) {
      if (!(at(n + 1) * source.differential(n) == target.differential(n) * at(n)))
        return "does not commute with differentials in degree " + std::to_string(n);
      if (!is_module_map(source.object(n), target.object(n), at(n)))
        return "component " + std::to_string(n) + " is not a module map";
    }
    return std::nullopt;
  }

  static ChainMap from_function(const BoundedComplex& x, const BoundedComplex& y,
                                const std::function<Matrix(int)>& f) {
    ChainMap m{x, y, {}};
    for (int n = m.lo(); n <= m.hi(); ++n) m.components.push_back(f(n));
    return m;
  }
};

/// (X[k])^n = X^{n+k}, d_{X[k]}^n = (-1)^k d_X^{n+k}.
inline BoundedComplex shift(const BoundedComplex& c, int k) {
  std::vector<LeftModule> objs;
  std::vector<Matrix> diff;
  for (int n = c.lo(); n <= c.hi(); ++n) objs.push_back(c.object(n));
  for (int n = c.lo(); n < c.hi(); ++n) diff.push_back(k % 2 == 0 ? c.differential(n) : -c.differential(n));
  return BoundedComplex(c.algebra(), c.lo() - k, std::move(objs), std::move(diff));
}

struct Cone {
  BoundedComplex cone;
  ChainMap projection;  // Con(f) -> X[1], (Id, 0)
  ChainMap inclusion;   // Y -> Con(f), (0, Id)^t
};

/// Con(f)^n = X^{n+1} (+) Y^n with differential [[-d_X^{n+1}, 0], [f^{n+1}, d_Y^n]].
inline Cone mapping_cone(const ChainMap& f) {
  if (auto err = f.check()) throw std::invalid_argument("mapping_cone: not a chain map: " + *err);
  const BoundedComplex& x = f.source;
  const BoundedComplex& y = f.target;
  const Field& fld = x.algebra()->field();
  int lo = std::min(x.lo() - 1, y.lo());
  int hi = std::max(x.hi() - 1, y.hi());
  std::vector<LeftModule> objs;
  std::vector<Matrix> diff;
  for (int n = lo; n <= hi; ++n) objs.push_back(direct_sum(x.object(n + 1), y.object(n)));
  for (int n = lo; n < hi; ++n) {
    std::size_t a = x.dim(n + 1), b = y.dim(n), a2 = x.dim(n + 2), b2 = y.dim(n + 1);
    Matrix d(fld, a2 + b2, a + b);
    d.set_block(0, 0, -x.differential(n + 1));
    d.set_block(a2, 0, f.at(n + 1));
    d.set_block(a2, a, y.differential(n));
    diff.push_back(std::move(d));
  }
  BoundedComplex c(x.algebra(), lo, std::move(objs), std::move(diff));
  BoundedComplex x1 = shift(x, 1);
  ChainMap p = ChainMap::from_function(c, x1, [&](int n) {
    Matrix m(fld, x.dim(n + 1), c.dim(n));
    for (std::size_t i = 0; i < x.dim(n + 1); ++i) m(i, i) = 1;
    return m;
  });
  ChainMap in = ChainMap::from_function(y, c, [&](int n) {
    Matrix m(fld, c.dim(n), y.dim(n));
    for (std::size_t i = 0; i < y.dim(n); ++i) m(x.dim(n + 1) + i, i) = 1;
    return m;
  });
  return {std::move(c), std::move(p), std::move(in)};
}

/// H^n = ker d^n / im d^{n-1} with the induced action.
struct Homology {
  Subspace cycles;     // in X^n
  Quotient quotient;   // of cycle coordinates by boundaries
  LeftModule module;

  std::size_t dim() const { return quotient.dim(); }
  Vec cycle_representative(std::size_t k) const {
    return cycles.combine(quotient.lift(unit_vector(quotient.dim(), k)));
  }
  Vec classify(std::span<const Elem> cycle) const { return quotient.project(cycles.coordinates(cycle)); }
};

inline Homology homology(const BoundedComplex& c, int n) {
  const Field& f = c.algebra()->field();
  LeftModule x = c.object(n);
  Subspace z = rank_and_kernel(c.differential(n)).kernel;
  Matrix dprev = c.differential(n - 1);
  std::vector<Vec> bcoords;
  for (std::size_t j = 0; j < dprev.cols(); ++j) {
    Vec b = dprev.apply(unit_vector(dprev.cols(), j));
    if (!is_zero(b)) bcoords.push_back(z.coordinates(b));
  }
  Quotient q(Subspace::span(f, z.dim(), bcoords));
  LeftModule cyc = submodule(x, z);
  LeftModule h = quotient_module(cyc, q);
  return {std::move(z), std::move(q), std::move(h)};
}

/// Matrix of H^n(f) in the chosen homology bases.
inline Matrix homology_map(const ChainMap& f, int n) {
  Homology hx = homology(f.source, n);
  Homology hy = homology(f.target, n);
  Matrix m(f.source.algebra()->field(), hy.dim(), hx.dim());
  Matrix fn = f.at(n);
  for (std::size_t k = 0; k < hx.dim(); ++k) {
    Vec img = hy.classify(fn.apply(hx.cycle_representative(k)));
    for (std::size_t i = 0; i < img.size(); ++i) m(i, k) = img[i];
  }
  return m;
}

inline bool is_acyclic(const BoundedComplex& c) {
  for (int n = c.lo(); n <= c.hi(); ++n)
    if (homology(c, n).dim() != 0) return false;
  return true;
}

inline bool is_quasi_isomorphism(const ChainMap& f) {
  for (int n = f.lo(); n <= f.hi(); ++n) {
    Matrix h = homology_map(f, n);
    if (h.rows() != h.cols() || !is_invertible(h)) return false;
  }
  return true;
}

struct TriangleData {
  Cone cone;
  ChainMap t;                              // Con(f) -> Z, t^n = (0, g^n)
  bool t_quasi_iso = false;
  std::vector<Matrix> connecting;          // H^n(Z) -> H^{n+1}(X) from p o t^{-1}
  int lo = 0;
};

/// Triangle X -> Y -> Z -> X[1] attached to a degreewise exact 0 -> X -> Y -> Z -> 0.
inline TriangleData ses_to_triangle(const ChainMap& f, const ChainMap& g) {
  const Field& fld = f.source.algebra()->field();
  for (int n = std::min(f.lo(), g.lo()); n <= std::max(f.hi(), g.hi()); ++n) {
    Matrix fn = f.at(n), gn = g.at(n);
    bool exact = rank(fn) == f.source.dim(n) && rank(gn) == g.target.dim(n) && (gn * fn).is_zero() &&
                 rank(fn) + rank(gn) == f.target.dim(n);
    if (!exact) throw std::invalid_argument("ses_to_triangle: sequence not exact in degree " + std::to_string(n));
  }
  if (auto e = g.check()) throw std::invalid_argument("ses_to_triangle: g is not a chain map: " + *e);
  TriangleData td{mapping_cone(f), ChainMap{f.source, f.source, {}}, false, {}, 0};
  const BoundedComplex& c = td.cone.cone;
  const BoundedComplex& z = g.target;
  td.t = ChainMap::from_function(c, z, [&](int n) {
    Matrix m(fld, z.dim(n), c.dim(n));
    Matrix gn = g.at(n);
    std::size_t off = f.source.dim(n + 1);
    for (std::size_t i = 0; i < gn.rows(); ++i)
      for (std::size_t j = 0; j < gn.cols(); ++j) m(i, off + j) = gn(i, j);
    return m;
  });
  if (auto e = td.t.check()) throw std::logic_error("ses_to_triangle: t is not a chain map: " + *e);
  td.t_quasi_iso = is_quasi_isomorphism(td.t);
  td.lo = td.t.lo();
  if (td.t_quasi_iso) {
    for (int n = td.t.lo(); n <= td.t.hi(); ++n) {
      Matrix ht = homology_map(td.t, n);
      Matrix hp = homology_map(td.cone.projection, n);
      td.connecting.push_back(ht.rows() == 0 ? Matrix(fld, hp.rows(), 0) : hp * *inverse(ht));
    }
  }
  return td;
}

}  // namespace trivext
