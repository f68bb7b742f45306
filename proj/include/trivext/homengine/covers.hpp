#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "trivext/algkit/hom.hpp"

namespace trivext {

/// The indecomposable projectives A e_i of a basic algebra with their top functionals.
struct ProjectiveSystem {
  std::vector<Projective> projectives;
  std::vector<Vec> top;       // top[i](a) = coefficient of e_i in a modulo rad A
  std::vector<Matrix> basis;  // dim A x dim(A e_i)
};

namespace detail {

inline ProjectiveSystem make_projective_system(const AlgebraPtr& alg) {
  if (!alg->is_basic()) throw std::invalid_argument("projective covers require a basic algebra");
  ProjectiveSystem ps;
  for (std::size_t i = 0; i < alg->num_idempotents(); ++i) {
    ps.projectives.push_back(indecomposable_projective(alg, i));
    ps.top.push_back(top_coefficient_functional(*alg, i));
    ps.basis.push_back(ps.projectives.back().space.basis_matrix());
  }
  return ps;
}

}  // namespace detail

/// Cached per algebra object; safe to call from concurrent tasks.
inline const ProjectiveSystem& projective_system(const AlgebraPtr& alg) {
  static std::mutex mu;
  static std::map<const Algebra*, std::pair<std::weak_ptr<const Algebra>, std::shared_ptr<ProjectiveSystem>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(alg.get());
  if (it != cache.end() && !it->second.first.expired()) return *it->second.second;
  for (auto i = cache.begin(); i != cache.end();) i = i->second.first.expired() ? cache.erase(i) : std::next(i);
  auto ps = std::make_shared<ProjectiveSystem>(detail::make_projective_system(alg));
  cache[alg.get()] = {alg, ps};
  return *ps;
}

/// dim(M) x dim(A) matrix of a -> a.w.
inline Matrix evaluation_matrix(const LeftModule& m, std::span<const Elem> w) {
  Matrix e(m.field(), m.dim, m.action.size());
  for (std::size_t s = 0; s < m.action.size(); ++s) {
    Vec col = m.action[s].apply(w);
    for (std::size_t r = 0; r < m.dim; ++r) e(r, s) = col[r];
  }
  return e;
}

/// Basis of e_i M as the independent columns of the projector.
inline std::vector<Vec> weight_space_basis(const LeftModule& m, std::size_t vertex) {
  Matrix pe = m.act(m.algebra->idempotents()[vertex]);
  auto [rows, piv] = row_echelon(pe).canonical();
  std::vector<Vec> out;
  for (auto c : piv) out.push_back(pe.column(c));
  return out;
}

/// Direct sum of indecomposable projectives, one summand per listed vertex.
inline LeftModule projective_module(const AlgebraPtr& alg, const std::vector<std::size_t>& vertices) {
  const auto& ps = projective_system(alg);
  LeftModule p = LeftModule::zero(alg);
  for (auto v : vertices) p = direct_sum(p, ps.projectives[v].module);
  return p;
}

struct ProjectiveCover {
  LeftModule P;
  std::vector<std::size_t> summands;  // vertex of each summand
  std::vector<std::size_t> offsets;   // start of each summand in P coordinates
  std::vector<Vec> generators;        // image of e_{summand} in M
  Matrix map;                         // dim M x dim P
  Subspace kernel;                    // inside P
  LeftModule syzygy;
  Matrix inclusion;                   // dim P x dim syzygy
};

/// Minimal projective cover P -> M of a module over a basic algebra.
inline ProjectiveCover projective_cover(const LeftModule& m) {
  const AlgebraPtr& alg = m.algebra;
  const Field& f = m.field();
  const auto& ps = projective_system(alg);
  std::vector<Matrix> rad_ops;
  for (const auto& r : alg->radical().basis()) rad_ops.push_back(m.act(r));
  Echelon top(f, m.dim);
  Subspace rad = image_sum(f, m.dim, rad_ops);
  for (const auto& v : rad.basis()) top.insert(v);
  ProjectiveCover c;
  for (std::size_t i = 0; i < alg->num_idempotents(); ++i)
    for (auto& v : weight_space_basis(m, i))
      if (top.insert(v)) {
        c.summands.push_back(i);
        c.generators.push_back(std::move(v));
      }
  c.P = projective_module(alg, c.summands);
  c.map = Matrix(f, m.dim, c.P.dim);
  std::size_t off = 0;
  for (std::size_t k = 0; k < c.summands.size(); ++k) {
    c.offsets.push_back(off);
    Matrix block = evaluation_matrix(m, c.generators[k]) * ps.basis[c.summands[k]];
    c.map.set_block(0, off, block);
    off += block.cols();
  }
  c.offsets.push_back(off);
  c.kernel = rank_and_kernel(c.map).kernel;
  if (c.P.dim - c.kernel.dim() != m.dim) throw std::logic_error("projective cover is not surjective");
  // minimality: each kernel vector has zero top component in every summand
  for (const auto& v : c.kernel.basis())
    for (std::size_t k = 0; k < c.summands.size(); ++k) {
      const auto& pr = ps.projectives[c.summands[k]];
      Vec piece(v.begin() + static_cast<std::ptrdiff_t>(c.offsets[k]),
                v.begin() + static_cast<std::ptrdiff_t>(c.offsets[k + 1]));
      Vec in_a = pr.space.combine(piece);
      Elem t = 0;
      for (std::size_t s = 0; s < in_a.size(); ++s) t = f.add(t, f.mul(in_a[s], ps.top[c.summands[k]][s]));
      if (t != 0) throw std::logic_error("projective cover kernel is not inside rad P");
    }
  c.syzygy = submodule(c.P, c.kernel);
  c.inclusion = c.kernel.basis_matrix();
  return c;
}

inline LeftModule syzygy(const LeftModule& m, std::size_t n = 1) {
  LeftModule cur = m;
  for (std::size_t k = 0; k < n && cur.dim > 0; ++k) cur = projective_cover(cur).syzygy;
  return cur;
}

/// Covers of Omega^0 M, Omega^1 M, ... computed on demand.
class SyzygyTower {
public:
  explicit SyzygyTower(LeftModule m) { modules_.push_back(std::move(m)); }

  /// Omega^k M; computes covers up to k.
  const LeftModule& module(std::size_t k) {
    extend(k);
    return modules_[k];
  }
  const ProjectiveCover& cover(std::size_t k) {
    extend(k + 1);
    return covers_[k];
  }
  std::size_t computed() const { return modules_.size(); }
  /// dimension of Omega^k without computing beyond what a cap allows
  std::optional<std::size_t> dim_with_cap(std::size_t k, std::size_t cap) {
    while (modules_.size() <= k) {
      if (modules_.back().dim > cap) return std::nullopt;
      step();
    }
    return modules_[k].dim;
  }

private:
  void extend(std::size_t k) {
    while (modules_.size() <= k) step();
  }
  void step() {
    covers_.push_back(projective_cover(modules_.back()));
    modules_.push_back(covers_.back().syzygy);
  }

  std::vector<LeftModule> modules_;
  std::vector<ProjectiveCover> covers_;
};

inline bool is_projective(const LeftModule& m) {
  if (m.dim == 0) return true;
  return projective_cover(m).kernel.dim() == 0;
}

}  // namespace trivext
