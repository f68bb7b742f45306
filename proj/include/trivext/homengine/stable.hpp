#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "trivext/homengine/iso.hpp"

namespace trivext {

/// Hom(M, N) modulo maps factoring through a projective module.
struct StableHom {
  HomSpace hom;
  Subspace factoring;  // in Hom coordinates
  Quotient quotient;

  std::size_t dim() const { return quotient.dim(); }
  /// Representative module map of the k-th stable basis class.
  Matrix representative(std::size_t k) const {
    return hom.combine(quotient.lift(unit_vector(quotient.dim(), k)));
  }
  /// Class of a module map M -> N in stable coordinates.
  Vec classify(const Matrix& f) const { return quotient.project(hom.coordinates(f)); }
  bool factors_through_projective(const Matrix& f) const { return is_zero(classify(f)); }
};

/// Every map through a projective factors through a sum of A e_i, and Hom(A e_i, N) = e_i N
/// (x -> x.w), so the factoring maps are spanned by m -> f(m).w with f in Hom(M, A e_i).
inline StableHom stable_hom(const LeftModule& m, const LeftModule& n) {
  const Field& fld = m.field();
  HomSpace h = hom_space(m, n);
  const auto& ps = projective_system(m.algebra);
  Echelon fac(fld, h.dim());
  if (h.dim() > 0) {
    for (std::size_t i = 0; i < ps.projectives.size(); ++i) {
      auto ws = weight_space_basis(n, i);
      if (ws.empty()) continue;
      HomSpace to_p = hom_space(m, ps.projectives[i].module);
      if (to_p.dim() == 0) continue;
      for (const auto& w : ws) {
        Matrix g = evaluation_matrix(n, w) * ps.basis[i];  // A e_i -> N
        for (std::size_t k = 0; k < to_p.dim() && fac.rank() < h.dim(); ++k)
          fac.insert(h.coordinates(g * to_p.map(k)));
      }
      if (fac.rank() == h.dim()) break;
    }
  }
  Subspace factoring = Subspace::from_echelon(fac);
  Quotient q(factoring);
  return {std::move(h), std::move(factoring), std::move(q)};
}

/// Lifts module maps M -> N to Omega M -> Omega N through fixed covers of M and N.
class SyzygyLifter {
public:
  SyzygyLifter(const ProjectiveCover& cm, const ProjectiveCover& cn) : cm_(cm), cn_(cn) {
    const auto& alg = cn.P.algebra;
    for (std::size_t i = 0; i < alg->num_idempotents(); ++i) {
      auto ws = weight_space_basis(cn.P, i);
      Matrix basis = ws.empty() ? Matrix(cn.P.field(), cn.P.dim, 0) : Matrix::from_columns(cn.P.field(), cn.P.dim, ws);
      solvers_.emplace_back(cn.map * basis);
      weight_bases_.push_back(std::move(basis));
      weight_kernels_.push_back(solvers_.back().kernel());
    }
  }

  /// A module map F: P_M -> P_N with pi_N F = f pi_M. With an rng, the lift is perturbed by
  /// a random element of the kernel on each generator.
  Matrix lift_to_covers(const Matrix& f, std::mt19937_64* rng = nullptr) const {
    const auto& ps = projective_system(cm_.P.algebra);
    const Field& fld = cm_.P.field();
    Matrix big(fld, cn_.P.dim, cm_.P.dim);
    for (std::size_t k = 0; k < cm_.summands.size(); ++k) {
      std::size_t v = cm_.summands[k];
      Vec target = f.apply(cm_.generators[k]);
      auto x = solvers_[v].solve(target);
      if (!x) throw std::logic_error("syzygy lift: target outside the cover image");
      if (rng) axpy(fld, *x, weight_kernels_[v].combine(random_vector(fld, weight_kernels_[v].dim(), *rng)), 1);
      Vec u = weight_bases_[v].apply(*x);
      big.set_block(0, cm_.offsets[k], evaluation_matrix(cn_.P, u) * ps.basis[v]);
    }
    return big;
  }

  /// Omega f : Omega M -> Omega N (matrix dim Omega N x dim Omega M).
  Matrix lift(const Matrix& f, std::mt19937_64* rng = nullptr) const {
    Matrix big = lift_to_covers(f, rng) * cm_.inclusion;
    Matrix out(cm_.P.field(), cn_.kernel.dim(), cm_.kernel.dim());
    for (std::size_t j = 0; j < big.cols(); ++j) {
      auto c = cn_.kernel.coordinates_checked(big.column(j));
      if (!c) throw std::logic_error("syzygy lift does not preserve kernels");
      for (std::size_t i = 0; i < c->size(); ++i) out(i, j) = (*c)[i];
    }
    return out;
  }

private:
  const ProjectiveCover& cm_;
  const ProjectiveCover& cn_;
  std::vector<Solver> solvers_;
  std::vector<Matrix> weight_bases_;
  std::vector<Subspace> weight_kernels_;
};

inline Matrix syzygy_map(const Matrix& f, const ProjectiveCover& cm, const ProjectiveCover& cn) {
  return SyzygyLifter(cm, cn).lift(f);
}

struct StableHomTable {
  std::vector<std::size_t> stage_dims;
  std::vector<std::size_t> transition_ranks;
  bool stabilized = false;
  std::size_t window = 4;
  int shift = 0;
  std::string stop_reason;

  /// The stabilized dimension, when there is one.
  std::optional<std::size_t> value() const {
    if (!stabilized || stage_dims.empty()) return std::nullopt;
    return stage_dims.back();
  }
  std::string trace() const {
    std::string s;
    for (std::size_t i = 0; i < stage_dims.size(); ++i) s += (i ? "," : "") + std::to_string(stage_dims[i]);
    return s;
  }
};

struct DsgOptions {
  int shift = 0;
  std::size_t max_stage = 24;
  std::size_t window = 4;
  std::size_t max_module_dim = 32;  // a stage whose syzygies exceed this is not computed
};

/// Stage n is the stable Hom(Omega^{n+s} M, Omega^n N) (s >= 0) or
/// (Omega^n M, Omega^{n-s} N) (s < 0) after stripping projective summands; transitions
/// are induced by Omega. Computation stops once the last `window` transitions are bijective.
inline StableHomTable dsg_hom(const LeftModule& m, const LeftModule& n, const DsgOptions& opt = {}) {
  if (opt.window < 2 || opt.max_stage < opt.window)
    throw std::invalid_argument("dsg_hom: need max_stage >= window >= 2");
  StableHomTable t;
  t.window = opt.window;
  t.shift = opt.shift;
  SyzygyTower tm(strip_projectives(m).core);
  SyzygyTower tn(strip_projectives(n).core);
  const std::size_t om = opt.shift > 0 ? static_cast<std::size_t>(opt.shift) : 0;
  const std::size_t on = opt.shift < 0 ? static_cast<std::size_t>(-opt.shift) : 0;
  auto fits = [&](std::size_t stage) {
    auto a = tm.dim_with_cap(stage + om, opt.max_module_dim);
    auto b = tn.dim_with_cap(stage + on, opt.max_module_dim);
    return a && b && *a <= opt.max_module_dim && *b <= opt.max_module_dim;
  };
  std::optional<StableHom> prev;
  std::size_t bijective_run = 0;
  for (std::size_t stage = 0; stage <= opt.max_stage; ++stage) {
    if (!fits(stage)) {
      t.stop_reason = "syzygy dimension above " + std::to_string(opt.max_module_dim) + " at stage " +
                      std::to_string(stage);
      return t;
    }
    StableHom cur = stable_hom(tm.module(stage + om), tn.module(stage + on));
    if (prev) {
      SyzygyLifter lifter(tm.cover(stage - 1 + om), tn.cover(stage - 1 + on));
      Echelon e(cur.hom.space().field(), cur.dim());
      for (std::size_t k = 0; k < prev->dim(); ++k) e.insert(cur.classify(lifter.lift(prev->representative(k))));
      std::size_t rank = e.rank();
      t.transition_ranks.push_back(rank);
      bool bij = rank == prev->dim() && rank == cur.dim();
      bijective_run = bij ? bijective_run + 1 : 0;
    }
    t.stage_dims.push_back(cur.dim());
    if (bijective_run >= opt.window) {
      t.stabilized = true;
      t.stop_reason = "last " + std::to_string(opt.window) + " transitions bijective";
      return t;
    }
    prev = std::move(cur);
  }
  t.stop_reason = "max stage " + std::to_string(opt.max_stage) + " reached";
  return t;
}

}  // namespace trivext
