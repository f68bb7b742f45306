#pragma once

#include <memory>
#include <string>
#include <vector>

#include "trivext/ext/pair_module.hpp"
#include "trivext/homengine/resolution.hpp"
#include "trivext/singeq/verdict.hpp"

namespace trivext {

/// Data of a singular equivalence candidate: A-B-bimodule X, B-A-bimodule Y and the trivial
/// extensions A~ = A (+) X (x)_B Y, B~ = B (+) Y (x)_A X.
struct EquivalenceInstance {
  AlgebraPtr a;
  AlgebraPtr b;
  Bimodule x;
  Bimodule y;
  Tensor xy;
  Tensor yx;
  TrivialExtensionPtr a_tilde;
  TrivialExtensionPtr b_tilde;
};

using InstancePtr = std::shared_ptr<const EquivalenceInstance>;

inline InstancePtr make_instance(AlgebraPtr a, AlgebraPtr b, Bimodule x, Bimodule y) {
  if (!same_algebra(*x.left, *a) || !same_algebra(*x.right, *b)) throw std::invalid_argument("instance: X must be an A-B-bimodule");
  if (!same_algebra(*y.left, *b) || !same_algebra(*y.right, *a)) throw std::invalid_argument("instance: Y must be a B-A-bimodule");
  if (auto v = bimodule_check(x)) throw std::invalid_argument("instance: X: " + v->what);
  if (auto v = bimodule_check(y)) throw std::invalid_argument("instance: Y: " + v->what);
  auto inst = std::make_shared<EquivalenceInstance>();
  inst->a = std::move(a);
  inst->b = std::move(b);
  inst->x = std::move(x);
  inst->y = std::move(y);
  inst->xy = tensor_over(inst->x, inst->y);
  inst->yx = tensor_over(inst->y, inst->x);
  inst->a_tilde = build_trivial_extension(inst->a, inst->xy.module);
  inst->b_tilde = build_trivial_extension(inst->b, inst->yx.module);
  return inst;
}

struct HypothesisReport {
  Check gldim_a;
  Check gldim_b;
  Check x_projective;
  Check y_projective;
  std::vector<Check> all() const { return {gldim_a, gldim_b, x_projective, y_projective}; }
  bool eligible() const {
    for (const auto& c : all())
      if (c.verdict != Verdict::Pass) return false;
    return true;
  }
};

namespace detail {

inline Check gldim_check(const std::string& name, const AlgebraPtr& alg, const ProjDimOptions& opt) {
  Check c{name, Verdict::Undetermined, ""};
  GlobalDimResult g = gldim(alg, opt);
  if (g.status == PdStatus::Finite) {
    c.verdict = Verdict::Pass;
    c.detail = "gldim " + std::to_string(g.value);
    return c;
  }
  for (std::size_t i = 0; i < g.simples.size(); ++i) {
    const auto& s = g.simples[i];
    if (s.status == PdStatus::ExceedsBound && s.certificate) {
      c.verdict = Verdict::Fail;
      c.detail = "pd S" + std::to_string(i + 1) + " infinite: Omega^" + std::to_string(s.certificate->first) +
                 (s.certificate->isomorphic ? " iso to " : " summand of ") + "Omega^" +
                 std::to_string(s.certificate->second);
      return c;
    }
  }
  c.detail = "gldim exceeds bound " + std::to_string(opt.bound) + " without a periodicity certificate";
  return c;
}

inline Check projective_check(const std::string& name, const RightModule& m) {
  ProjectivityResult r = right_projective_test(m);
  Check c{name, r.projective ? Verdict::Pass : Verdict::Fail, ""};
  c.detail = "cover dim " + std::to_string(r.cover_dim) + ", kernel dim " + std::to_string(r.kernel_dim);
  return c;
}

}  // namespace detail

inline HypothesisReport check_hypotheses(const EquivalenceInstance& inst, std::size_t pd_bound = 20) {
  ProjDimOptions opt;
  opt.bound = pd_bound;
  HypothesisReport r;
  r.gldim_a = detail::gldim_check("gldim A finite", inst.a, opt);
  r.gldim_b = detail::gldim_check("gldim B finite", inst.b, opt);
  r.x_projective = detail::projective_check("X_B projective", inst.x.as_right());
  r.y_projective = detail::projective_check("Y_A projective", inst.y.as_right());
  return r;
}

namespace detail {

/// For p = (M, sigma) over A (+) W (x) Z returns (Z (x) M, s) over the target extension by Z (x) W,
/// where s is (Z W)(Z M) -> Z(W(Z M)) -> Z((W Z) M) -> Z M, the last step being Id_Z (x) sigma.
inline PairModule transport_pair(const Bimodule& z, const Bimodule& w, const Tensor& zw, const Tensor& wz,
                                 const TrivialExtensionPtr& target, const PairModule& p) {
  const Field& f = z.field();
  Tensor zm = tensor_module(z, p.m);
  LeftModule out_m = zm.module.as_left();
  out_m.algebra = target->base;
  Tensor lhs = tensor_module(target->bimodule, out_m);
  Tensor w_zm = tensor_over(w, zm.module);
  Tensor z_w_zm = tensor_over(z, w_zm.module);
  Matrix alpha1 = associator_map(zw, lhs, w_zm, z_w_zm);
  Matrix alpha2 = associator_map(wz, p.xm, zm, w_zm);
  auto alpha2_inv = inverse(alpha2);
  if (!alpha2_inv) throw std::logic_error("transport: associator is not invertible");
  Matrix step = tensor_maps(z_w_zm, zm, Matrix::identity(f, z.dim), p.sigma * *alpha2_inv);
  return PairModule{target, std::move(out_m), std::move(lhs), step * alpha1};
}

}  // namespace detail

/// F(M, sigma) = (Y (x)_A M, Id_Y (x) sigma) over B~.
inline PairModule functor_f(const EquivalenceInstance& inst, const PairModule& p) {
  if (p.ext != inst.a_tilde) throw std::invalid_argument("functor F: pair is not over A~");
  return detail::transport_pair(inst.y, inst.x, inst.yx, inst.xy, inst.b_tilde, p);
}

/// G(N, tau) = (X (x)_B N, Id_X (x) tau) over A~.
inline PairModule functor_g(const EquivalenceInstance& inst, const PairModule& q) {
  if (q.ext != inst.b_tilde) throw std::invalid_argument("functor G: pair is not over B~");
  return detail::transport_pair(inst.x, inst.y, inst.xy, inst.yx, inst.a_tilde, q);
}

/// F(f) = Id_Y (x) f.
inline Matrix functor_f_map(const EquivalenceInstance& inst, const PairModule& p, const PairModule& q, const Matrix& f) {
  Tensor s = tensor_module(inst.y, p.m), t = tensor_module(inst.y, q.m);
  return tensor_maps(s, t, Matrix::identity(f.field(), inst.y.dim), f);
}

inline Matrix functor_g_map(const EquivalenceInstance& inst, const PairModule& p, const PairModule& q, const Matrix& f) {
  Tensor s = tensor_module(inst.x, p.m), t = tensor_module(inst.x, q.m);
  return tensor_maps(s, t, Matrix::identity(f.field(), inst.x.dim), f);
}

/// F A~ = Y (x)_A A~ against B~ (x)_B Y, with the explicit comparison map
/// y (x) (a, w) -> (y.a, y (x) w) through the associator.
struct Lemma41Result {
  LeftModule lhs;
  LeftModule rhs;
  Matrix map;  // lhs -> rhs
  bool module_map = false;
  bool bijective = false;
  bool ok() const { return module_map && bijective; }
};

inline Lemma41Result lemma41_iso(const EquivalenceInstance& inst) {
  const Field& f = inst.a->field();
  const auto& at = inst.a_tilde;
  PairModule reg = module_to_pair(at, regular_module(at->total));
  PairModule fa = functor_f(inst, reg);
  LeftModule y_left = inst.y.as_left();
  Induced ind = induce(inst.b_tilde, y_left);
  Lemma41Result r{pair_to_module(fa), pair_to_module(ind.pair), {}, false, false};
  // ind.xl = (Y (x) X) (x)_B Y; Y (x) (X (x) Y) through the associator
  Tensor xy_y = tensor_over(inst.x, left_as_bimodule(y_left, Algebra::ground(f)));
  Tensor y_xy = tensor_over(inst.y, xy_y.module);
  Matrix alpha = associator_map(inst.yx, ind.xl, xy_y, y_xy);
  auto alpha_inv = inverse(alpha);
  if (!alpha_inv) return r;
  // free pair of Y (x) A~ -> Y (+) (Y X) Y
  Tensor y_at = tensor_module(inst.y, reg.m);
  const std::size_t da = inst.a->dim(), dy = inst.y.dim;
  Matrix phi(f, r.rhs.dim, y_at.dim());
  // identify X (x) Y with the second block of A~ via the xy tensor itself
  for (std::size_t k = 0; k < y_at.dim(); ++k) {
    auto [yi, c] = y_at.free_pair(k);
    if (c < da) {
      Vec v = inst.y.right_action[c].column(yi);
      for (std::size_t t = 0; t < dy; ++t) phi(t, k) = v[t];
    } else {
      // y (x) w with w the (c - da)-th basis vector of X (x)_B Y
      std::size_t wk = c - da;
      auto [xi, yj] = inst.xy.free_pair(wk);
      Vec in = y_xy.pure(unit_vector(dy, yi), xy_y.pure(unit_vector(inst.x.dim, xi), unit_vector(dy, yj)));
      Vec out = alpha_inv->apply(in);
      for (std::size_t t = 0; t < out.size(); ++t) phi(dy + t, k) = out[t];
    }
  }
  r.map = std::move(phi);
  r.module_map = is_module_map(r.lhs, r.rhs, r.map);
  r.bijective = r.lhs.dim == r.rhs.dim && is_invertible(r.map);
  return r;
}

}  // namespace trivext
