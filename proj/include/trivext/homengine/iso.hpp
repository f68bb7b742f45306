#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "trivext/homengine/covers.hpp"

namespace trivext {

enum class IsoKind { Isomorphic, NotIsomorphic, Undetermined };

inline const char* to_string(IsoKind k) {
  switch (k) {
    case IsoKind::Isomorphic: return "Isomorphic";
    case IsoKind::NotIsomorphic: return "NotIsomorphic";
    default: return "Undetermined";
  }
}

struct IsoResult {
  IsoKind kind = IsoKind::Undetermined;
  std::optional<Matrix> witness;  // dim N x dim M
  std::string reason;
};

struct IsoOptions {
  std::size_t trials = 64;
  std::uint64_t seed = 0;
};

inline Vec random_vector(const Field& f, std::size_t n, std::mt19937_64& rng) {
  Vec v(n);
  for (auto& e : v) e = static_cast<Elem>(rng() % f.prime());
  return v;
}

inline Matrix random_element(const HomSpace& h, std::mt19937_64& rng) {
  return h.combine(random_vector(h.space().field(), h.dim(), rng));
}

/// Samples random elements of a Hom space looking for a bijection.
inline IsoResult search_bijection(const HomSpace& h, const IsoOptions& opt) {
  IsoResult r;
  if (h.src_dim() != h.dst_dim()) {
    r.kind = IsoKind::NotIsomorphic;
    r.reason = "dim " + std::to_string(h.src_dim()) + " != " + std::to_string(h.dst_dim());
    return r;
  }
  if (h.src_dim() == 0) {
    r.kind = IsoKind::Isomorphic;
    r.witness = Matrix(h.space().field(), 0, 0);
    return r;
  }
  if (h.dim() == 0) {
    r.kind = IsoKind::NotIsomorphic;
    r.reason = "Hom space is zero";
    return r;
  }
  std::mt19937_64 rng(opt.seed);
  for (std::size_t t = 0; t < opt.trials; ++t) {
    Matrix f = t == 0 && h.dim() == 1 ? h.map(0) : random_element(h, rng);
    if (is_invertible(f)) {
      r.kind = IsoKind::Isomorphic;
      r.witness = std::move(f);
      return r;
    }
  }
  r.kind = IsoKind::Undetermined;
  r.reason = "no bijection among " + std::to_string(opt.trials) + " sampled maps";
  return r;
}

/// Cheap isomorphism invariants in a fixed order: name and value.
inline std::vector<std::pair<std::string, std::size_t>> module_invariants(const LeftModule& m) {
  std::vector<std::pair<std::string, std::size_t>> inv;
  inv.emplace_back("dim", m.dim);
  auto w = weight_vector(m);
  for (std::size_t i = 0; i < w.size(); ++i) inv.emplace_back("dim e" + std::to_string(i) + "M", w[i]);
  auto rs = radical_series(m);
  for (std::size_t i = 0; i < rs.size(); ++i) inv.emplace_back("dim rad^" + std::to_string(i + 1) + "M", rs[i]);
  if (m.algebra->is_basic()) {
    for (std::size_t i = 0; i < m.algebra->num_idempotents(); ++i) {
      LeftModule s = simple_module(m.algebra, i);
      inv.emplace_back("dim Hom(M,S" + std::to_string(i) + ")", hom_space(m, s).dim());
      inv.emplace_back("dim Hom(S" + std::to_string(i) + ",M)", hom_space(s, m).dim());
    }
  }
  return inv;
}

inline IsoResult module_iso_test(const LeftModule& m, const LeftModule& n, const IsoOptions& opt = {}) {
  IsoResult r;
  if (m.dim != n.dim) {
    r.kind = IsoKind::NotIsomorphic;
    r.reason = "dim " + std::to_string(m.dim) + " != " + std::to_string(n.dim);
    return r;
  }
  auto im = module_invariants(m);
  auto in = module_invariants(n);
  for (std::size_t k = 0; k < im.size() && k < in.size(); ++k)
    if (im[k] != in[k]) {
      r.kind = IsoKind::NotIsomorphic;
      r.reason = im[k].first + " " + std::to_string(im[k].second) + " != " + std::to_string(in[k].second);
      return r;
    }
  if (im.size() != in.size()) {
    r.kind = IsoKind::NotIsomorphic;
    r.reason = "radical length differs";
    return r;
  }
  return search_bijection(hom_space(m, n), opt);
}

/// Isomorphism test for structures given by parallel lists of action matrices.
inline IsoResult action_iso_test(const Field& f, std::size_t dm, std::size_t dn,
                                 const std::vector<Matrix>& am, const std::vector<Matrix>& an,
                                 const IsoOptions& opt = {}) {
  if (dm != dn) {
    IsoResult r;
    r.kind = IsoKind::NotIsomorphic;
    r.reason = "dim " + std::to_string(dm) + " != " + std::to_string(dn);
    return r;
  }
  return search_bijection(intertwiners(f, dm, dn, am, an), opt);
}

/// Looks for f: N -> M and g: M -> N with g f invertible, i.e. N is a direct summand of M.
inline std::optional<std::pair<Matrix, Matrix>> find_summand(const LeftModule& n, const LeftModule& m,
                                                             const IsoOptions& opt = {}) {
  const Field& fld = m.field();
  if (n.dim == 0) return std::make_pair(Matrix(fld, m.dim, 0), Matrix(fld, 0, m.dim));
  if (n.dim > m.dim) return std::nullopt;
  HomSpace in = hom_space(n, m);
  if (in.dim() == 0) return std::nullopt;
  HomSpace out = hom_space(m, n);
  if (out.dim() == 0) return std::nullopt;
  std::mt19937_64 rng(opt.seed);
  for (std::size_t t = 0; t < opt.trials; ++t) {
    Matrix f = random_element(in, rng);
    Matrix g = random_element(out, rng);
    if (is_invertible(g * f)) return std::make_pair(std::move(f), std::move(g));
  }
  return std::nullopt;
}

struct StrippedModule {
  LeftModule core;
  std::vector<std::size_t> projective_vertices;  // one entry per split-off summand A e_i
  LeftModule stripped;
};

/// Splits off indecomposable projective summands until none is left. P_i is a summand of
/// M iff some g in Hom(M, P_i) and v in e_i M give g(v) outside rad P_i (End(P_i) is local).
inline StrippedModule strip_projectives(const LeftModule& m) {
  const auto& ps = projective_system(m.algebra);
  const Field& f = m.field();
  StrippedModule out{m, {}, LeftModule::zero(m.algebra)};
  bool progress = true;
  while (progress && out.core.dim > 0) {
    progress = false;
    for (std::size_t i = 0; i < ps.projectives.size() && !progress; ++i) {
      const auto& pr = ps.projectives[i];
      std::vector<Vec> ws = weight_space_basis(out.core, i);
      if (ws.empty()) continue;
      HomSpace h = hom_space(out.core, pr.module);
      for (std::size_t gi = 0; gi < h.dim() && !progress; ++gi) {
        Matrix g = h.map(gi);
        for (const auto& v : ws) {
          Vec in_a = pr.space.combine(g.apply(v));
          Elem t = 0;
          for (std::size_t s = 0; s < in_a.size(); ++s) t = f.add(t, f.mul(in_a[s], ps.top[i][s]));
          if (t == 0) continue;
          Subspace ker = rank_and_kernel(g).kernel;
          out.core = submodule(out.core, ker);
          out.projective_vertices.push_back(i);
          progress = true;
          break;
        }
      }
    }
  }
  out.stripped = projective_module(m.algebra, out.projective_vertices);
  return out;
}

}  // namespace trivext
