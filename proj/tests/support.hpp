#pragma once

#include <random>
#include <vector>

#include "trivext/homengine/complex.hpp"
#include "trivext/singeq/corollary.hpp"

namespace trivext::testing {

inline AlgebraPtr build(const std::string& src) { return quiver::build_algebra(quiver::parse_presentation(src)); }

inline AlgebraPtr algebra_a() { return build(quiver::golden::algebra_a()); }
inline AlgebraPtr algebra_a_prime() { return build(quiver::golden::algebra_a_prime()); }
inline AlgebraPtr ground() { return Algebra::ground(Field()); }

/// k x k: two vertices, no arrows.
inline AlgebraPtr semisimple2() { return build("quiver S { field: F_32003; vertices: 1, 2; arrows: ; }"); }

/// The corner instance (A', k, A'e1, e2A') through the corner construction.
inline CorollaryInstance example_instance() { return corollary43_instance(algebra_a_prime(), 1, 0); }

inline Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<Elem>(rng() % f.prime());
  return m;
}

inline Matrix random_invertible(const Field& f, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Matrix m = random_matrix(f, n, n, rng);
    if (is_invertible(m)) return m;
  }
}

/// A quotient of a random sum of indecomposable projectives by a random submodule.
inline LeftModule random_module(const AlgebraPtr& alg, std::mt19937_64& rng, std::size_t max_summands = 2,
                                std::size_t max_relations = 2) {
  std::vector<std::size_t> verts;
  std::size_t k = 1 + rng() % max_summands;
  for (std::size_t i = 0; i < k; ++i) verts.push_back(rng() % alg->num_idempotents());
  LeftModule p = projective_module(alg, verts);
  std::vector<Vec> gens;
  std::size_t r = rng() % (max_relations + 1);
  const Field& f = alg->field();
  for (std::size_t i = 0; i < r; ++i) {
    // a random element of the radical of a random weight space keeps the quotient nonzero
    std::size_t v = rng() % alg->num_idempotents();
    Matrix e = p.act(alg->idempotents()[v]);
    Vec x = random_vector(f, p.dim, rng);
    Vec y(p.dim, 0);
    for (const auto& rb : alg->radical().basis()) axpy(f, y, p.act(rb).apply(e.apply(x)), static_cast<Elem>(rng() % f.prime()));
    gens.push_back(std::move(y));
  }
  Subspace sub = generated_submodule(p, gens);
  return quotient_module(p, Quotient(sub));
}

/// Conjugates every action matrix by a random invertible matrix.
inline LeftModule random_base_change(const LeftModule& m, std::mt19937_64& rng, Matrix* g_out = nullptr) {
  Matrix g = random_invertible(m.field(), m.dim, rng);
  if (g_out) *g_out = g;
  return base_change(m, g);
}

/// A random element of Hom(m, n).
inline Matrix random_hom(const LeftModule& m, const LeftModule& n, std::mt19937_64& rng) {
  HomSpace h = hom_space(m, n);
  return random_element(h, rng);
}

/// P_len -> ... -> P_0 in degrees -len..0 from minimal projective covers.
inline BoundedComplex resolution_complex(const LeftModule& m, std::size_t len) {
  std::vector<ProjectiveCover> covers;
  LeftModule cur = m;
  for (std::size_t k = 0; k <= len; ++k) {
    covers.push_back(projective_cover(cur));
    cur = covers.back().syzygy;
  }
  std::vector<LeftModule> objs;
  std::vector<Matrix> diff;
  for (std::size_t k = len + 1; k-- > 0;) objs.push_back(covers[k].P);
  for (std::size_t k = len; k-- > 0;) diff.push_back(covers[k].inclusion * covers[k + 1].map);
  return BoundedComplex(m.algebra, -static_cast<int>(len), objs, diff);
}

/// Trivial extensions used for randomized checks: by X = A'e1 (x) e2A', the regular bimodule
/// of A', the dual numbers and B_2.
inline std::vector<TrivialExtensionPtr> sample_extensions() {
  std::vector<TrivialExtensionPtr> out;
  auto k = ground();
  out.push_back(example_instance().inst->a_tilde);
  auto ap = algebra_a_prime();
  out.push_back(build_trivial_extension(ap, regular_bimodule(ap)));
  out.push_back(build_trivial_extension(k, ground_bimodule(k, 1)));
  out.push_back(build_trivial_extension(k, ground_bimodule(k, 2)));
  return out;
}

}  // namespace trivext::testing
