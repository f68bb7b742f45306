#pragma once

#include <vector>

#include "trivext/algkit/module.hpp"

namespace trivext {

/// Linear equation F_t * a = b * F_s on block-diagonal unknowns F = diag(F_0, F_1, ...),
/// F_i of shape n_i x m_i. a is m_t x m_s and b is n_t x n_s.
struct BlockEquation {
  std::size_t source;
  std::size_t target;
  Matrix a;
  Matrix b;
};

/// Solution space of a block intertwiner system, in the concatenated row-major
/// coordinates of the blocks.
inline Subspace solve_block_intertwiners(const Field& f, const std::vector<std::size_t>& m_dims,
                                         const std::vector<std::size_t>& n_dims,
                                         const std::vector<BlockEquation>& eqs) {
  std::vector<std::size_t> offset(m_dims.size() + 1, 0);
  for (std::size_t i = 0; i < m_dims.size(); ++i) offset[i + 1] = offset[i] + m_dims[i] * n_dims[i];
  const std::size_t unknowns = offset.back();
  Echelon ech(f, unknowns);
  Vec row(unknowns);
  for (const auto& eq : eqs) {
    const std::size_t s = eq.source, t = eq.target;
    const std::size_t mt = m_dims[t], ms = m_dims[s], nt = n_dims[t], ns = n_dims[s];
    if (eq.a.is_zero() && eq.b.is_zero()) continue;
    for (std::size_t r = 0; r < nt; ++r)
      for (std::size_t c = 0; c < ms; ++c) {
        std::fill(row.begin(), row.end(), 0);
        bool any = false;
        for (std::size_t d = 0; d < mt; ++d) {
          Elem v = eq.a(d, c);
          if (v == 0) continue;
          auto& slot = row[offset[t] + r * mt + d];
          slot = f.add(slot, v);
          any = true;
        }
        for (std::size_t u = 0; u < ns; ++u) {
          Elem v = eq.b(r, u);
          if (v == 0) continue;
          auto& slot = row[offset[s] + u * ms + c];
          slot = f.sub(slot, v);
          any = true;
        }
        if (any) ech.insert(row);
      }
  }
  return kernel_of(ech);
}

/// Basis adapted to the idempotent decomposition M = ⊕ e_i M.
struct WeightBasis {
  Matrix basis;    // columns: bases of e_0 M, e_1 M, ...
  Matrix inverse;
  std::vector<std::size_t> dims;
  std::vector<std::size_t> offsets;
  bool trivial = false;  // basis is the identity
};

inline WeightBasis weight_basis(const LeftModule& m) {
  const Field& f = m.field();
  const auto& idem = m.algebra->idempotents();
  WeightBasis wb;
  if (idem.size() == 1) {
    wb.basis = Matrix::identity(f, m.dim);
    wb.inverse = wb.basis;
    wb.dims = {m.dim};
    wb.offsets = {0, m.dim};
    wb.trivial = true;
    return wb;
  }
  std::vector<Vec> cols;
  wb.offsets.push_back(0);
  for (const auto& e : idem) {
    Matrix pe = m.act(e);
    // independent columns of the projector span e M
    auto [rows, piv] = row_echelon(pe).canonical();
    for (auto c : piv) cols.push_back(pe.column(c));
    wb.dims.push_back(piv.size());
    wb.offsets.push_back(cols.size());
  }
  if (cols.size() != m.dim) throw std::logic_error("weight spaces do not decompose the module");
  wb.basis = Matrix::from_columns(f, m.dim, cols);
  wb.inverse = *trivext::inverse(wb.basis);
  return wb;
}

/// Hom_A(M, N) as a subspace of row-major dim(N) x dim(M) matrices.
class HomSpace {
public:
  HomSpace(Subspace space, std::size_t src_dim, std::size_t dst_dim)
      : space_(std::move(space)), src_dim_(src_dim), dst_dim_(dst_dim) {}

  const Subspace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }
  std::size_t src_dim() const { return src_dim_; }
  std::size_t dst_dim() const { return dst_dim_; }

  Matrix map(std::size_t i) const {
    return unflatten(space_.field(), dst_dim_, src_dim_, space_.basis()[i]);
  }
  std::vector<Matrix> maps() const {
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(map(i));
    return out;
  }
  Vec coordinates(const Matrix& f) const { return space_.coordinates(flatten(f)); }
  Matrix combine(std::span<const Elem> coords) const {
    return unflatten(space_.field(), dst_dim_, src_dim_, space_.combine(coords));
  }

private:
  Subspace space_;
  std::size_t src_dim_;
  std::size_t dst_dim_;
};

inline HomSpace hom_space(const LeftModule& src, const LeftModule& dst) {
  if (src.algebra.get() != dst.algebra.get() && src.algebra->dim() != dst.algebra->dim())
    throw std::invalid_argument("hom_space: modules over different algebras");
  const Field& f = src.field();
  const Algebra& alg = *src.algebra;
  WeightBasis wm = weight_basis(src);
  WeightBasis wn = weight_basis(dst);
  std::vector<BlockEquation> eqs;
  for (const auto& g : alg.block_generators()) {
    Matrix am = src.act(g.element);
    Matrix an = dst.act(g.element);
    if (!wm.trivial) am = wm.inverse * am * wm.basis;
    if (!wn.trivial) an = wn.inverse * an * wn.basis;
    eqs.push_back({g.source, g.target,
                   am.block(wm.offsets[g.target], wm.offsets[g.source], wm.dims[g.target], wm.dims[g.source]),
                   an.block(wn.offsets[g.target], wn.offsets[g.source], wn.dims[g.target], wn.dims[g.source])});
  }
  Subspace sol = solve_block_intertwiners(f, wm.dims, wn.dims, eqs);
  std::vector<Vec> maps;
  maps.reserve(sol.dim());
  for (const auto& v : sol.basis()) {
    Matrix fp(f, dst.dim, src.dim);
    std::size_t off = 0;
    for (std::size_t i = 0; i < wm.dims.size(); ++i) {
      for (std::size_t r = 0; r < wn.dims[i]; ++r)
        for (std::size_t c = 0; c < wm.dims[i]; ++c)
          fp(wn.offsets[i] + r, wm.offsets[i] + c) = v[off + r * wm.dims[i] + c];
      off += wn.dims[i] * wm.dims[i];
    }
    if (!wm.trivial || !wn.trivial) fp = wn.basis * fp * wm.inverse;
    maps.push_back(flatten(fp));
  }
  return HomSpace(Subspace::span(f, dst.dim * src.dim, maps), src.dim, dst.dim);
}

/// Maps commuting with every pair of action matrices (no weight structure assumed).
inline HomSpace intertwiners(const Field& f, std::size_t src_dim, std::size_t dst_dim,
                             const std::vector<Matrix>& src_actions,
                             const std::vector<Matrix>& dst_actions) {
  std::vector<BlockEquation> eqs;
  for (std::size_t i = 0; i < src_actions.size(); ++i) eqs.push_back({0, 0, src_actions[i], dst_actions[i]});
  Subspace sol = solve_block_intertwiners(f, {src_dim}, {dst_dim}, eqs);
  return HomSpace(std::move(sol), src_dim, dst_dim);
}

struct TopRadical {
  Subspace radical;      // rad(A) M inside M
  LeftModule rad_module;
  Quotient top_quotient;
  LeftModule top;
};

inline TopRadical top_and_radical(const LeftModule& m) {
  std::vector<Matrix> ops;
  for (const auto& r : m.algebra->radical().basis()) ops.push_back(m.act(r));
  Subspace rad = image_sum(m.field(), m.dim, ops);
  Quotient q(rad);
  return {rad, submodule(m, rad), q, quotient_module(m, q)};
}

/// Radical series dims: dim rad^k M for k = 1, 2, ... until zero.
inline std::vector<std::size_t> radical_series(const LeftModule& m) {
  std::vector<std::size_t> dims;
  LeftModule cur = m;
  while (cur.dim > 0) {
    auto tr = top_and_radical(cur);
    dims.push_back(tr.rad_module.dim);
    if (tr.rad_module.dim == cur.dim) break;  // only possible for non-nilpotent data
    cur = tr.rad_module;
  }
  return dims;
}

inline RightModule linear_dual(const LeftModule& m) {
  RightModule d{m.algebra, m.dim, {}};
  for (const auto& a : m.action) d.action.push_back(a.transpose());
  return d;
}

inline LeftModule linear_dual(const RightModule& m) {
  LeftModule d{m.algebra, m.dim, {}};
  for (const auto& a : m.action) d.action.push_back(a.transpose());
  return d;
}

struct Corner {
  Subspace eAf;        // inside A
  Subspace Ae_space;   // left ideal A e inside A
  Subspace eA_space;   // right ideal e A inside A
  LeftModule Ae;
  RightModule eA;
};

/// The corner e A f together with the projective modules A e and e A.
inline Corner corner(AlgebraPtr alg, std::size_t e, std::size_t f) {
  const Field& fld = alg->field();
  const Vec& ev = alg->idempotents().at(e);
  const Vec& fv = alg->idempotents().at(f);
  std::vector<Vec> efs, aes, eas;
  for (std::size_t i = 0; i < alg->dim(); ++i) {
    Vec b = alg->basis_vector(i);
    efs.push_back(alg->product(alg->product(ev, b), fv));
    aes.push_back(alg->product(b, ev));
    eas.push_back(alg->product(ev, b));
  }
  Subspace eAf = Subspace::span(fld, alg->dim(), efs);
  Subspace ae = Subspace::span(fld, alg->dim(), aes);
  Subspace ea = Subspace::span(fld, alg->dim(), eas);
  return {eAf, ae, ea, submodule(regular_module(alg), ae), submodule(right_regular_module(alg), ea)};
}

/// Indecomposable projective A e_i with its embedding into A (basis of ae_space).
struct Projective {
  std::size_t vertex;
  Subspace space;
  LeftModule module;
};

inline Projective indecomposable_projective(AlgebraPtr alg, std::size_t vertex) {
  auto c = corner(alg, vertex, vertex);
  return {vertex, c.Ae_space, c.Ae};
}

}  // namespace trivext
