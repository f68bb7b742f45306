#pragma once

#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "trivext/exactla/echelon.hpp"

namespace trivext {

/// Generator e_target * g * e_source of an algebra; acting on a module it maps
/// the source weight space into the target weight space.
struct BlockGenerator {
  std::size_t source;
  std::size_t target;
  Vec element;
};

/// Finite-dimensional unital associative algebra over F_p given by structure
/// constants, a complete set of orthogonal idempotents, and a radical basis.
///
/// left_mult(i) is the matrix of x -> b_i * x, right_mult(j) of x -> x * b_j.
class Algebra {
public:
  struct Data {
    Field field;
    std::size_t dim = 0;
    /// mult[i][j] = coordinates of b_i * b_j
    std::vector<std::vector<Vec>> mult;
    Vec unit;
    std::vector<Vec> idempotents;
    std::vector<Vec> radical;
    std::vector<std::string> labels;
  };

  /// Validates all invariants; throws std::invalid_argument with the first violation.
  explicit Algebra(Data d) : field_(d.field), dim_(d.dim), unit_(std::move(d.unit)),
                             idempotents_(std::move(d.idempotents)), labels_(std::move(d.labels)) {
    if (d.mult.size() != dim_) throw std::invalid_argument("algebra: mult table has wrong size");
    left_.assign(dim_, Matrix(field_, dim_, dim_));
    right_.assign(dim_, Matrix(field_, dim_, dim_));
    for (std::size_t i = 0; i < dim_; ++i) {
      if (d.mult[i].size() != dim_) throw std::invalid_argument("algebra: mult table has wrong size");
      for (std::size_t j = 0; j < dim_; ++j) {
        const Vec& c = d.mult[i][j];
        if (c.size() != dim_) throw std::invalid_argument("algebra: product vector has wrong length");
        for (std::size_t k = 0; k < dim_; ++k) {
          if (c[k] >= field_.prime()) throw std::invalid_argument("algebra: residue out of range");
          left_[i](k, j) = c[k];
          right_[j](k, i) = c[k];
        }
      }
    }
    if (labels_.empty())
      for (std::size_t i = 0; i < dim_; ++i) labels_.push_back("b" + std::to_string(i));
    radical_ = Subspace::span(field_, dim_, d.radical);
    if (auto err = validate()) throw std::invalid_argument("algebra: " + *err);
    compute_generators();
  }

  /// The ground field as a one-dimensional algebra.
  static std::shared_ptr<const Algebra> ground(Field f) {
    Data d;
    d.field = f;
    d.dim = 1;
    d.mult = {{Vec{1}}};
    d.unit = {1};
    d.idempotents = {Vec{1}};
    d.labels = {"1"};
    return std::make_shared<const Algebra>(std::move(d));
  }

  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Vec& unit() const { return unit_; }
  const std::vector<Vec>& idempotents() const { return idempotents_; }
  std::size_t num_idempotents() const { return idempotents_.size(); }
  const Subspace& radical() const { return radical_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Matrix& left_mult(std::size_t i) const { return left_[i]; }
  const Matrix& right_mult(std::size_t j) const { return right_[j]; }

  Vec basis_vector(std::size_t i) const { return unit_vector(dim_, i); }

  Vec product(std::span<const Elem> x, std::span<const Elem> y) const {
    Vec out(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i] == 0) continue;
      axpy(field_, out, left_[i].apply(y), x[i]);
    }
    return out;
  }

  /// Matrix of left multiplication by an arbitrary element.
  Matrix left_mult(std::span<const Elem> x) const {
    Matrix m(field_, dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      if (x[i] != 0) m = m + left_[i].scaled(x[i]);
    return m;
  }

  Matrix right_mult(std::span<const Elem> x) const {
    Matrix m(field_, dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      if (x[i] != 0) m = m + right_[i].scaled(x[i]);
    return m;
  }

  Vec coefficients_of(std::size_t i, std::size_t j) const { return left_[i].column(j); }

  /// A basic algebra: A / rad A is spanned by the images of the idempotents.
  bool is_basic() const { return dim_ - radical_.dim() == idempotents_.size(); }

  /// Idempotents and block generators e_t g e_s (s,t idempotent indices) whose
  /// span generates the algebra. The block generators exclude the idempotents.
  const std::vector<BlockGenerator>& block_generators() const { return block_gens_; }

  /// Plain algebra generators: idempotents followed by block generators.
  std::vector<Vec> generators() const {
    std::vector<Vec> g = idempotents_;
    for (const auto& b : block_gens_) g.push_back(b.element);
    return g;
  }

  std::shared_ptr<const Algebra> opposite() const {
    Data d;
    d.field = field_;
    d.dim = dim_;
    d.mult.assign(dim_, std::vector<Vec>(dim_));
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) d.mult[i][j] = coefficients_of(j, i);
    d.unit = unit_;
    d.idempotents = idempotents_;
    d.radical = radical_.basis();
    for (const auto& l : labels_) d.labels.push_back(l + "^op");
    return std::make_shared<const Algebra>(std::move(d));
  }

  /// Returns nullopt when all invariants hold, otherwise a description of the first failure.
  std::optional<std::string> validate() const {
    if (unit_.size() != dim_) return "unit has wrong length";
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) {
        // (b_i b_j) x = b_i (b_j x), checked as operators
        Matrix ij = left_mult(left_[i].column(j));
        if (!(ij == left_[i] * left_[j]))
          return "associativity fails for basis pair (" + std::to_string(i) + ", " +
                 std::to_string(j) + ")";
      }
    if (!(left_mult(unit_) == Matrix::identity(field_, dim_)) ||
        !(right_mult(unit_) == Matrix::identity(field_, dim_)))
      return "unit is not a two-sided identity";
    Vec total(dim_, 0);
    for (std::size_t a = 0; a < idempotents_.size(); ++a) {
      if (idempotents_[a].size() != dim_) return "idempotent has wrong length";
      total = trivext::add(field_, total, idempotents_[a]);
      for (std::size_t b = 0; b < idempotents_.size(); ++b) {
        Vec p = product(idempotents_[a], idempotents_[b]);
        Vec expect = a == b ? idempotents_[a] : Vec(dim_, 0);
        if (p != expect)
          return "idempotents " + std::to_string(a) + ", " + std::to_string(b) +
                 " are not orthogonal idempotents";
      }
    }
    if (total != unit_) return "idempotents do not sum to the unit";
    for (const auto& r : radical_.basis())
      for (std::size_t i = 0; i < dim_; ++i) {
        if (!radical_.contains(left_[i].apply(r)) || !radical_.contains(right_[i].apply(r)))
          return "radical is not a two-sided ideal";
      }
    // nilpotency: rad^m = 0 for some m <= dim
    Subspace power = radical_;
    for (std::size_t m = 1; power.dim() > 0; ++m) {
      if (m > dim_ + 1) return "radical is not nilpotent";
      std::vector<Vec> next;
      for (const auto& x : power.basis())
        for (const auto& r : radical_.basis()) next.push_back(product(x, r));
      Subspace np = Subspace::span(field_, dim_, next);
      if (np.dim() == power.dim()) return "radical is not nilpotent";
      power = std::move(np);
    }
    if (!quotient_is_semisimple()) return "quotient by the supplied radical is not semisimple";
    return std::nullopt;
  }

private:
  // Sufficient criteria: a basic split quotient spanned by the idempotents, or a
  // nondegenerate trace form on the quotient.
  bool quotient_is_semisimple() const {
    if (is_basic()) {
      std::vector<Vec> span_e = radical_.basis();
      for (const auto& e : idempotents_) span_e.push_back(e);
      return Subspace::span(field_, dim_, span_e).dim() == dim_;
    }
    Quotient q(radical_);
    std::size_t n = q.dim();
    Matrix form(field_, n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        Matrix m = left_mult(q.lift(unit_vector(n, a))) * left_mult(q.lift(unit_vector(n, b)));
        Elem tr = 0;
        for (std::size_t k = 0; k < dim_; ++k) tr = field_.add(tr, m(k, k));
        form(a, b) = tr;
      }
    return trivext::rank(form) == n;
  }

  void compute_generators() {
    // Greedy: grow the generated subalgebra with basis vectors until it is everything,
    // then split each chosen generator into idempotent blocks.
    std::vector<Vec> chosen;
    auto closure = [&](const std::vector<Vec>& gens) {
      Echelon e(field_, dim_);
      std::vector<Vec> frontier;
      for (auto v : idempotents_) {
        if (e.insert(v)) frontier.push_back(v);
      }
      for (const auto& g : gens)
        if (e.insert(g)) frontier.push_back(g);
      std::vector<Vec> all_g = idempotents_;
      all_g.insert(all_g.end(), gens.begin(), gens.end());
      while (!frontier.empty()) {
        std::vector<Vec> next;
        for (const auto& x : frontier)
          for (const auto& g : all_g) {
            Vec p = product(g, x);
            if (e.insert(p)) next.push_back(p);
          }
        frontier = std::move(next);
      }
      return e;
    };
    Echelon sub = closure(chosen);
    for (std::size_t i = 0; i < dim_ && sub.rank() < dim_; ++i) {
      Vec b = basis_vector(i);
      if (sub.contains(b)) continue;
      chosen.push_back(b);
      sub = closure(chosen);
    }
    for (const auto& g : chosen)
      for (std::size_t t = 0; t < idempotents_.size(); ++t)
        for (std::size_t s = 0; s < idempotents_.size(); ++s) {
          Vec piece = product(product(idempotents_[t], g), idempotents_[s]);
          if (!is_zero(piece)) block_gens_.push_back({s, t, std::move(piece)});
        }
  }

  Field field_;
  std::size_t dim_;
  Vec unit_;
  std::vector<Vec> idempotents_;
  std::vector<std::string> labels_;
  std::vector<Matrix> left_;
  std::vector<Matrix> right_;
  Subspace radical_;
  std::vector<BlockGenerator> block_gens_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Verifies that a linear map phi (target coords x source coords) between algebras is
/// a unital algebra isomorphism; returns the first failing check.
inline std::optional<std::string> check_algebra_isomorphism(const Algebra& src, const Algebra& dst,
                                                            const Matrix& phi) {
  if (phi.rows() != dst.dim() || phi.cols() != src.dim()) return "map has wrong shape";
  if (!is_invertible(phi)) return "map is not bijective";
  if (phi.apply(src.unit()) != dst.unit()) return "map is not unital";
  for (std::size_t i = 0; i < src.dim(); ++i)
    for (std::size_t j = 0; j < src.dim(); ++j) {
      Vec lhs = phi.apply(src.coefficients_of(i, j));
      Vec rhs = dst.product(phi.column(i), phi.column(j));
      if (lhs != rhs)
        return "not multiplicative on (" + src.labels()[i] + ", " + src.labels()[j] + ")";
    }
  return std::nullopt;
}

}  // namespace trivext
