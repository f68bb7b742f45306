#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "trivext/algkit/algebra.hpp"
#include "trivext/quiverlang/presentation.hpp"

namespace trivext::quiver {

/// Basis path of the quotient path algebra. A trivial path has an empty word.
struct BasisPath {
  std::vector<std::size_t> word;  // right-to-left, as written
  std::size_t source;
  std::size_t target;
  std::size_t length() const { return word.size(); }
};

class NonAdmissibleError : public std::runtime_error {
public:
  explicit NonAdmissibleError(std::size_t bound)
      : std::runtime_error("ideal may be non-admissible: a path of length " + std::to_string(bound) +
                           " survives the relations") {}
};

/// Quotient path algebra computed one length at a time:
/// A_l = (kQ_1 (x) A_{l-1}) / span{ r w : r relation, w basis path of A_{l-|r|} }.
class PathBasis {
public:
  explicit PathBasis(const Presentation& pres) : pres_(pres), field_(pres.field_prime) { build(); }

  const std::vector<BasisPath>& paths() const { return paths_; }
  std::size_t dim() const { return paths_.size(); }
  std::size_t max_length() const { return levels_.size() - 1; }
  const Presentation& presentation() const { return pres_; }

  std::string name(std::size_t i) const {
    const auto& p = paths_[i];
    if (p.word.empty()) return "e" + pres_.vertices[p.source];
    return pres_.word_name(p.word);
  }

  /// Coordinates (global) of the product of two basis paths.
  Vec product(std::size_t i, std::size_t j) const {
    const BasisPath& u = paths_[i];
    const BasisPath& v = paths_[j];
    Vec out(dim(), 0);
    if (u.source != v.target) return out;
    if (u.word.empty()) {
      out[j] = 1;
      return out;
    }
    if (v.word.empty()) {
      out[i] = 1;
      return out;
    }
    std::size_t level = v.length();
    Vec cur(levels_[level].size(), 0);
    cur[j - offsets_[level]] = 1;
    for (std::size_t k = u.word.size(); k-- > 0;) {
      if (level + 1 >= levels_.size()) return out;
      cur = left_arrow(u.word[k], level, cur);
      ++level;
    }
    for (std::size_t k = 0; k < cur.size(); ++k) out[offsets_[level] + k] = cur[k];
    return out;
  }

private:
  struct Level {
    std::vector<std::size_t> members;  // global indices
    std::size_t size() const { return members.size(); }
  };

  // class of a * w in A_{level+1} for w in A_level given in level coordinates
  Vec left_arrow(std::size_t a, std::size_t level, const Vec& w) const {
    const Matrix& m = arrow_maps_[level][a];
    return m.apply(w);
  }

  Vec word_times(const std::vector<std::size_t>& word, std::size_t level, Vec w) const {
    for (std::size_t k = word.size(); k-- > 0;) {
      w = left_arrow(word[k], level, w);
      ++level;
    }
    return w;
  }

  void build() {
    const std::size_t nv = pres_.vertices.size();
    const std::size_t na = pres_.arrows.size();
    Level l0;
    for (std::size_t v = 0; v < nv; ++v) {
      l0.members.push_back(paths_.size());
      paths_.push_back({{}, v, v});
    }
    levels_.push_back(l0);
    offsets_.push_back(0);
    for (std::size_t len = 1;; ++len) {
      const Level& prev = levels_[len - 1];
      // columns: composable pairs (a, w) with w in A_{len-1}
      std::vector<std::pair<std::size_t, std::size_t>> cols;
      std::vector<std::vector<std::size_t>> col_of(na, std::vector<std::size_t>(prev.size(), npos));
      for (std::size_t a = 0; a < na; ++a)
        for (std::size_t w = 0; w < prev.size(); ++w)
          if (pres_.arrows[a].source == paths_[prev.members[w]].target) {
            col_of[a][w] = cols.size();
            cols.emplace_back(a, w);
          }
      Echelon rel(field_, cols.size());
      for (const auto& r : pres_.relations) {
        if (r.length > len) continue;
        const std::size_t base = len - r.length;
        const Level& lw = levels_[base];
        for (std::size_t w = 0; w < lw.size(); ++w) {
          if (paths_[lw.members[w]].target != r.source) continue;
          Vec v(cols.size(), 0);
          for (const auto& t : r.terms) {
            std::vector<std::size_t> rest(t.word.begin() + 1, t.word.end());
            Vec unit(lw.size(), 0);
            unit[w] = 1;
            Vec tail = word_times(rest, base, unit);  // in A_{len-1}
            for (std::size_t k = 0; k < tail.size(); ++k) {
              if (tail[k] == 0) continue;
              std::size_t c = col_of[t.word.front()][k];
              v[c] = field_.add(v[c], field_.mul(t.coefficient, tail[k]));
            }
          }
          rel.insert(std::move(v));
        }
      }
      Quotient q(Subspace::from_echelon(rel));
      Level next;
      offsets_.push_back(paths_.size());
      for (std::size_t c : q.free_columns()) {
        auto [a, w] = cols[c];
        const BasisPath& tail = paths_[prev.members[w]];
        BasisPath p{{a}, tail.source, pres_.arrows[a].target};
        p.word.insert(p.word.end(), tail.word.begin(), tail.word.end());
        next.members.push_back(paths_.size());
        paths_.push_back(std::move(p));
      }
      // left multiplication by each arrow, A_{len-1} -> A_len
      std::vector<Matrix> maps(na, Matrix(field_, next.size(), prev.size()));
      for (std::size_t c = 0; c < cols.size(); ++c) {
        auto [a, w] = cols[c];
        Vec img = q.project(unit_vector(cols.size(), c));
        for (std::size_t k = 0; k < img.size(); ++k) maps[a](k, w) = img[k];
      }
      arrow_maps_.push_back(std::move(maps));
      if (next.size() == 0) {
        offsets_.pop_back();
        break;
      }
      levels_.push_back(std::move(next));
      if (len >= pres_.path_length_bound) throw NonAdmissibleError(pres_.path_length_bound);
    }
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Presentation pres_;
  Field field_;
  std::vector<BasisPath> paths_;
  std::vector<Level> levels_;
  std::vector<std::size_t> offsets_;
  std::vector<std::vector<Matrix>> arrow_maps_;  // [level][arrow]: A_level -> A_{level+1}
};

inline PathBasis enumerate_path_basis(const Presentation& pres) { return PathBasis(pres); }

/// Structure-constant algebra of a presentation: unit = sum of e_v, idempotents e_v,
/// radical spanned by all nontrivial basis paths.
inline AlgebraPtr build_algebra(const PathBasis& pb) {
  Algebra::Data d;
  d.field = Field(pb.presentation().field_prime);
  d.dim = pb.dim();
  d.mult.assign(d.dim, std::vector<Vec>(d.dim));
  for (std::size_t i = 0; i < d.dim; ++i)
    for (std::size_t j = 0; j < d.dim; ++j) d.mult[i][j] = pb.product(i, j);
  d.unit.assign(d.dim, 0);
  for (std::size_t i = 0; i < d.dim; ++i) {
    const auto& p = pb.paths()[i];
    if (p.word.empty()) {
      d.unit[i] = 1;
      d.idempotents.push_back(unit_vector(d.dim, i));
    } else {
      d.radical.push_back(unit_vector(d.dim, i));
    }
    d.labels.push_back(pb.name(i));
  }
  return std::make_shared<const Algebra>(std::move(d));
}

inline AlgebraPtr build_algebra(const Presentation& pres) { return build_algebra(PathBasis(pres)); }

}  // namespace trivext::quiver
