#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace trivext;
using trivext::testing::build;

namespace {

// Counts composable words avoiding every monomial relation as a factor.
std::size_t count_monomial_paths(const quiver::Presentation& p, std::size_t max_len) {
  std::set<std::vector<std::size_t>> forbidden;
  for (const auto& r : p.relations) forbidden.insert(r.terms.at(0).word);
  auto ok = [&](const std::vector<std::size_t>& w) {
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = i + 1; j <= w.size(); ++j)
        if (forbidden.count(std::vector<std::size_t>(w.begin() + i, w.begin() + j))) return false;
    return true;
  };
  std::size_t count = p.vertices.size();
  std::vector<std::vector<std::size_t>> level;
  for (std::size_t a = 0; a < p.arrows.size(); ++a) level.push_back({a});
  for (std::size_t len = 1; len <= max_len && !level.empty(); ++len) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& w : level) {
      if (!ok(w)) continue;
      ++count;
      // prepend: written right-to-left, so the new arrow starts where w ends
      for (std::size_t a = 0; a < p.arrows.size(); ++a)
        if (p.arrows[a].source == p.arrows[w.front()].target) {
          std::vector<std::size_t> v{a};
          v.insert(v.end(), w.begin(), w.end());
          next.push_back(v);
        }
    }
    level = std::move(next);
  }
  return count;
}

quiver::ParseError parse_error(const std::string& src) {
  try {
    quiver::parse_presentation(src);
  } catch (const quiver::ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no parse error";
  return quiver::ParseError(0, 0, "");
}

}  // namespace

TEST(Presentation, ParsesGoldenA) {
  auto p = quiver::parse_presentation(quiver::golden::algebra_a());
  EXPECT_EQ(p.name, "A");
  EXPECT_EQ(p.field_prime, 32003u);
  EXPECT_EQ(p.vertices.size(), 2u);
  ASSERT_EQ(p.arrows.size(), 3u);
  EXPECT_EQ(p.arrows[0].name, "a");
  EXPECT_EQ(p.arrows[0].source, 0u);
  EXPECT_EQ(p.arrows[0].target, 1u);
  ASSERT_EQ(p.relations.size(), 2u);
  EXPECT_EQ(p.relations[1].length, 3u);
}

TEST(Presentation, CommentsAndCoefficients) {
  auto p = quiver::parse_presentation(
      "# leading comment\nquiver Q { field: F_7; vertices: u, v; arrows: x: u -> v, y: u -> v, z: v -> u;\n"
      "relations: x*z - 3*y*z, z*x; }");
  ASSERT_EQ(p.relations.size(), 2u);
  ASSERT_EQ(p.relations[0].terms.size(), 2u);
  EXPECT_EQ(p.relations[0].terms[1].coefficient, 4u);  // -3 mod 7
}

TEST(Presentation, EmptyArrowList) {
  auto p = quiver::parse_presentation("quiver K { field: F_5; vertices: 1; arrows: ; }");
  EXPECT_TRUE(p.arrows.empty());
  EXPECT_EQ(quiver::build_algebra(p)->dim(), 1u);
}

TEST(Presentation, ErrorsCarryPositions) {
  auto e = parse_error("quiver A {\n  field: F_32003;\n  vertices: 1, 2;\n  arrows: a: 1 -> 2;\n  relations: a*a;\n}");
  EXPECT_EQ(e.line(), 5u);
  EXPECT_EQ(e.column(), 14u);
  EXPECT_NE(e.message().find("non-composable"), std::string::npos);

  EXPECT_NE(parse_error("quiver A { field: F_8; vertices: 1; arrows: ; }").message().find("prime"), std::string::npos);
  EXPECT_NE(parse_error("quiver A { field: F_7; vertices: 1, 1; arrows: ; }").message().find("duplicate"), std::string::npos);
  EXPECT_NE(parse_error("quiver A { field: F_7; vertices: 1; arrows: a: 1 -> 3; }").message().find("3"), std::string::npos);
  auto trailing = parse_error("quiver A { field: F_7; vertices: 1; arrows: ; } extra");
  EXPECT_EQ(trailing.line(), 1u);
  EXPECT_GT(trailing.column(), 40u);
  EXPECT_NE(parse_error("quiver A { field: F_7; vertices: 1, 2; arrows: a: 1 -> 2; relations: a; }").message().find("length < 2"),
            std::string::npos);
  EXPECT_NE(parse_error("quiver A { field: F_7; vertices: 1; arrows: x: 1 -> 1; relations: x*x - x*x; }").message().find("zero"),
            std::string::npos);
}

TEST(PathBasis, GoldenDimensionsMatchPathCounting) {
  for (const auto& src : {quiver::golden::algebra_a(), quiver::golden::algebra_a_prime(), quiver::golden::algebra_bn(3)}) {
    auto p = quiver::parse_presentation(src);
    quiver::PathBasis pb(p);
    EXPECT_EQ(pb.dim(), count_monomial_paths(p, 12)) << p.name;
  }
  EXPECT_EQ(quiver::PathBasis(quiver::parse_presentation(quiver::golden::algebra_a())).dim(), 11u);
  EXPECT_EQ(quiver::PathBasis(quiver::parse_presentation(quiver::golden::algebra_a_prime())).dim(), 5u);
  for (std::size_t n = 0; n <= 4; ++n)
    EXPECT_EQ(quiver::PathBasis(quiver::parse_presentation(quiver::golden::algebra_bn(n))).dim(), n + 1);
}

TEST(PathBasis, NonMonomialRelationsReduceDimension) {
  // commutative square: a*b - c*d kills one of the two length-two paths
  auto p = quiver::parse_presentation(
      "quiver Sq { field: F_32003; vertices: 1, 2, 3, 4; arrows: b: 1 -> 2, a: 2 -> 4, d: 1 -> 3, c: 3 -> 4;"
      " relations: a*b - c*d; }");
  quiver::PathBasis pb(p);
  EXPECT_EQ(pb.dim(), 4u + 4u + 1u);
  auto alg = quiver::build_algebra(pb);
  EXPECT_FALSE(alg->validate());
}

TEST(PathBasis, DetectsNonAdmissibleIdeal) {
  auto p = quiver::parse_presentation("quiver L { field: F_32003; vertices: 1; arrows: x: 1 -> 1; }");
  p.path_length_bound = 8;
  EXPECT_THROW(quiver::PathBasis{p}, quiver::NonAdmissibleError);
}

TEST(PathBasis, StructureConstantsAreAssociative) {
  auto a = trivext::testing::algebra_a();
  EXPECT_FALSE(a->validate());
  const std::size_t n = a->dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec lhs = a->product(a->product(a->basis_vector(i), a->basis_vector(j)), a->basis_vector(k));
        Vec rhs = a->product(a->basis_vector(i), a->product(a->basis_vector(j), a->basis_vector(k)));
        ASSERT_EQ(lhs, rhs);
      }
  EXPECT_TRUE(a->is_basic());
  EXPECT_EQ(a->radical().dim(), 9u);
}

TEST(PathBasis, RelationsVanish) {
  quiver::PathBasis pb(quiver::parse_presentation(quiver::golden::algebra_a()));
  auto a = quiver::build_algebra(pb);
  auto idx = [&](const std::string& name) {
    for (std::size_t i = 0; i < pb.dim(); ++i)
      if (pb.name(i) == name) return i;
    ADD_FAILURE() << name;
    return std::size_t{0};
  };
  EXPECT_TRUE(is_zero(a->product(a->basis_vector(idx("a")), a->basis_vector(idx("b")))));
  Vec ca = a->product(a->basis_vector(idx("c")), a->basis_vector(idx("a")));
  EXPECT_FALSE(is_zero(ca));
  EXPECT_TRUE(is_zero(a->product(ca, a->basis_vector(idx("c")))));
}
