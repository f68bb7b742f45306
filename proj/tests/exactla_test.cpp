#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace trivext;
using trivext::testing::random_matrix;

namespace {

// schoolbook rank mod p, used as an oracle
std::size_t naive_rank(std::vector<std::vector<std::int64_t>> a, std::int64_t p) {
  std::size_t r = 0, rows = a.size(), cols = rows ? a[0].size() : 0;
  auto pw = [&](std::int64_t b, std::int64_t e) {
    std::int64_t x = 1;
    for (b %= p; e; e >>= 1, b = b * b % p)
      if (e & 1) x = x * b % p;
    return x;
  };
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] % p == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    std::int64_t inv = pw(a[r][c], p - 2);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      std::int64_t m = a[i][c] * inv % p;
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = ((a[i][j] - m * a[r][j]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

std::vector<std::vector<std::int64_t>> to_rows(const Matrix& m) {
  std::vector<std::vector<std::int64_t>> a(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  return a;
}

}  // namespace

TEST(Field, ArithmeticMatchesWideIntegers) {
  std::mt19937_64 rng(1);
  for (std::uint32_t p : {2u, 3u, 32003u, 2147483647u}) {
    Field f(p);
    for (int t = 0; t < 2000; ++t) {
      Elem a = rng() % p, b = rng() % p;
      EXPECT_EQ(f.mul(a, b), static_cast<Elem>(static_cast<unsigned __int128>(a) * b % p));
      EXPECT_EQ(f.add(a, b), static_cast<Elem>((static_cast<std::uint64_t>(a) + b) % p));
      EXPECT_EQ(f.add(f.sub(a, b), b), a);
      if (a != 0) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
    }
  }
}

TEST(Field, ReduceCoversFullRange) {
  Field f(32003);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 5000; ++t) {
    std::uint64_t x = rng();
    EXPECT_EQ(f.reduce(x), x % 32003);
  }
  EXPECT_EQ(f.reduce(~0ull), ~0ull % 32003);
}

TEST(Field, RejectsComposites) {
  EXPECT_THROW(Field(32004), std::invalid_argument);
  EXPECT_THROW(Field(1), std::invalid_argument);
  EXPECT_THROW(Field(0), std::invalid_argument);
  EXPECT_THROW(Field().inv(0), std::domain_error);
  EXPECT_EQ(Field(7).from_int(-3), 4u);
}

TEST(Matrix, RankMatchesSchoolbookElimination) {
  std::mt19937_64 rng(3);
  for (std::uint32_t p : {2u, 5u, 32003u}) {
    Field f(p);
    for (int t = 0; t < 60; ++t) {
      std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7, k = 1 + rng() % 4;
      // low rank products exercise dependent rows
      Matrix m = random_matrix(f, r, k, rng) * random_matrix(f, k, c, rng);
      EXPECT_EQ(rank(m), naive_rank(to_rows(m), p));
    }
  }
}

TEST(Matrix, KernelIsAnnihilatedAndHasComplementaryDimension) {
  std::mt19937_64 rng(4);
  Field f;
  for (int t = 0; t < 40; ++t) {
    std::size_t r = 1 + rng() % 6, c = 1 + rng() % 8;
    Matrix m = random_matrix(f, r, 2, rng) * random_matrix(f, 2, c, rng);
    auto rk = rank_and_kernel(m);
    EXPECT_EQ(rk.rank + rk.kernel.dim(), c);
    for (const auto& v : rk.kernel.basis()) EXPECT_TRUE(is_zero(m.apply(v)));
  }
}

TEST(Matrix, InverseAndSolve) {
  std::mt19937_64 rng(5);
  Field f;
  for (int t = 0; t < 30; ++t) {
    std::size_t n = 1 + rng() % 6;
    Matrix g = trivext::testing::random_invertible(f, n, rng);
    Matrix gi = *inverse(g);
    EXPECT_EQ(g * gi, Matrix::identity(f, n));
    Vec x = random_vector(f, n, rng);
    auto sol = solve(g, g.apply(x));
    ASSERT_TRUE(sol);
    EXPECT_EQ(sol->particular, x);
    EXPECT_EQ(sol->kernel.dim(), 0u);
  }
  Matrix z(f, 2, 2);
  EXPECT_FALSE(inverse(z));
  EXPECT_FALSE(solve(z, Vec{1, 0}));
}

TEST(Matrix, KroneckerMixedProduct) {
  std::mt19937_64 rng(6);
  Field f;
  Matrix a = random_matrix(f, 2, 3, rng), b = random_matrix(f, 3, 2, rng);
  Matrix c = random_matrix(f, 3, 2, rng), d = random_matrix(f, 2, 2, rng);
  EXPECT_EQ(kron(a, b) * kron(c, d), kron(a * c, b * d));
}

TEST(Echelon, CanonicalFormIsBasisIndependent) {
  std::mt19937_64 rng(7);
  Field f;
  for (int t = 0; t < 20; ++t) {
    Matrix m = random_matrix(f, 3, 6, rng);
    std::vector<Vec> rows, mixed;
    for (std::size_t i = 0; i < 3; ++i) rows.push_back(Vec(m.row(i).begin(), m.row(i).end()));
    Matrix g = trivext::testing::random_invertible(f, 3, rng);
    Matrix gm = g * m;
    for (std::size_t i = 0; i < 3; ++i) mixed.push_back(Vec(gm.row(i).begin(), gm.row(i).end()));
    EXPECT_EQ(Subspace::span(f, 6, rows), Subspace::span(f, 6, mixed));
  }
}

TEST(Echelon, QuotientProjectionAndSection) {
  std::mt19937_64 rng(8);
  Field f;
  Matrix m = random_matrix(f, 5, 2, rng);
  Subspace u = Subspace::column_space(m);
  Quotient q(u);
  EXPECT_EQ(q.dim(), 3u);
  EXPECT_EQ(q.projection() * q.section(), Matrix::identity(f, 3));
  EXPECT_TRUE((q.projection() * m).is_zero());
  Vec v = random_vector(f, 5, rng);
  EXPECT_TRUE(u.contains(sub(f, v, q.lift(q.project(v)))));
}

TEST(Echelon, SubspaceSumAndCoordinates) {
  Field f;
  Subspace a = Subspace::span(f, 3, std::vector<Vec>{{1, 0, 0}});
  Subspace b = Subspace::span(f, 3, std::vector<Vec>{{1, 1, 0}});
  Subspace s = sum(a, b);
  EXPECT_EQ(s.dim(), 2u);
  EXPECT_TRUE(a.is_subspace_of(s));
  EXPECT_FALSE(s.contains(Vec{0, 0, 1}));
  Vec w{3, 5, 0};
  EXPECT_EQ(s.combine(s.coordinates(w)), w);
  EXPECT_FALSE(s.coordinates_checked(Vec{0, 0, 1}));
}
