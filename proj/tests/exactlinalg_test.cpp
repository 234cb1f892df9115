#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "opprank/error.hpp"
#include "opprank/exactlinalg.hpp"
#include "opprank/jantzen.hpp"

namespace opprank {
namespace {

MatrixModP random_matrix(std::mt19937& rng, std::uint32_t p, std::size_t r, std::size_t c, double density = 0.5) {
  MatrixModP m(p, r, c);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<std::uint32_t> val(1, p - 1);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (coin(rng) < density) m.set(i, j, val(rng));
  return m;
}

MatrixModP product(const MatrixModP& a, const MatrixModP& b) {
  MatrixModP out(a.prime(), a.nrows(), b.ncols());
  for (std::size_t i = 0; i < a.nrows(); ++i)
    for (std::size_t j = 0; j < b.ncols(); ++j) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < a.ncols(); ++k) s += static_cast<std::int64_t>(a.at(i, k)) * b.at(k, j);
      out.set(i, j, s);
    }
  return out;
}

IncidenceMatrix fano() { return build_incidence(GeometryProblem(parse_root_system("A2"), 2, {2})); }

TEST(RankModP, SmallExamples) {
  for (std::uint32_t p : {2u, 3u, 5u, 13u}) {
    EXPECT_EQ(rank_mod_p(MatrixModP::identity(p, 9)), 9u);
    EXPECT_EQ(rank_mod_p(MatrixModP(p, 4, 6)), 0u);
    MatrixModP ones(p, 5, 7);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 7; ++j) ones.set(i, j, 1);
    EXPECT_EQ(rank_mod_p(ones), 1u);
  }
  // J - I of size 4 is singular exactly when p divides 3.
  for (std::uint32_t p : {2u, 3u, 5u}) {
    MatrixModP m(p, 4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m.set(i, j, i == j ? 0 : 1);
    EXPECT_EQ(rank_mod_p(m), p == 3 ? 3u : 4u) << p;
  }
  MatrixModP neg(7, 1, 1);
  neg.set(0, 0, -14);
  EXPECT_EQ(neg.at(0, 0), 0u);
  EXPECT_EQ(rank_mod_p(neg), 0u);
}

TEST(RankModP, FanoPlane) {
  const IncidenceMatrix m = fano();
  EXPECT_EQ(rank_mod_p(MatrixModP::from_incidence(m, 2)), 3u);
  EXPECT_EQ(rank_mod_p(MatrixModP::from_incidence(m, 3)), 7u);
  EXPECT_EQ(rank_mod_p(MatrixModP::from_incidence(m, 7)), 7u);
}

TEST(RankModP, PackedMatchesGeneric) {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<std::size_t> dim(1, 300);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = trial < 4 ? 500 : dim(rng);
    const std::size_t c = trial < 4 ? 500 - 37 * static_cast<std::size_t>(trial) : dim(rng);
    const double density = (trial % 5 == 0) ? 0.02 : 0.5;
    const MatrixModP m = random_matrix(rng, 2, r, c, density);
    ASSERT_EQ(rank_mod2_packed(m), rank_mod_p_generic(m)) << r << "x" << c;
  }
  EXPECT_THROW(rank_mod2_packed(MatrixModP(3, 2, 2)), ConfigError);
}

TEST(RankModP, LowRankProducts) {
  std::mt19937 rng(7);
  for (std::uint32_t p : {2u, 3u, 5u, 11u}) {
    for (std::size_t k : {1u, 5u, 17u, 40u}) {
      // B (80 x k) * C (k x 90) has rank <= k; B has full column rank and C full row rank w.h.p.
      const MatrixModP b = random_matrix(rng, p, 80, k);
      const MatrixModP c = random_matrix(rng, p, k, 90);
      const std::size_t rb = rank_mod_p(b);
      const std::size_t rc = rank_mod_p(c);
      const std::size_t rbc = rank_mod_p(product(b, c));
      EXPECT_LE(rbc, std::min(rb, rc));
      if (rb == k && rc == k) EXPECT_EQ(rbc, k) << "p=" << p << " k=" << k;
    }
  }
}

TEST(RankModP, InvariantUnderTransposeAndPermutation) {
  std::mt19937 rng(99);
  for (std::uint32_t p : {2u, 3u, 13u}) {
    const MatrixModP m = random_matrix(rng, p, 60, 45, 0.1);
    const std::size_t r = rank_mod_p(m);
    EXPECT_EQ(rank_mod_p(m.transposed()), r);
    std::vector<std::size_t> rows(60), cols(45);
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    std::shuffle(rows.begin(), rows.end(), rng);
    std::shuffle(cols.begin(), cols.end(), rng);
    MatrixModP perm(p, 60, 45);
    for (std::size_t i = 0; i < 60; ++i)
      for (std::size_t j = 0; j < 45; ++j) perm.set(i, j, m.at(rows[i], cols[j]));
    EXPECT_EQ(rank_mod_p(perm), r);
  }
}

TEST(RankModP, GeometryRanksMatchTransposedProblem) {
  const IncidenceMatrix a = build_incidence(GeometryProblem(parse_root_system("A3"), 2, {2, 3}));
  const IncidenceMatrix b = build_incidence(GeometryProblem(parse_root_system("A3"), 2, {1, 2}));
  for (std::uint32_t p : {2u, 3u})
    EXPECT_EQ(rank_mod_p(MatrixModP::from_incidence(a, p)), rank_mod_p(MatrixModP::from_incidence(b, p)));
}

TEST(IntMatrix, Arithmetic) {
  IntMatrix a(2);
  a(0, 0) = 1;
  a(0, 1) = 2;
  a(1, 0) = 3;
  a(1, 1) = 4;
  const IntMatrix sq = a * a;
  EXPECT_EQ(sq(0, 0), 7);
  EXPECT_EQ(sq(0, 1), 10);
  EXPECT_EQ(sq(1, 0), 15);
  EXPECT_EQ(sq(1, 1), 22);
  EXPECT_EQ(a * IntMatrix::identity(2), a);
  EXPECT_EQ(a.shifted(1)(0, 0), 0);
  EXPECT_EQ(a.shifted(1)(0, 1), 2);
  EXPECT_FALSE(a.is_symmetric());
  EXPECT_TRUE(IntMatrix(3).is_zero());
  EXPECT_EQ(rank_over_rationals(a), 2u);
  EXPECT_EQ(rank_over_rationals(IntMatrix(4)), 0u);
}

TEST(IntMatrix, BareissRank) {
  IntMatrix j(6);
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 6; ++c) j(r, c) = 1;
  EXPECT_EQ(rank_over_rationals(j), 1u);
  EXPECT_EQ(rank_over_rationals(j.shifted(6)), 5u);
  // Hilbert-like integer matrix with huge entries stays exact.
  IntMatrix h(5);
  for (std::size_t r = 0; r < 5; ++r)
    for (std::size_t c = 0; c < 5; ++c) h(r, c) = ipow(BigInt(10), static_cast<unsigned>(20 + r * c));
  EXPECT_EQ(rank_over_rationals(h), 5u);
}

TEST(Gram, FanoPlane) {
  const IntMatrix g = gram(fano());
  ASSERT_EQ(g.size(), 7u);
  EXPECT_TRUE(g.is_symmetric());
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t k = 0; k < 7; ++k) EXPECT_EQ(g(i, k), i == k ? 4 : 2);
  EXPECT_EQ(rank_over_rationals(g), 7u);
}

TEST(EigenPowers, Examples) {
  const EigenPowerCheck id = check_eigen_powers(IntMatrix::identity(5), 2, 4);
  EXPECT_TRUE(id.ok);
  EXPECT_EQ(id.exponents, (std::vector<int>{0}));
  EXPECT_FALSE(id.zero_eigenvalue);

  IntMatrix two = IntMatrix::identity(3);
  for (std::size_t i = 0; i < 3; ++i) two(i, i) = 2;
  EXPECT_FALSE(check_eigen_powers(two, 3, 6).ok);
  EXPECT_EQ(check_eigen_powers(two, 2, 6).exponents, (std::vector<int>{1}));

  const EigenPowerCheck zero = check_eigen_powers(IntMatrix(3), 2, 2);
  EXPECT_TRUE(zero.ok);
  EXPECT_TRUE(zero.exponents.empty());
  EXPECT_TRUE(zero.zero_eigenvalue);

  const EigenPowerCheck pg = check_eigen_powers(gram(fano()), 2, 4);
  EXPECT_TRUE(pg.ok);
  EXPECT_EQ(pg.exponents, (std::vector<int>{1, 4}));
}

TEST(EigenPowers, SizeCap) {
  EXPECT_THROW(check_eigen_powers(IntMatrix::identity(kMaxSpectralSize + 1), 2, 2), UnsupportedError);
}

}  // namespace
}  // namespace opprank
