#include <gtest/gtest.h>

#include <algorithm>

#include "opprank/error.hpp"
#include "opprank/rootdata.hpp"

namespace opprank {
namespace {

std::vector<RootSystemSpec> all_systems() {
  std::vector<RootSystemSpec> out;
  for (int l = 1; l <= 8; ++l) out.push_back({Family::A, l});
  for (int l = 2; l <= 8; ++l) out.push_back({Family::B, l});
  for (int l = 2; l <= 8; ++l) out.push_back({Family::C, l});
  for (int l = 3; l <= 8; ++l) out.push_back({Family::D, l});
  for (int l = 6; l <= 8; ++l) out.push_back({Family::E, l});
  out.push_back({Family::F, 4});
  out.push_back({Family::G, 2});
  return out;
}

TEST(RootData, PositiveRootCountsMatchClassicalTable) {
  // Independent table: A_l l(l+1)/2, B/C l^2, D l(l-1), E 36/63/120, F4 24, G2 6.
  const std::pair<const char*, std::size_t> table[] = {
      {"A1", 1}, {"A2", 3}, {"A3", 6}, {"A8", 36}, {"B2", 4}, {"B5", 25}, {"C3", 9}, {"C8", 64},
      {"D3", 6}, {"D4", 12}, {"D8", 56}, {"E6", 36}, {"E7", 63}, {"E8", 120}, {"F4", 24}, {"G2", 6}};
  for (const auto& [name, count] : table) {
    EXPECT_EQ(RootSystem(parse_root_system(name)).positive_roots().size(), count) << name;
  }
  for (const auto& spec : all_systems()) {
    EXPECT_EQ(RootSystem(spec).positive_roots().size(), classical_positive_root_count(spec)) << to_string(spec);
  }
}

TEST(RootData, CartanShapeAndSimpleRoots) {
  for (const auto& spec : all_systems()) {
    const RootSystem rs(spec);
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      EXPECT_EQ(rs.cartan(i, i), 2);
      for (std::size_t j = 0; j < rs.rank(); ++j)
        if (i != j) EXPECT_LE(rs.cartan(i, j), 0);
      std::vector<int> e(rs.rank(), 0);
      e[i] = 1;
      EXPECT_EQ(rs.simple_root(i).simple_coords, e);
    }
    for (const Root& r : rs.positive_roots())
      EXPECT_TRUE(std::all_of(r.simple_coords.begin(), r.simple_coords.end(), [](int c) { return c >= 0; }));
  }
}

TEST(RootData, G2OffDiagonals) {
  const RootSystem g2(parse_root_system("G2"));
  EXPECT_EQ(g2.positive_roots().size(), 6u);
  std::vector<int> off{g2.cartan(0, 1), g2.cartan(1, 0)};
  std::sort(off.begin(), off.end());
  EXPECT_EQ(off, (std::vector<int>{-3, -1}));
}

TEST(RootData, SymmetrizedCartanIsPositiveDefinite) {
  for (const auto& spec : all_systems()) {
    const RootSystem rs(spec);
    const std::size_t n = rs.rank();
    // Leading principal minors by exact fraction-free elimination.
    std::vector<long long> m(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        m[i * n + j] = static_cast<long long>(rs.symmetrizer()[i]) * rs.cartan(i, j);
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(m[i * n + j], m[j * n + i]) << to_string(spec);
    long long prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
      ASSERT_GT(m[k * n + k], 0) << to_string(spec) << " minor " << k + 1;
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) m[i * n + j] = (m[k * n + k] * m[i * n + j] - m[i * n + k] * m[k * n + j]) / prev;
      }
      prev = m[k * n + k];
    }
  }
}

TEST(RootData, RootStringClosureUnderSimpleReflections) {
  for (const auto& spec : all_systems()) {
    const RootSystem rs(spec);
    const auto& roots = rs.positive_roots();
    for (const Root& beta : roots) {
      for (std::size_t i = 0; i < rs.rank(); ++i) {
        if (beta == rs.simple_root(i)) continue;
        // s_i(beta) = beta - <beta, alpha_i^vee> alpha_i.
        std::vector<int> image = beta.simple_coords;
        int pair = 0;
        for (std::size_t j = 0; j < rs.rank(); ++j) pair += rs.cartan(i, j) * beta.simple_coords[j];
        image[i] -= pair;
        const bool found = std::any_of(roots.begin(), roots.end(), [&](const Root& r) { return r.simple_coords == image; });
        EXPECT_TRUE(found) << to_string(spec);
      }
    }
  }
}

TEST(RootData, PairingBasics) {
  const RootSystem a2(parse_root_system("A2"));
  for (int i = 1; i <= 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      EXPECT_EQ(a2.pairing(Weight::fundamental(2, i), a2.simple_root(j)), (static_cast<std::size_t>(i - 1) == j) ? 1 : 0);
  for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(a2.pairing(a2.root_in_weight_basis(a2.simple_root(i)), a2.simple_root(i)), 2);
  EXPECT_EQ(a2.pairing(a2.rho(), a2.highest_root()), 2);
  EXPECT_THROW(a2.pairing(Weight{1, 2, 3}, a2.simple_root(0)), ConfigError);
}

TEST(RootData, RhoPairingIsCorootHeight) {
  for (const auto& spec : all_systems()) {
    const RootSystem rs(spec);
    for (const Root& r : rs.positive_roots()) EXPECT_EQ(rs.pairing(rs.rho(), r), r.coroot_height()) << to_string(spec);
  }
}

TEST(RootData, RootInWeightBasis) {
  const RootSystem a1(parse_root_system("A1"));
  EXPECT_EQ(a1.root_in_weight_basis(a1.simple_root(0)), (Weight{2}));
  const RootSystem a2(parse_root_system("A2"));
  EXPECT_EQ(a2.root_in_weight_basis(a2.simple_root(0)), (Weight{2, -1}));
  EXPECT_EQ(a2.root_in_weight_basis(a2.highest_root()), (Weight{1, 1}));
}

TEST(RootData, CorootCoordinatesUseRootLengths) {
  // <alpha, alpha^vee> = 2 for every root, long or short.
  for (const auto& spec : all_systems()) {
    const RootSystem rs(spec);
    for (const Root& r : rs.positive_roots()) EXPECT_EQ(rs.pairing(rs.root_in_weight_basis(r), r), 2) << to_string(spec);
  }
}

TEST(RootData, DominanceOrder) {
  const RootSystem a2(parse_root_system("A2"));
  EXPECT_TRUE(a2.dominates(Weight{1, 1}, Weight{0, 0}));  // highest root
  EXPECT_TRUE(a2.dominates(Weight{2, 0}, Weight{0, 1}));  // difference is alpha_1
  EXPECT_FALSE(a2.dominates(Weight{1, 0}, Weight{0, 1}));  // w1 - w2 not in the root lattice
  EXPECT_FALSE(a2.dominates(Weight{0, 0}, Weight{1, 1}));
  std::vector<std::int64_t> c;
  ASSERT_TRUE(a2.to_root_basis(Weight{2, 0} - Weight{0, 1}, c));
  EXPECT_EQ(c, (std::vector<std::int64_t>{1, 0}));
}

TEST(RootData, ParseErrors) {
  EXPECT_THROW(parse_root_system("E5"), ConfigError);
  EXPECT_THROW(parse_root_system("B1"), ConfigError);
  EXPECT_THROW(parse_root_system("D2"), ConfigError);
  EXPECT_THROW(parse_root_system("F3"), ConfigError);
  EXPECT_EQ(parse_root_system("A9").rank, 9);
  EXPECT_THROW(parse_root_system("A33"), ConfigError);
  EXPECT_THROW(parse_root_system("X2"), ConfigError);
  EXPECT_THROW(parse_root_system("A"), ConfigError);
  EXPECT_EQ(to_string(parse_root_system("e6")), "E6");
  EXPECT_EQ(parse_weight("[3, 0,1]"), (Weight{3, 0, 1}));
  EXPECT_THROW(parse_weight("1,,2"), ConfigError);
}

}  // namespace
}  // namespace opprank
