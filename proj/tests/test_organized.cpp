#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>

#include "specbisect/generators.hpp"
#include "specbisect/oracle.hpp"
#include "specbisect/organized.hpp"
#include "specbisect/spectral.hpp"

namespace specbisect {
namespace {

const QuadPartition kRoachSbQuad{{0, 1, 2, 3},
                                 {4, 5, 6, 7},
                                 {8, 9, 10, 11},
                                 {12, 13, 14, 15}};

// All quads of a bisection (both halves even), without symmetry reduction.
std::vector<QuadPartition> all_quads(const Bisection& bis) {
  std::vector<QuadPartition> out;
  const auto halves = [](const VertexSet& side) {
    std::vector<std::pair<VertexSet, VertexSet>> splits;
    const int k = static_cast<int>(side.size());
    for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
      if (std::popcount(mask) != k / 2) continue;
      VertexSet in, outside;
      for (int i = 0; i < k; ++i)
        (mask >> i & 1 ? in : outside).push_back(side[i]);
      splits.emplace_back(in, outside);
    }
    return splits;
  };
  for (const auto& [a1, a2] : halves(bis.a))
    for (const auto& [b1, b2] : halves(bis.b))
      out.push_back({a1, a2, b1, b2});
  return out;
}

TEST(QuadScore, RoachPaperValue) {
  EXPECT_EQ(quad_score(gen_roach(4), kRoachSbQuad), 1 + 1 - 4 - 0);
}

TEST(QuadScore, SymmetricFixtures) {
  const Graph k4 = gen_fixture(FixtureKind::complete, 4);
  EXPECT_EQ(quad_score(k4, {{0}, {1}, {2}, {3}}), 0);
  const Graph c4 = gen_fixture(FixtureKind::cycle, 4);
  EXPECT_EQ(quad_score(c4, {{0}, {1}, {3}, {2}}), 0);
}

TEST(QuadScore, RejectsInvalidQuads) {
  const Graph c4 = gen_fixture(FixtureKind::cycle, 4);
  EXPECT_THROW(quad_score(c4, {{0, 1}, {2}, {3}, {}}), InputError);
  EXPECT_THROW(quad_score(c4, {{0}, {0}, {2}, {3}}), InputError);
  EXPECT_THROW(quad_score(c4, {{0}, {1}, {2}, {5}}), InputError);
}

TEST(AltQuadScore, RoachAndK4) {
  const Graph roach = gen_roach(4);
  EXPECT_EQ(alt_quad_score(roach, kRoachSbQuad), 4 + (-2));
  const Graph k4 = gen_fixture(FixtureKind::complete, 4);
  EXPECT_EQ(alt_quad_score(k4, {{0}, {1}, {2}, {3}}), 4 + 0);
}

TEST(AltQuadScore, IdentityHoldsForEveryQuad) {
  std::mt19937_64 rng(40);
  int graphs = 0;
  while (graphs < 25) {
    const Graph g = gen_erdos_renyi(8, 0.5, rng());
    ++graphs;
    const Bisection bis{{0, 1, 2, 3}, {4, 5, 6, 7}};
    const int cut = cut_size(g, bis);
    for (const auto& q : all_quads(bis))
      ASSERT_EQ(alt_quad_score(g, q), cut + quad_score(g, q));
  }
  // larger randomized spot-check
  for (int trial = 0; trial < 5; ++trial) {
    const Graph g = gen_erdos_renyi(16, 0.3, rng());
    Bisection bis;
    for (int v = 0; v < 16; ++v) (v % 2 ? bis.a : bis.b).push_back(v);
    const int cut = cut_size(g, bis);
    const auto quads = all_quads(bis);
    for (std::size_t i = 0; i < quads.size(); i += 97)
      ASSERT_EQ(alt_quad_score(g, quads[i]), cut + quad_score(g, quads[i]));
  }
}

TEST(ImprovedCut, RoachQuadReachesMinimum) {
  const Graph roach = gen_roach(4);
  const Bisection improved = improved_cut_from_quad(kRoachSbQuad);
  EXPECT_EQ(improved.a, (VertexSet{0, 1, 2, 3, 8, 9, 10, 11}));
  EXPECT_EQ(cut_size(roach, improved), 2);
}

TEST(ImprovedCut, ScoreTrichotomy) {
  // sign of the score decides strictly smaller / equal / strictly larger
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = gen_erdos_renyi(8, 0.5, rng());
    const Bisection bis{{0, 1, 2, 3}, {4, 5, 6, 7}};
    const int cut = cut_size(g, bis);
    for (const auto& q : all_quads(bis)) {
      const long long score = quad_score(g, q);
      const int improved = cut_size(g, improved_cut_from_quad(q));
      if (score < 0) ASSERT_LT(improved, cut);
      if (score == 0) ASSERT_EQ(improved, cut);
      if (score > 0) ASSERT_GT(improved, cut);
    }
  }
}

TEST(IndicatorVector, ValuesAndInvariants) {
  const Eigen::VectorXd v = indicator_vector({{0, 1}, {2, 3}});
  EXPECT_NEAR(v[0], 0.5, 1e-15);
  EXPECT_NEAR(v[1], 0.5, 1e-15);
  EXPECT_NEAR(v[2], -0.5, 1e-15);
  EXPECT_NEAR(v[3], -0.5, 1e-15);
  EXPECT_NEAR(v.sum(), 0.0, 1e-15);
  EXPECT_NEAR(v.norm(), 1.0, 1e-15);
  EXPECT_THROW(indicator_vector({{0}, {1, 2}}), InputError);
}

TEST(IndicatorVector, RayleighQuotientCountsCut) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 4 + 2 * static_cast<int>(rng() % 10);
    const Graph g = gen_erdos_renyi(n, 0.4, rng());
    Bisection bis;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    bis.a.assign(perm.begin(), perm.begin() + n / 2);
    bis.b.assign(perm.begin() + n / 2, perm.end());
    const Eigen::VectorXd y = indicator_vector(bis);
    const double quotient = y.dot(laplacian(g) * y);
    EXPECT_NEAR(quotient, 4.0 / n * cut_size(g, bis), 1e-9);
  }
}

TEST(QuadIndicator, RoachBlocksAndOrthogonality) {
  const Eigen::VectorXd x = quad_indicator(kRoachSbQuad);
  for (int v : {0, 1, 2, 3, 8, 9, 10, 11}) EXPECT_NEAR(x[v], 0.25, 1e-15);
  for (int v : {4, 5, 6, 7, 12, 13, 14, 15}) EXPECT_NEAR(x[v], -0.25, 1e-15);
  const Eigen::VectorXd y =
      indicator_vector({{0, 1, 2, 3, 4, 5, 6, 7}, {8, 9, 10, 11, 12, 13, 14, 15}});
  EXPECT_NEAR(x.dot(y), 0.0, 1e-15);
}

TEST(QuadIndicator, RayleighIdentityExhaustive) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 15; ++trial) {
    const Graph g = gen_erdos_renyi(8, 0.5, rng());
    const Eigen::MatrixXd L = laplacian(g);
    const Bisection bis{{0, 1, 2, 3}, {4, 5, 6, 7}};
    const int cut = cut_size(g, bis);
    for (const auto& q : all_quads(bis)) {
      const Eigen::VectorXd x = quad_indicator(q);
      // the quotient counts edges, so rounding recovers the exact integer
      const double lhs = 8.0 / 4.0 * x.dot(L * x);
      ASSERT_EQ(std::llround(lhs), cut + quad_score(g, q));
      ASSERT_NEAR(lhs, double(cut + quad_score(g, q)), 1e-9);
    }
  }
}

TEST(Bounds, FixtureValues) {
  const Graph c4 = gen_fixture(FixtureKind::cycle, 4);
  EXPECT_NEAR(bound_donath_hoffman(c4, 2.0), 2.0, 1e-12);
  const Graph k4 = gen_fixture(FixtureKind::complete, 4);
  EXPECT_NEAR(bound_donath_hoffman(k4, 4.0), 4.0, 1e-12);
  const Graph p4 = gen_fixture(FixtureKind::path, 4);
  const auto pairs = smallest_eigenpairs(laplacian(p4), 2);
  EXPECT_NEAR(pairs[1].value, 2.0 - std::sqrt(2.0), 1e-10);
  EXPECT_NEAR(bound_donath_hoffman(p4, pairs[1].value), 2.0 - std::sqrt(2.0), 1e-10);
  EXPECT_LE(bound_donath_hoffman(p4, pairs[1].value), 1.0);
}

TEST(Bounds, TwoEigenvalueBoundAndCondition) {
  const Graph k4 = gen_fixture(FixtureKind::complete, 4);
  EXPECT_NEAR(bound_l2_l3(k4, 4.0, 4.0, 0), 4.0, 1e-12);
  const Graph c4 = gen_fixture(FixtureKind::cycle, 4);
  EXPECT_NEAR(bound_l2_l3(c4, 2.0, 2.0, 0), 2.0, 1e-12);
  // equal eigenvalues: the refined bound never wins
  EXPECT_FALSE(tighter_bound_condition(c4, 2.0, 2.0, 0));
  EXPECT_FALSE(tighter_bound_condition(c4, 2.0, 2.0, 1));
  // roach(4): evaluates from the computed spectrum and the oracle D_C
  const Graph roach = gen_roach(4);
  const SpectralBasis basis = spectral_basis(roach);
  const auto mins = min_bisection_bf(roach);
  const auto organized = organized_partition_bf(roach, mins.bisections.front());
  const bool tighter = tighter_bound_condition(roach, basis.lambda2,
                                               basis.lambda3, organized.value);
  EXPECT_EQ(tighter, organized.value <
                         roach.num_vertices() / 4.0 *
                             (basis.lambda3 - basis.lambda2));
  EXPECT_LE(bound_l2_l3(roach, basis.lambda2, basis.lambda3, organized.value),
            mins.cut + 1e-9);
}

}  // namespace
}  // namespace specbisect
