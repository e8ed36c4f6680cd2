#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "tlg/majorization.hpp"
#include "tlg/topp_leone.hpp"

using namespace tlg;

using V = RealVector;

TEST(Majorization, Examples) {
  EXPECT_TRUE(is_majorized(V{4, 6}, V{1, 9}));
  EXPECT_FALSE(is_majorized(V{1, 9}, V{4, 6}));
  EXPECT_TRUE(is_majorized(V{3, 1, 2}, V{3, 1, 2}));
  EXPECT_FALSE(is_majorized(V{1, 2}, V{2, 3}));
  EXPECT_TRUE(is_majorized(V{2, 2, 2}, V{0, 6, 0}));
  EXPECT_THROW(is_majorized(V{1, 2}, V{1, 2, 3}), std::domain_error);
}

TEST(Majorization, WeakSubmajorization) {
  EXPECT_TRUE(is_weakly_submajorized(V{0.1, 0.4}, V{0.2, 0.5}));
  EXPECT_TRUE(is_weakly_submajorized(V{1, 1}, V{0, 3}));
  EXPECT_FALSE(is_weakly_submajorized(V{0, 3}, V{1, 1}));
  EXPECT_THROW(is_weakly_submajorized(V{1}, V{1, 2}), std::domain_error);
}

TEST(Majorization, Componentwise) {
  EXPECT_TRUE(componentwise_leq(V{0.1, 0.4}, V{0.2, 0.5}));
  EXPECT_FALSE(componentwise_leq(V{1, 5}, V{2, 4}));
  EXPECT_TRUE(componentwise_leq(V{3, 3}, V{3, 3}));
  EXPECT_THROW(componentwise_leq(V{1}, V{}), std::domain_error);
}

TEST(Majorization, RobinHoodTransfer) {
  V v{1, 9};
  robin_hood_transfer(v, 1, 0, 4.0);
  EXPECT_EQ(v, (V{5, 5}));
  EXPECT_TRUE(is_majorized(v, V{1, 9}));
  V w{1, 9};
  EXPECT_THROW(robin_hood_transfer(w, 1, 0, 4.5), std::domain_error);
  EXPECT_THROW(robin_hood_transfer(w, 0, 1, 1.0), std::domain_error);
}

TEST(Majorization, RandomPairs) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 2 + i % 6;
    const auto [x, y] = random_majorization_pair(rng, n, 10.0, 1 + i % 7);
    ASSERT_EQ(x.size(), n);
    EXPECT_NEAR(std::accumulate(y.begin(), y.end(), 0.0), 10.0, 1e-12);
    EXPECT_TRUE(is_majorized(x, y));
    EXPECT_TRUE(is_weakly_submajorized(x, y));
  }
  const auto [x0, y0] = random_majorization_pair(rng, 4, 3.0, 0);
  EXPECT_TRUE(is_majorized(x0, y0) && is_majorized(y0, x0));
}

TEST(Schur, SumHasZeroTerms) {
  const SymmetricFunction sum = [](std::span<const double> v) {
    return std::accumulate(v.begin(), v.end(), 0.0);
  };
  const SchurReport r = schur_concavity_witness(sum, V{0.3, 1.7, 4.0});
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(r.max_term, 0.0, 1e-8);
}

TEST(Schur, KnownShapes) {
  const SymmetricFunction sq = [](std::span<const double> v) {
    double s = 0.0;
    for (double e : v) s += e * e;
    return s;
  };
  EXPECT_TRUE(schur_convexity_witness(sq, V{1, 2, 5}).pass);
  EXPECT_FALSE(schur_concavity_witness(sq, V{1, 2, 5}).pass);
  EXPECT_THROW(schur_concavity_witness(sq, V{1}), std::domain_error);
}

TEST(Schur, ParallelCdfIsSchurConcaveInTheta) {
  // phi(theta) = sum log F_k at fixed x for a common alpha.
  const BaselineSpec g = BaselineSpec::exponential(1.0);
  const SymmetricFunction phi = [&](std::span<const double> th) {
    double s = 0.0;
    for (double t : th) s += std::log(tlg_cdf(TLGParams{0.5, t, g}, 1.0));
    return s;
  };
  EXPECT_TRUE(schur_concavity_witness(phi, V{0.1, 0.4}).pass);
  EXPECT_TRUE(schur_concavity_witness(phi, V{0.5, 2.0, 7.0}).pass);
}

TEST(Schur, SeriesHazardSumIsSchurConvexInAlpha) {
  const BaselineSpec g = BaselineSpec::exponential(1.0);
  const SymmetricFunction z = [&](std::span<const double> a) {
    double s = 0.0;
    for (double e : a) s += tlg_hazard(TLGParams{e, 0.5, g}, 1.3);
    return s;
  };
  EXPECT_TRUE(schur_convexity_witness(z, V{1, 9}).pass);
  EXPECT_TRUE(schur_convexity_witness(z, V{0.4, 2.5, 6.0}).pass);
}

TEST(Tau, HandValue) {
  const V a{1, 2, 3};
  const ConvexityReport r = tau_convexity_check(0.5, a);
  EXPECT_NEAR(r.min_second_difference, 4.0 / 21.0, 1e-12);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.worst_index, 1u);
}

TEST(Tau, TinyStepIsNearlyLinear) {
  const ConvexityReport r = tau_convexity_check(0.5, V{2.0, 2.0 + 1e-4, 2.0 + 2e-4});
  EXPECT_NEAR(r.min_second_difference, 0.0, 1e-7);
  EXPECT_TRUE(r.pass);
}

TEST(Tau, RandomDraws) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> tt(0.05, 0.95), a0(0.1, 5.0);
  for (int i = 0; i < 100; ++i) {
    const double t = tt(rng), a = a0(rng);
    const std::size_t m = 3 + i % 18;
    const double h = std::uniform_real_distribution<double>(0.05, (10.0 - a) / (m - 1))(rng);
    V alphas(m);
    for (std::size_t k = 0; k < m; ++k) alphas[k] = a + h * static_cast<double>(k);
    EXPECT_TRUE(tau_convexity_check(t, alphas).pass) << t << ' ' << a << ' ' << h;
  }
}

TEST(Tau, Validation) {
  EXPECT_THROW(tau_convexity_check(0.0, V{1, 2, 3}), std::domain_error);
  EXPECT_THROW(tau_convexity_check(0.5, V{1, 2}), std::domain_error);
  EXPECT_THROW(tau_convexity_check(0.5, V{1, 2, 4}), std::domain_error);
}

TEST(Lemma, SquareSumIsSchurConvex) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    const auto [x, y] = random_majorization_pair(rng, 2 + i % 5, 5.0, 3);
    double sx = 0.0, sy = 0.0;
    for (double e : x) sx += e * e;
    for (double e : y) sy += e * e;
    EXPECT_LE(sx, sy + 1e-12);
  }
}
