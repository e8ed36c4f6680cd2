#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <gtest/gtest.h>

#include "tlg/serialization.hpp"
#include "tlg/topp_leone.hpp"

using namespace tlg;

namespace {

const BaselineSpec kExp1 = BaselineSpec::exponential(1.0);

TLGParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> par(0.1, 10.0), bp(0.5, 3.0);
  const double a = par(rng), t = par(rng);
  switch (rng() % 4) {
    case 0: return {a, t, BaselineSpec::uniform01()};
    case 1: return {a, t, BaselineSpec::exponential(bp(rng))};
    case 2: return {a, t, BaselineSpec::weibull(bp(rng), bp(rng))};
    default: return {a, t, BaselineSpec::log_logistic(bp(rng), bp(rng))};
  }
}

}  // namespace

TEST(TLG, CdfReducesToClosedForm) {
  const TLGParams p{1.0, 1.0, kExp1};
  EXPECT_NEAR(tlg_cdf(p, 0.5), 1.0 - std::exp(-1.0), 1e-15);
  EXPECT_EQ(tlg_cdf(p, 0.0), 0.0);
  for (double x : {0.01, 0.3, 1.0, 2.5, 5.0}) {
    EXPECT_NEAR(tlg_cdf(p, x), -std::expm1(-2.0 * x), 1e-15);
    EXPECT_NEAR(tlg_pdf(p, x), 2.0 * std::exp(-2.0 * x), 1e-14);
    EXPECT_NEAR(tlg_hazard(p, x), 2.0, 1e-12);
  }
}

TEST(TLG, PdfExamples) {
  const TLGParams p{1.0, 1.0, kExp1};
  EXPECT_NEAR(tlg_pdf(p, 0.0), 2.0, 1e-15);
  EXPECT_NEAR(tlg_pdf(p, std::log(2.0)), 0.5, 1e-15);
  EXPECT_EQ(tlg_pdf(p, -1.0), 0.0);
  EXPECT_EQ(tlg_pdf(TLGParams{2.0, 1.0, BaselineSpec::uniform01()}, 1.5), 0.0);
}

TEST(TLG, HighPrecisionReferenceValues) {
  const TLGParams p{0.5, 0.5, kExp1};
  EXPECT_NEAR(tlg_cdf(p, 1.0), 0.9787745585234337, 1e-14);
  EXPECT_NEAR(tlg_survival(p, 1.0), 0.021225441476566302, 1e-15);
  EXPECT_NEAR(tlg_cdf(TLGParams{3.0, 0.7, BaselineSpec::weibull(2.0, 1.5)}, 1.2),
              0.57887817825827565, 1e-14);
  EXPECT_NEAR(tlg_cdf(TLGParams{0.4, 1.3, BaselineSpec::log_logistic(2.5, 0.8)}, 1.2),
              0.95454646279227665, 1e-14);
}

TEST(TLG, ToppLeoneSpecialCase) {
  for (double a : {0.3, 1.0, 4.5}) {
    const TLGParams p{a, 1.0, BaselineSpec::uniform01()};
    for (double x : {0.05, 0.25, 0.5, 0.8, 0.99}) {
      EXPECT_NEAR(tlg_cdf(p, x), std::pow(x * (2.0 - x), a), 1e-12);
    }
  }
}

TEST(TLG, SurvivalExamples) {
  const TLGParams p{1.0, 1.0, kExp1};
  EXPECT_NEAR(tlg_survival(p, 0.5), std::exp(-1.0), 1e-15);
  EXPECT_EQ(tlg_survival(p, 0.0), 1.0);
  // Complementary form keeps relative accuracy long after cdf rounds to 1.
  EXPECT_NEAR(tlg_survival(p, 20.0) / std::exp(-40.0), 1.0, 1e-12);
}

TEST(TLG, HazardBehaviour) {
  const TLGParams c{1.0, 0.5, kExp1};
  for (double x = 0.05; x <= 10.0; x += 0.05) {
    const double h = tlg_hazard(c, x);
    EXPECT_TRUE(std::isfinite(h) && h > 0.0) << x;
  }
  // -(x/s)^k overflows, so the survival function is exactly zero.
  EXPECT_EQ(tlg_hazard(TLGParams{1.0, 1.0, BaselineSpec::weibull(10.0, 1.0)}, 1e40),
            std::numeric_limits<double>::infinity());
  EXPECT_THROW(tlg_hazard(c, 0.0), std::domain_error);
  EXPECT_THROW(tlg_hazard(c, -1.0), std::domain_error);
}

TEST(TLG, QuantileExamples) {
  EXPECT_NEAR(tlg_quantile(TLGParams{1.0, 1.0, kExp1}, 0.75), std::log(2.0), 1e-15);
  EXPECT_EQ(tlg_quantile(TLGParams{1.0, 1.0, kExp1}, 0.0), 0.0);
  EXPECT_NEAR(tlg_quantile(TLGParams{2.0, 1.0, kExp1}, 0.25), 0.34657359027997265, 1e-14);
  EXPECT_THROW(tlg_quantile(TLGParams{1.0, 1.0, kExp1}, -0.1), std::domain_error);
}

TEST(TLG, QuantileRoundtripRandom) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> uu(0.001, 0.999);
  for (int i = 0; i < 200; ++i) {
    const TLGParams p = random_params(rng);
    const double u = uu(rng);
    EXPECT_NEAR(tlg_cdf(p, tlg_quantile(p, u)), u, 1e-10) << json(p).dump();
  }
}

TEST(TLG, PdfMatchesFiniteDifference) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> uu(0.02, 0.98);
  for (int i = 0; i < 200; ++i) {
    const TLGParams p = random_params(rng);
    const double x = tlg_quantile(p, uu(rng));
    const double h = 1e-5 * std::max(x, 1e-3);
    const double fd = (tlg_cdf(p, x + h) - tlg_cdf(p, x - h)) / (2.0 * h);
    EXPECT_NEAR(fd / tlg_pdf(p, x), 1.0, 1e-6) << json(p).dump() << " x=" << x;
  }
}

TEST(TLG, CdfMonotoneAndBounded) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const TLGParams p = random_params(rng);
    double prev = 0.0;
    for (double u = 0.0; u <= 1.0; u += 0.01) {
      const double x = tlg_quantile(p, std::min(u, 0.999999));
      const double c = tlg_cdf(p, x);
      EXPECT_GE(c, prev - 1e-15);
      EXPECT_LE(c, 1.0);
      prev = c;
    }
  }
}

TEST(TLG, DensityIntegratesToOne) {
  boost::math::quadrature::tanh_sinh<double> q;
  const TLGParams params[] = {{0.5, 0.5, kExp1},
                              {3.0, 0.7, BaselineSpec::weibull(2.0, 1.5)},
                              {2.0, 3.0, BaselineSpec::uniform01()}};
  for (const auto& p : params) {
    const double hi = std::isfinite(p.baseline.support_hi()) ? p.baseline.support_hi()
                                                              : tlg_quantile(p, 1.0 - 1e-15);
    const double mass = q.integrate([&](double x) { return tlg_pdf(p, x); }, 0.0, hi);
    EXPECT_NEAR(mass, 1.0, 1e-6) << json(p).dump();
  }
}

TEST(TLG, SamplingIsDeterministic) {
  const TLGParams p{2.0, 0.5, kExp1};
  std::mt19937_64 a(7), b(7);
  EXPECT_TRUE(tlg_sample(p, a, 0).empty());
  EXPECT_EQ(tlg_sample(p, a, 100), tlg_sample(p, b, 100));
}

TEST(TLG, Validation) {
  EXPECT_THROW(TLGParams(0.0, 1.0, kExp1), std::invalid_argument);
  EXPECT_THROW(TLGParams(1.0, -2.0, kExp1), std::invalid_argument);
  EXPECT_THROW(tlg_cdf(TLGParams{1.0, 1.0, kExp1}, std::numeric_limits<double>::infinity()),
               std::domain_error);
}

TEST(TLG, JsonRoundtrip) {
  const TLGParams p{0.4, 1.3, BaselineSpec::log_logistic(2.5, 0.8)};
  EXPECT_EQ(json(p).get<TLGParams>(), p);
}
