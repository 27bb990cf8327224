#include "binet/powerlaw.hpp"

#include <cmath>
#include <random>

#include <boost/math/special_functions/zeta.hpp>
#include <gtest/gtest.h>

#include "binet/generators.hpp"
#include "binet/metrics.hpp"
#include "fixtures.hpp"

namespace binet {
namespace {

double brute_hurwitz(double s, double q) {
  const std::size_t terms = 200000;
  double sum = 0;
  for (std::size_t n = terms; n-- > 0;) sum += std::pow(static_cast<double>(n) + q, -s);
  const double a = static_cast<double>(terms) + q;
  return sum + std::pow(a, 1 - s) / (s - 1) + 0.5 * std::pow(a, -s);
}

TEST(HurwitzZeta, MatchesRiemannAtOne) {
  for (double s : {1.1, 1.5, 2.0, 2.5, 3.7, 10.0, 40.0}) {
    EXPECT_NEAR(hurwitz_zeta(s, 1.0), boost::math::zeta(s), 1e-10 * boost::math::zeta(s)) << s;
  }
}

TEST(HurwitzZeta, MatchesDirectSum) {
  for (double s : {1.5, 2.5, 4.0}) {
    for (double q : {1.0, 2.0, 3.7, 25.0, 400.0}) {
      const double want = brute_hurwitz(s, q);
      EXPECT_NEAR(hurwitz_zeta(s, q), want, 1e-9 * want) << s << " " << q;
    }
  }
}

TEST(HurwitzZeta, ShiftIdentity) {
  for (double s : {1.3, 2.2, 6.0}) {
    for (double q : {1.0, 5.5, 80.0}) {
      EXPECT_NEAR(hurwitz_zeta(s, q) - hurwitz_zeta(s, q + 1), std::pow(q, -s), 1e-12);
    }
  }
}

TEST(FitPowerLaw, RecoversZipfExponent) {
  gen::Rng rng(20240601);
  gen::ZipfSampler zipf(2.5);
  std::vector<std::uint64_t> samples(100000);
  for (auto& s : samples) s = zipf(rng);
  auto fit = fit_power_law(samples, GammaMethod::mle, 1);
  EXPECT_NEAR(fit.gamma, 2.5, 0.05);
  EXPECT_EQ(fit.k_min, 1u);
  EXPECT_EQ(fit.sample_size, samples.size());
  EXPECT_LT(fit.goodness, 0.01);
}

TEST(FitPowerLaw, ScansKMinWhenUnset) {
  gen::Rng rng(5);
  gen::ZipfSampler zipf(2.2);
  std::vector<std::uint64_t> samples(20000);
  for (auto& s : samples) s = zipf(rng);
  auto fit = fit_power_law(samples);
  EXPECT_NEAR(fit.gamma, 2.2, 0.1);
  EXPECT_GE(fit.k_min, 1u);
}

TEST(FitPowerLaw, MinimalInputBothMethods) {
  const std::vector<std::uint64_t> degrees = {1, 1, 1, 1, 8};
  for (auto method : {GammaMethod::mle, GammaMethod::ccdf_ls}) {
    auto fit = fit_power_law(degrees, method, 1);
    EXPECT_GT(fit.gamma, 1.0) << to_string(method);
    EXPECT_TRUE(std::isfinite(fit.gamma)) << to_string(method);
    EXPECT_EQ(fit.method, method);
  }
}

TEST(FitPowerLaw, CcdfGoodnessIsRSquared) {
  // An exact power-law CCDF lies on a straight line.
  std::vector<std::uint64_t> degrees;
  for (std::uint64_t k = 1; k <= 64; k *= 2) {
    const std::size_t count = static_cast<std::size_t>(std::llround(4096.0 / static_cast<double>(k * k)));
    for (std::size_t i = 0; i < count; ++i) degrees.push_back(k);
  }
  auto fit = fit_power_law(degrees, GammaMethod::ccdf_ls);
  EXPECT_GT(fit.goodness, 0.9);
  EXPECT_LE(fit.goodness, 1.0);
}

TEST(FitPowerLaw, Errors) {
  EXPECT_THROW(fit_power_law({}), InsufficientData);
  EXPECT_THROW(fit_power_law({0, 0, 5}), InsufficientData);
  EXPECT_THROW(fit_power_law({3, 3, 3, 3}), AllDegreesEqual);
  EXPECT_THROW(fit_power_law({3, 3, 3, 3}, GammaMethod::ccdf_ls), AllDegreesEqual);
  EXPECT_THROW(fit_power_law({1, 2, 3}, GammaMethod::mle, 4), InsufficientData);
}

TEST(FitPowerLaw, SmallDdgShapeReportsGamma) {
  auto m = compute_metrics(fixtures::shaped_graph(40, 30, 9));
  ASSERT_TRUE(m.gamma.has_value());
  EXPECT_GT(*m.gamma, 1.0);
  EXPECT_TRUE(m.gamma_low_confidence);
}

TEST(GammaMethod, Parse) {
  EXPECT_EQ(parse_gamma_method("mle"), GammaMethod::mle);
  EXPECT_EQ(parse_gamma_method("ccdf-ls"), GammaMethod::ccdf_ls);
  EXPECT_THROW(parse_gamma_method("ols"), InvalidArgument);
}

}  // namespace
}  // namespace binet
