#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "linecast/error.hpp"
#include "linecast/stats.hpp"

namespace linecast {
namespace {

// Composite Simpson integration of the standard normal density from 0 to x,
// independent of the erfc route used by the library.
double cdf_by_quadrature(double x) {
  const int n = 20000;  // even
  const double h = x / n;
  const auto pdf = [](double t) { return std::exp(-0.5 * t * t) / std::sqrt(2.0 * std::numbers::pi); };
  double s = pdf(0.0) + pdf(x);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * pdf(i * h);
  return 0.5 + s * h / 3.0;
}

TEST(StdNormalCdf, Examples) {
  EXPECT_EQ(std_normal_cdf(0.0), 0.5);
  EXPECT_NEAR(std_normal_cdf(7.0 / 13.588), 0.6968, 5e-5);
  EXPECT_NEAR(std_normal_cdf(1.959964), 0.975, 1e-6);
}

TEST(StdNormalCdf, MatchesQuadratureOracle) {
  for (double x = -6.0; x <= 6.0; x += 0.125) {
    EXPECT_NEAR(std_normal_cdf(x), cdf_by_quadrature(x), 1e-7) << "x=" << x;
  }
}

TEST(StdNormalCdf, SymmetryAndMonotonicity) {
  double prev = 0.0;
  for (double x = -8.0; x <= 8.0; x += 1.0 / 64) {
    const double p = std_normal_cdf(x);
    EXPECT_NEAR(p + std_normal_cdf(-x), 1.0, 1e-12);
    EXPECT_GE(p, prev);
    prev = p;
  }
}

TEST(Moments, Examples) {
  const std::vector<double> fives = {5, 5, 5};
  const auto m = moments(fives);
  EXPECT_EQ(m.mean, 5.0);
  EXPECT_EQ(m.std_dev, 0.0);
  EXPECT_EQ(m.n, 3u);

  const std::vector<double> pair = {0, 2};
  const auto p = moments(pair);
  EXPECT_EQ(p.mean, 1.0);
  EXPECT_NEAR(p.std_dev, std::sqrt(2.0), 1e-15);

  try {
    moments(std::vector<double>{1.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InsufficientData);
  }
}

TEST(Moments, PermutationInvariantAndScaleEquivariant) {
  std::mt19937_64 rng(42);
  std::normal_distribution<double> ld(0.0, 13.588);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> v(2560);
    for (auto& x : v) x = std::round(ld(rng) * 2.0) / 2.0;
    const auto a = moments(v);
    std::shuffle(v.begin(), v.end(), rng);
    const auto b = moments(v);
    EXPECT_NEAR(a.mean, b.mean, 1e-12 * std::max(1.0, std::fabs(a.mean)));
    EXPECT_NEAR(a.std_dev, b.std_dev, 1e-12 * a.std_dev);

    const double c = -3.25;
    std::vector<double> scaled = v;
    for (auto& x : scaled) x *= c;
    EXPECT_NEAR(moments(scaled).std_dev, std::fabs(c) * a.std_dev, 1e-12 * std::fabs(c) * a.std_dev);
  }
}

TEST(ProportionZ, Examples) {
  EXPECT_EQ(proportion_z(50, 50, 0.5).z, 0.0);

  const auto home_fav = proportion_z(816, 888, 0.5);
  EXPECT_EQ(home_fav.n, 1704u);
  EXPECT_NEAR(home_fav.z, -1.744, 5e-4);

  EXPECT_NEAR(proportion_z(15, 13, 0.5).z, 0.378, 5e-4);
}

TEST(ProportionZ, Errors) {
  try {
    proportion_z(0, 0, 0.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptySample);
  }
  EXPECT_THROW(proportion_z(3, 4, 0.0), Error);
  EXPECT_THROW(proportion_z(3, 4, 1.0), Error);
}

TEST(ProportionZ, MirrorProperty) {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> count(0, 500);
  std::uniform_real_distribution<double> p(0.05, 0.95);
  for (int i = 0; i < 200; ++i) {
    const auto w = static_cast<std::size_t>(count(rng));
    const auto l = static_cast<std::size_t>(count(rng)) + 1;
    const double p0 = p(rng);
    EXPECT_NEAR(proportion_z(w, l, p0).z, -proportion_z(l, w, 1.0 - p0).z, 1e-9);
  }
}

TEST(ChiSquareCritical, TableValues) {
  EXPECT_NEAR(chi_square_critical(1), 3.841459, 1e-5);
  EXPECT_NEAR(chi_square_critical(10), 18.307038, 1e-5);
  EXPECT_NEAR(chi_square_critical(30), 43.772972, 1e-5);
  EXPECT_THROW(chi_square_critical(0), Error);
}

std::vector<double> normal_sample(std::uint64_t seed, std::size_t n, double sigma) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> d(0.0, sigma);
  std::vector<double> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

TEST(ChiSquareGof, BinsAreWellFormed) {
  const auto v = normal_sample(1, 2560, 13.588);
  const auto r = chi_square_gof(v);
  EXPECT_EQ(r.bins_used, r.bins.size());
  EXPECT_EQ(r.degrees_of_freedom, r.bins_used - 1);
  EXPECT_GE(r.bins_used, 3u);
  double expected = 0.0;
  std::size_t observed = 0;
  for (std::size_t i = 0; i < r.bins.size(); ++i) {
    EXPECT_GE(r.bins[i].expected, 5.0);
    if (i > 0) EXPECT_EQ(r.bins[i].lower, r.bins[i - 1].upper);
    expected += r.bins[i].expected;
    observed += r.bins[i].observed;
  }
  EXPECT_TRUE(std::isinf(r.bins.front().lower));
  EXPECT_TRUE(std::isinf(r.bins.back().upper));
  EXPECT_NEAR(expected, 2560.0, 1e-9 * 2560.0);
  EXPECT_EQ(observed, 2560u);
  EXPECT_EQ(r.reject_at_05, r.statistic > r.critical_value);
}

TEST(ChiSquareGof, PermutationInvariant) {
  auto v = normal_sample(2, 500, 10.0);
  const auto a = chi_square_gof(v, {.sigma = 10.0});
  std::mt19937 rng(1);
  std::shuffle(v.begin(), v.end(), rng);
  const auto b = chi_square_gof(v, {.sigma = 10.0});
  EXPECT_EQ(a.statistic, b.statistic);
  EXPECT_EQ(a.bins_used, b.bins_used);
}

TEST(ChiSquareGof, RejectsUniformAcceptsNormal) {
  const auto normal = normal_sample(3, 2560, 13.588);
  EXPECT_FALSE(chi_square_gof(normal).reject_at_05);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-40.0, 40.0);
  std::vector<double> flat(2560);
  for (auto& x : flat) x = u(rng);
  EXPECT_TRUE(chi_square_gof(flat).reject_at_05);
}

TEST(ChiSquareGof, Errors) {
  const auto small = normal_sample(4, 29, 1.0);
  try {
    chi_square_gof(small);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InsufficientData);
  }
  // 30 values with a huge minimum expectation collapse to a single group.
  const auto thirty = normal_sample(4, 30, 1.0);
  try {
    chi_square_gof(thirty, {.sigma = 1.0, .bin_width = 0.5, .min_expected = 12.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateBinning);
  }
  EXPECT_THROW(chi_square_gof(thirty, {.sigma = 0.0}), Error);
}

}  // namespace
}  // namespace linecast
