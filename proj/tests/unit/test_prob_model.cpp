#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "linecast/prob_model.hpp"

namespace linecast {
namespace {

using testing::make_dataset;
using testing::make_game;

// Sums the probability of every one of the 2^n outcome sequences.
std::vector<double> brute_force_distribution(const std::vector<double>& p) {
  const std::size_t n = p.size();
  std::vector<double> out(n + 1, 0.0);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    double prob = 1.0;
    int k = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        prob *= p[i];
        ++k;
      } else {
        prob *= 1.0 - p[i];
      }
    }
    out[static_cast<std::size_t>(k)] += prob;
  }
  return out;
}

TEST(WinProbability, TableValues) {
  const WinModel model;
  EXPECT_NEAR(win_probability(model, 1), 0.529, 5e-4);
  EXPECT_NEAR(win_probability(model, 3), 0.587, 5e-4);
  EXPECT_NEAR(win_probability(model, 5), 0.644, 5e-4);
  EXPECT_NEAR(win_probability(model, 7), 0.697, 5e-4);
  EXPECT_EQ(win_probability(model, 0), 0.5);
}

TEST(WinProbability, ComplementAndStrictMonotonicity) {
  const WinModel model;
  double prev = 0.0;
  for (int h = -80; h <= 80; ++h) {
    const double s = h / 2.0;
    const double p = win_probability(model, s);
    EXPECT_NEAR(p + win_probability(model, -s), 1.0, 1e-12);
    EXPECT_GT(p, prev);
    EXPECT_GT(p, 0.0);
    EXPECT_LT(p, 1.0);
    prev = p;
  }
}

TEST(WinProbability, NonZeroMeanShiftsTowardFavorite) {
  const WinModel biased{.mu = 1.0, .sigma = 13.588};
  EXPECT_NEAR(win_probability(biased, 0.0), win_probability(WinModel{}, 1.0), 1e-15);
  EXPECT_THROW(win_probability(WinModel{.mu = 0, .sigma = 0}, 1.0), Error);
}

TEST(ParlayProbability, Examples) {
  const WinModel model;
  const std::vector<double> ne = {7, 4};
  EXPECT_NEAR(parlay_probability(model, ne), 0.429, 1e-3);
  EXPECT_EQ(parlay_probability(model, std::vector<double>{}), 1.0);
  EXPECT_EQ(parlay_probability(model, std::vector<double>{0, 0}), 0.25);
  const std::vector<double> one = {3.5};
  EXPECT_EQ(parlay_probability(model, one), win_probability(model, 3.5));
}

TEST(PoissonBinomial, Examples) {
  const auto coin = poisson_binomial(std::vector<double>{0.5, 0.5});
  ASSERT_EQ(coin.probs.size(), 3u);
  EXPECT_EQ(coin.probs[0], 0.25);
  EXPECT_EQ(coin.probs[1], 0.5);
  EXPECT_EQ(coin.probs[2], 0.25);

  const auto sure = poisson_binomial(std::vector<double>{1.0, 1.0, 1.0});
  EXPECT_EQ(sure.probs, (std::vector<double>{0.0, 0.0, 0.0, 1.0}));

  // C(16, k) / 2^16, exact in binary.
  const auto season = poisson_binomial(std::vector<double>(16, 0.5));
  double c = 1.0;
  for (std::size_t k = 0; k <= 16; ++k) {
    EXPECT_EQ(season.probs[k], c / 65536.0) << k;
    c = c * static_cast<double>(16 - k) / static_cast<double>(k + 1);
  }
  EXPECT_NEAR(season.probs[8], 0.196381, 1e-6);

  EXPECT_EQ(poisson_binomial(std::vector<double>{}).probs, std::vector<double>{1.0});
  EXPECT_THROW(poisson_binomial(std::vector<double>{1.5}), Error);
}

TEST(PoissonBinomial, MatchesBruteForceAndMoments) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<double> p(static_cast<std::size_t>(1 + trial % 12));
    for (auto& x : p) x = u(rng);
    const auto dp = poisson_binomial(p);
    const auto bf = brute_force_distribution(p);
    double sum = 0.0;
    for (std::size_t k = 0; k < bf.size(); ++k) {
      EXPECT_NEAR(dp.probs[k], bf[k], 1e-12);
      EXPECT_GE(dp.probs[k], 0.0);
      sum += dp.probs[k];
    }
    EXPECT_NEAR(sum, 1.0, 1e-9);
    double var = 0.0;
    for (double x : p) var += x * (1.0 - x);
    EXPECT_NEAR(dp.mean(), expected_wins(p), 1e-9);
    EXPECT_NEAR(dp.variance(), var, 1e-9);
  }
}

TEST(ExpectedWins, Examples) {
  EXPECT_NEAR(expected_wins(std::vector<double>{0.697, 0.616}), 1.313, 1e-12);
  EXPECT_EQ(expected_wins(std::vector<double>{}), 0.0);
  EXPECT_EQ(expected_wins(std::vector<double>(16, 0.5)), 8.0);
}

TEST(EmpiricalWinRate, CountsFavoriteWinsWithHalfTies) {
  const auto ds = make_dataset({
      make_game("DAL", "WAS", 20, 10, 7),   // home fav wins
      make_game("NYG", "PHI", 10, 20, -7),  // away fav wins
      make_game("CHI", "GB", 20, 10, -7),   // away fav loses
      make_game("MIN", "DET", 17, 17, 7),   // tie
      make_game("ATL", "CAR", 30, 0, 3),    // other spread
  });
  const auto r = empirical_win_rate(ds, 7, 0);
  EXPECT_EQ(r.n, 4u);
  EXPECT_EQ(r.ties, 1u);
  EXPECT_DOUBLE_EQ(r.rate, 2.5 / 4.0);

  const auto wide = empirical_win_rate(ds, 6, 1.0);
  EXPECT_EQ(wide.n, 4u);

  try {
    empirical_win_rate(make_dataset({}), 7, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoGamesAtSpread);
  }
}

}  // namespace
}  // namespace linecast
