#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "linecast/dataset.hpp"

namespace linecast {

/// Standard deviation of the closing-line error for 2002-2011.
inline constexpr double kLineErrorSigma = 13.588;

/// Gaussian line-error model: the favorite's margin minus the spread is
/// Normal(mu, sigma).
struct WinModel {
  double mu = 0.0;
  double sigma = kLineErrorSigma;
};

/// Probability that a team giving `spread` points wins outright. A
/// negative spread is an underdog. Computes Phi((spread + mu) / sigma);
/// with the default mu = 0 this is Phi(spread / sigma).
double win_probability(const WinModel& model, double spread);

struct EmpiricalRate {
  double rate = 0.0;
  std::size_t n = 0;
  std::size_t ties = 0;  // straight-up ties, credited as half a win
};

/// Share of games whose closing spread magnitude is within `tolerance` of
/// `spread` that the favorite won outright. Throws NoGamesAtSpread when
/// nothing matches.
EmpiricalRate empirical_win_rate(const Dataset& dataset, double spread, double tolerance = 0.0);

/// Product of win probabilities; 1 for an empty list.
double parlay_probability(const WinModel& model, std::span<const double> spreads);

/// Distribution over the number of successes among independent trials.
struct WinDistribution {
  std::vector<double> probs;  // probs[k] = P(k wins), k = 0..n

  std::size_t games() const { return probs.empty() ? 0 : probs.size() - 1; }
  double mean() const;
  double variance() const;
};

/// Exact Poisson-binomial distribution by dynamic programming, O(n^2).
/// Throws InvalidArgument for a probability outside [0, 1].
WinDistribution poisson_binomial(std::span<const double> probs);

double expected_wins(std::span<const double> probs) noexcept;

}  // namespace linecast
