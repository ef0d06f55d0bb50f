#include "linecast/prob_model.hpp"

#include <cmath>

#include <fmt/format.h>

#include "linecast/stats.hpp"

namespace linecast {

double win_probability(const WinModel& model, double spread) {
  if (!(model.sigma > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, fmt::format("sigma {} must be positive", model.sigma));
  }
  return std_normal_cdf((spread + model.mu) / model.sigma);
}

EmpiricalRate empirical_win_rate(const Dataset& dataset, double spread, double tolerance) {
  if (!(tolerance >= 0.0)) {
    throw Error(ErrorCode::InvalidArgument, fmt::format("tolerance {} must be >= 0", tolerance));
  }
  EmpiricalRate out;
  double wins = 0.0;
  for (const auto& g : dataset.games()) {
    if (std::fabs(g.line_close.magnitude().points() - spread) > tolerance) continue;
    ++out.n;
    // Home team is the favorite operand on a pick-em.
    const int margin = g.line_close.half_points() >= 0 ? g.home_score - g.away_score
                                                       : g.away_score - g.home_score;
    if (margin > 0) {
      wins += 1.0;
    } else if (margin == 0) {
      wins += 0.5;
      ++out.ties;
    }
  }
  if (out.n == 0) {
    throw Error(ErrorCode::NoGamesAtSpread,
                fmt::format("no games with a spread within {} of {}", tolerance, spread));
  }
  out.rate = wins / static_cast<double>(out.n);
  return out;
}

double parlay_probability(const WinModel& model, std::span<const double> spreads) {
  double p = 1.0;
  for (double s : spreads) p *= win_probability(model, s);
  return p;
}

double WinDistribution::mean() const {
  double m = 0.0;
  for (std::size_t k = 0; k < probs.size(); ++k) m += static_cast<double>(k) * probs[k];
  return m;
}

double WinDistribution::variance() const {
  const double mu = mean();
  double v = 0.0;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    const double d = static_cast<double>(k) - mu;
    v += d * d * probs[k];
  }
  return v;
}

WinDistribution poisson_binomial(std::span<const double> probs) {
  WinDistribution d;
  d.probs.assign(probs.size() + 1, 0.0);
  d.probs[0] = 1.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const double p = probs[i];
    if (!(p >= 0.0 && p <= 1.0)) {
      throw Error(ErrorCode::InvalidArgument, fmt::format("probability {} is outside [0, 1]", p));
    }
    // After trial i the support is 0..i+1; update in place from the top.
    for (std::size_t k = i + 1; k > 0; --k) {
      d.probs[k] = d.probs[k] * (1.0 - p) + d.probs[k - 1] * p;
    }
    d.probs[0] *= 1.0 - p;
  }
  return d;
}

double expected_wins(std::span<const double> probs) noexcept {
  double s = 0.0;
  for (double p : probs) s += p;
  return s;
}

}  // namespace linecast
