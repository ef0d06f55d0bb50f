#include "linecast/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include <boost/math/distributions/chi_squared.hpp>
#include <fmt/format.h>

#include "linecast/error.hpp"

namespace linecast {

double std_normal_cdf(double x) noexcept {
  // erfc keeps full relative precision in the lower tail.
  return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

Moments moments(std::span<const double> values) {
  if (values.size() < 2) {
    throw Error(ErrorCode::InsufficientData,
                fmt::format("need at least 2 values for moments, got {}", values.size()));
  }
  // Two passes with a long double accumulator so reordering the input
  // does not move the result beyond rounding.
  long double sum = 0.0L;
  for (double v : values) sum += v;
  const auto n = static_cast<long double>(values.size());
  const long double mean = sum / n;
  long double ss = 0.0L;
  for (double v : values) ss += (v - mean) * (v - mean);
  Moments m;
  m.n = values.size();
  m.mean = static_cast<double>(mean);
  m.std_dev = static_cast<double>(std::sqrt(ss / (n - 1.0L)));
  return m;
}

ZTestResult proportion_z(std::size_t wins, std::size_t losses, double p0) {
  const std::size_t n = wins + losses;
  if (n == 0) throw Error(ErrorCode::EmptySample, "no decided games");
  if (!(p0 > 0.0 && p0 < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, fmt::format("p0 = {} must lie in (0, 1)", p0));
  }
  ZTestResult r;
  r.n = n;
  r.p0 = p0;
  r.p_hat = static_cast<double>(wins) / static_cast<double>(n);
  r.z = (r.p_hat - p0) / std::sqrt(p0 * (1.0 - p0) / static_cast<double>(n));
  return r;
}

double chi_square_critical(std::size_t degrees_of_freedom, double alpha) {
  if (degrees_of_freedom == 0 || !(alpha > 0.0 && alpha < 1.0)) {
    throw Error(ErrorCode::InvalidArgument,
                fmt::format("chi-squared quantile needs df >= 1 and alpha in (0,1), got df={} alpha={}",
                            degrees_of_freedom, alpha));
  }
  const boost::math::chi_squared dist(static_cast<double>(degrees_of_freedom));
  return boost::math::quantile(boost::math::complement(dist, alpha));
}

namespace {

struct Group {
  std::size_t first;  // fine-bin indices, inclusive
  std::size_t last;
  double expected;
};

}  // namespace

GofResult chi_square_gof(std::span<const double> values, const GofOptions& options) {
  if (!(options.sigma > 0.0) || !(options.bin_width > 0.0) || !(options.min_expected > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "sigma, bin width and min_expected must be positive");
  }
  if (values.size() < 30) {
    throw Error(ErrorCode::InsufficientData,
                fmt::format("goodness of fit needs at least 30 values, got {}", values.size()));
  }
  const double n = static_cast<double>(values.size());
  const double w = options.bin_width;
  constexpr double inf = std::numeric_limits<double>::infinity();

  // Fine bins [(k - 1/2) w, (k + 1/2) w) for |k| <= K, plus two open tails.
  double reach = 8.0 * options.sigma;
  for (double v : values) reach = std::max(reach, std::fabs(v));
  const auto K = static_cast<std::int64_t>(std::ceil(reach / w)) + 1;
  const std::size_t fine = static_cast<std::size_t>(2 * K + 1) + 2;

  std::vector<double> edges(fine + 1);
  edges.front() = -inf;
  edges.back() = inf;
  for (std::size_t i = 1; i < fine; ++i) {
    edges[i] = (static_cast<double>(static_cast<std::int64_t>(i) - 1 - K) - 0.5) * w;
  }
  std::vector<double> expected(fine);
  for (std::size_t i = 0; i < fine; ++i) {
    const double lo = std::isinf(edges[i]) ? 0.0 : std_normal_cdf(edges[i] / options.sigma);
    const double hi = std::isinf(edges[i + 1]) ? 1.0 : std_normal_cdf(edges[i + 1] / options.sigma);
    // Upper-half masses via the complement to avoid cancellation.
    if (edges[i] > 0.0) {
      const double qlo = std_normal_cdf(-edges[i] / options.sigma);
      const double qhi = std::isinf(edges[i + 1]) ? 0.0 : std_normal_cdf(-edges[i + 1] / options.sigma);
      expected[i] = n * (qlo - qhi);
    } else {
      expected[i] = n * (hi - lo);
    }
  }

  // Merge from both tails toward the modal bin: accumulate fine bins until
  // the running expectation reaches min_expected, then close the group.
  // Leftovers next to the mode join the modal group.
  const double m = options.min_expected;
  const auto mode = static_cast<std::size_t>(
      std::max_element(expected.begin(), expected.end()) - expected.begin());
  Group centre{mode, mode, expected[mode]};

  std::vector<Group> groups;
  std::optional<Group> open;
  for (std::size_t i = 0; i < mode; ++i) {
    if (!open) {
      open = Group{i, i, 0.0};
    }
    open->last = i;
    open->expected += expected[i];
    if (open->expected >= m) {
      groups.push_back(*open);
      open.reset();
    }
  }
  if (open) {
    centre.first = open->first;
    centre.expected += open->expected;
    open.reset();
  }
  std::vector<Group> upper;
  for (std::size_t i = fine - 1; i > mode; --i) {
    if (!open) {
      open = Group{i, i, 0.0};
    }
    open->first = i;
    open->expected += expected[i];
    if (open->expected >= m) {
      upper.push_back(*open);
      open.reset();
    }
  }
  if (open) {
    centre.last = open->last;
    centre.expected += open->expected;
  }
  groups.push_back(centre);
  groups.insert(groups.end(), upper.rbegin(), upper.rend());

  // Any group still short (possible for odd inputs) joins its smaller neighbour.
  for (bool changed = true; changed && groups.size() > 1;) {
    changed = false;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      if (groups[i].expected >= m) continue;
      std::size_t j;
      if (i == 0) {
        j = 1;
      } else if (i + 1 == groups.size()) {
        j = i - 1;
      } else {
        j = groups[i - 1].expected <= groups[i + 1].expected ? i - 1 : i + 1;
      }
      const std::size_t a = std::min(i, j);
      groups[a] = {groups[a].first, groups[a + 1].last, groups[a].expected + groups[a + 1].expected};
      groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(a) + 1);
      changed = true;
      break;
    }
  }
  if (groups.size() < 3) {
    throw Error(ErrorCode::DegenerateBinning,
                fmt::format("only {} bins after merging; need at least 3", groups.size()));
  }

  // Group lookup per fine bin.
  std::vector<std::size_t> group_of(fine);
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    for (std::size_t i = groups[gi].first; i <= groups[gi].last; ++i) group_of[i] = gi;
  }
  std::vector<std::size_t> observed(groups.size(), 0);
  for (double v : values) {
    const auto it = std::upper_bound(edges.begin() + 1, edges.end() - 1, v);
    const auto fine_index = static_cast<std::size_t>(it - edges.begin()) - 1;
    ++observed[group_of[fine_index]];
  }

  GofResult r;
  r.bins_used = groups.size();
  r.degrees_of_freedom = groups.size() - 1;
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const double e = groups[gi].expected;
    const double d = static_cast<double>(observed[gi]) - e;
    r.statistic += d * d / e;
    r.bins.push_back({edges[groups[gi].first], edges[groups[gi].last + 1], observed[gi], e});
  }
  r.critical_value = chi_square_critical(r.degrees_of_freedom, 0.05);
  r.reject_at_05 = r.statistic > r.critical_value;
  return r;
}

}  // namespace linecast
