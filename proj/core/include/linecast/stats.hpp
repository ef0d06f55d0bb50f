#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace linecast {

/// Standard normal CDF.
double std_normal_cdf(double x) noexcept;

struct Moments {
  double mean = 0.0;
  double std_dev = 0.0;  // sample (n - 1)
  std::size_t n = 0;
};

/// Throws InsufficientData for fewer than two values.
Moments moments(std::span<const double> values);

struct ZTestResult {
  double p_hat = 0.0;
  std::size_t n = 0;
  double p0 = 0.5;
  double z = 0.0;
};

/// One-proportion z statistic, (p_hat - p0) / sqrt(p0 (1 - p0) / n) with
/// n = wins + losses. Throws EmptySample when n == 0 and InvalidArgument
/// unless 0 < p0 < 1.
ZTestResult proportion_z(std::size_t wins, std::size_t losses, double p0);

struct GofBin {
  double lower;  // -inf for the lower tail
  double upper;  // +inf for the upper tail
  std::size_t observed;
  double expected;
};

struct GofResult {
  double statistic = 0.0;
  std::size_t degrees_of_freedom = 0;
  std::size_t bins_used = 0;
  double critical_value = 0.0;  // chi-squared quantile at 0.95
  bool reject_at_05 = false;
  std::vector<GofBin> bins;
};

struct GofOptions {
  double sigma = 13.588;
  double bin_width = 2.0;
  double min_expected = 5.0;
};

/// Chi-squared goodness of fit against Normal(0, sigma) with both
/// parameters fixed in advance. Bins of `bin_width` are centred on 0, and
/// bins are merged from each tail inward until every group expects at
/// least `min_expected` observations; the outermost groups are open-ended.
/// Throws InsufficientData for n < 30, DegenerateBinning for fewer than
/// three groups, InvalidArgument for non-positive sigma/width.
GofResult chi_square_gof(std::span<const double> values, const GofOptions& options = {});

/// Upper-alpha quantile of the chi-squared distribution.
double chi_square_critical(std::size_t degrees_of_freedom, double alpha = 0.05);

}  // namespace linecast
