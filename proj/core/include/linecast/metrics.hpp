#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "linecast/dataset.hpp"

namespace linecast {

enum class AtsOutcome { Cover, NoCover, Push };

std::string_view to_string(AtsOutcome o) noexcept;

/// Winner's score minus loser's score; 0 for a tie.
int mov(const GameRecord& game) noexcept;

/// (favorite score - underdog score) - |line|. Positive means the favorite
/// was undervalued. For a pick-em the home team stands in as the favorite.
double line_difference(const GameRecord& game, LineChoice line = LineChoice::Closing) noexcept;

/// Same quantity in half points, exact.
std::int32_t line_difference_half_points(const GameRecord& game,
                                         LineChoice line = LineChoice::Closing) noexcept;

/// Settles a bet on `side`. Home/Away on a pick-em settle straight up.
/// Throws UnresolvableSide for Favorite/Underdog on a pick-em.
AtsOutcome ats_outcome(const GameRecord& game, GameSide side,
                       LineChoice line = LineChoice::Closing);

/// line_close - line_open in the home-positive frame.
double line_movement(const GameRecord& game) noexcept;
/// |line_close - line_open|.
double movement_magnitude(const GameRecord& game) noexcept;

/// Four-way split of games that have a favorite, plus the pick-em count.
/// A favorite that ties straight up counts as a loss.
struct FavoriteAtsSummary {
  std::size_t covers = 0;
  std::size_t wins_no_cover = 0;
  std::size_t losses = 0;
  std::size_t pushes = 0;
  std::size_t pick_ems = 0;

  std::size_t total() const { return covers + wins_no_cover + losses + pushes + pick_ems; }
  bool operator==(const FavoriteAtsSummary&) const = default;
};

FavoriteAtsSummary favorite_ats_summary(const Dataset& dataset);

struct WinLoss {
  std::size_t wins = 0;
  std::size_t losses = 0;

  /// 0 when nothing was decided.
  double win_ratio() const {
    const auto n = wins + losses;
    return n == 0 ? 0.0 : static_cast<double>(wins) / static_cast<double>(n);
  }
  WinLoss& operator+=(const WinLoss& o) {
    wins += o.wins;
    losses += o.losses;
    return *this;
  }
  bool operator==(const WinLoss&) const = default;
};

struct HomeRecordRow {
  WinLoss favorites;
  WinLoss underdogs;
  WinLoss pick_ems;  // straight-up results
  WinLoss all_home;  // sum of the three
};

/// Home-side against-the-spread records per season plus a total row.
/// Pushes (and straight-up ties in the pick-em column) are excluded.
struct HomeRecordTable {
  std::map<int, HomeRecordRow> seasons;
  HomeRecordRow total;
};

HomeRecordTable home_record_table(const Dataset& dataset);

/// Fraction of games the home team won outright; ties count half.
double home_straight_up_rate(const Dataset& dataset);

struct Histogram {
  double bin_width = 1.0;
  double origin = 0.0;
  std::map<std::int64_t, std::size_t> bins;  // bin index -> count
  std::size_t total = 0;

  std::int64_t index_of(double value) const;
  double lower_edge(std::int64_t index) const { return origin + static_cast<double>(index) * bin_width; }
  double center(std::int64_t index) const { return lower_edge(index) + bin_width / 2.0; }
  /// Bin indices holding the largest counts, most populated first (ties by index).
  std::vector<std::int64_t> modes(std::size_t how_many) const;
};

/// Bin of v is floor((v - origin) / bin_width). Throws InvalidArgument
/// for a non-positive width.
Histogram histogram(std::span<const double> values, double bin_width, double origin = 0.0);

/// Origin that centres bins on multiples of `bin_width`.
inline double centered_origin(double bin_width) { return -bin_width / 2.0; }

std::vector<double> closing_lines(const Dataset& dataset);
std::vector<double> line_differences(const Dataset& dataset);
std::vector<double> line_movements(const Dataset& dataset);

struct WeeklyMovement {
  double threshold = 1.0;
  std::map<int, double> fraction;      // week -> share with |movement| >= threshold
  std::map<int, std::size_t> games;    // week -> games that week
  double overall = 0.0;                // pooled share over all games
  double mean = 0.0;                   // mean of the weekly shares
  double std_dev = 0.0;                // sample std of the weekly shares (0 for < 2 weeks)
};

/// Throws InvalidArgument unless threshold > 0.
WeeklyMovement movement_fraction_by_week(const Dataset& dataset, double threshold);

/// For each threshold, games with |movement| <= threshold. Thresholds may
/// include +infinity.
std::vector<std::pair<double, std::size_t>> movement_cumulative_counts(
    const Dataset& dataset, std::span<const double> thresholds);

}  // namespace linecast
