#include "linecast/metrics.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace linecast {

std::string_view to_string(AtsOutcome o) noexcept {
  switch (o) {
    case AtsOutcome::Cover: return "cover";
    case AtsOutcome::NoCover: return "no-cover";
    case AtsOutcome::Push: return "push";
  }
  return "?";
}

int mov(const GameRecord& game) noexcept {
  return std::max(game.home_score, game.away_score) - std::min(game.home_score, game.away_score);
}

std::int32_t line_difference_half_points(const GameRecord& game, LineChoice line) noexcept {
  const Spread s = line_of(game, line);
  const int home_margin = game.home_score - game.away_score;
  // Favorite margin in half points; the home team is the favorite operand
  // when the line is 0.
  const std::int32_t favorite_margin = 2 * (s.half_points() >= 0 ? home_margin : -home_margin);
  return favorite_margin - s.magnitude().half_points();
}

double line_difference(const GameRecord& game, LineChoice line) noexcept {
  return line_difference_half_points(game, line) / 2.0;
}

namespace {

AtsOutcome from_margin(std::int32_t ld) {
  if (ld > 0) return AtsOutcome::Cover;
  if (ld < 0) return AtsOutcome::NoCover;
  return AtsOutcome::Push;
}

AtsOutcome mirror(AtsOutcome o) {
  switch (o) {
    case AtsOutcome::Cover: return AtsOutcome::NoCover;
    case AtsOutcome::NoCover: return AtsOutcome::Cover;
    case AtsOutcome::Push: return AtsOutcome::Push;
  }
  return o;
}

}  // namespace

AtsOutcome ats_outcome(const GameRecord& game, GameSide side, LineChoice line) {
  const auto fav = favorite_of(game, line);
  if (!fav) {
    if (side == GameSide::Favorite || side == GameSide::Underdog) {
      throw Error(ErrorCode::UnresolvableSide,
                  fmt::format("{} vs {} ({} week {}) is a pick-em; no {} side", game.away.code,
                              game.home.code, game.season, game.week, to_string(side)));
    }
    const AtsOutcome home = from_margin(game.home_score - game.away_score);
    return side == GameSide::Home ? home : mirror(home);
  }
  const AtsOutcome favorite = from_margin(line_difference_half_points(game, line));
  switch (side) {
    case GameSide::Favorite: return favorite;
    case GameSide::Underdog: return mirror(favorite);
    case GameSide::Home: return fav->favorite_is_home ? favorite : mirror(favorite);
    case GameSide::Away: return fav->favorite_is_home ? mirror(favorite) : favorite;
  }
  return favorite;
}

double line_movement(const GameRecord& game) noexcept {
  return (game.line_close - game.line_open).points();
}

double movement_magnitude(const GameRecord& game) noexcept {
  return (game.line_close - game.line_open).magnitude().points();
}

FavoriteAtsSummary favorite_ats_summary(const Dataset& dataset) {
  FavoriteAtsSummary s;
  for (const auto& g : dataset.games()) {
    const auto fav = favorite_of(g);
    if (!fav) {
      ++s.pick_ems;
      continue;
    }
    const auto ld = line_difference_half_points(g);
    const int favorite_margin =
        fav->favorite_is_home ? g.home_score - g.away_score : g.away_score - g.home_score;
    if (ld > 0) {
      ++s.covers;
    } else if (ld == 0) {
      ++s.pushes;
    } else if (favorite_margin > 0) {
      ++s.wins_no_cover;
    } else {
      ++s.losses;
    }
  }
  return s;
}

HomeRecordTable home_record_table(const Dataset& dataset) {
  HomeRecordTable table;
  for (const auto& g : dataset.games()) {
    auto& row = table.seasons[g.season];
    const AtsOutcome o = ats_outcome(g, GameSide::Home);
    if (o == AtsOutcome::Push) continue;
    const bool won = o == AtsOutcome::Cover;
    WinLoss* cell = nullptr;
    if (g.line_close.is_pick_em()) {
      cell = &row.pick_ems;
    } else if (g.line_close > Spread{}) {
      cell = &row.favorites;
    } else {
      cell = &row.underdogs;
    }
    (won ? cell->wins : cell->losses) += 1;
    (won ? row.all_home.wins : row.all_home.losses) += 1;
  }
  for (const auto& [season, row] : table.seasons) {
    table.total.favorites += row.favorites;
    table.total.underdogs += row.underdogs;
    table.total.pick_ems += row.pick_ems;
    table.total.all_home += row.all_home;
  }
  return table;
}

double home_straight_up_rate(const Dataset& dataset) {
  if (dataset.empty()) return 0.0;
  double wins = 0.0;
  for (const auto& g : dataset.games()) {
    if (g.home_score > g.away_score) {
      wins += 1.0;
    } else if (g.home_score == g.away_score) {
      wins += 0.5;
    }
  }
  return wins / static_cast<double>(dataset.size());
}

std::int64_t Histogram::index_of(double value) const {
  return static_cast<std::int64_t>(std::floor((value - origin) / bin_width));
}

std::vector<std::int64_t> Histogram::modes(std::size_t how_many) const {
  std::vector<std::pair<std::int64_t, std::size_t>> v(bins.begin(), bins.end());
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < v.size() && i < how_many; ++i) out.push_back(v[i].first);
  return out;
}

Histogram histogram(std::span<const double> values, double bin_width, double origin) {
  if (!(bin_width > 0.0) || !std::isfinite(bin_width)) {
    throw Error(ErrorCode::InvalidArgument, fmt::format("bin width {} must be positive", bin_width));
  }
  Histogram h;
  h.bin_width = bin_width;
  h.origin = origin;
  for (double v : values) {
    ++h.bins[h.index_of(v)];
    ++h.total;
  }
  return h;
}

std::vector<double> closing_lines(const Dataset& dataset) {
  std::vector<double> out;
  out.reserve(dataset.size());
  for (const auto& g : dataset.games()) out.push_back(g.line_close.points());
  return out;
}

std::vector<double> line_differences(const Dataset& dataset) {
  std::vector<double> out;
  out.reserve(dataset.size());
  for (const auto& g : dataset.games()) out.push_back(line_difference(g));
  return out;
}

std::vector<double> line_movements(const Dataset& dataset) {
  std::vector<double> out;
  out.reserve(dataset.size());
  for (const auto& g : dataset.games()) out.push_back(line_movement(g));
  return out;
}

WeeklyMovement movement_fraction_by_week(const Dataset& dataset, double threshold) {
  if (!(threshold > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, fmt::format("threshold {} must be positive", threshold));
  }
  WeeklyMovement out;
  out.threshold = threshold;
  std::map<int, std::size_t> moved;
  std::size_t moved_total = 0;
  for (const auto& g : dataset.games()) {
    ++out.games[g.week];
    if (movement_magnitude(g) >= threshold) {
      ++moved[g.week];
      ++moved_total;
    }
  }
  if (dataset.empty()) return out;
  out.overall = static_cast<double>(moved_total) / static_cast<double>(dataset.size());

  double sum = 0.0;
  for (const auto& [week, n] : out.games) {
    const double f = static_cast<double>(moved[week]) / static_cast<double>(n);
    out.fraction[week] = f;
    sum += f;
  }
  const auto weeks = static_cast<double>(out.fraction.size());
  out.mean = sum / weeks;
  if (out.fraction.size() >= 2) {
    double ss = 0.0;
    for (const auto& [week, f] : out.fraction) ss += (f - out.mean) * (f - out.mean);
    out.std_dev = std::sqrt(ss / (weeks - 1.0));
  }
  return out;
}

std::vector<std::pair<double, std::size_t>> movement_cumulative_counts(
    const Dataset& dataset, std::span<const double> thresholds) {
  std::vector<double> mags;
  mags.reserve(dataset.size());
  for (const auto& g : dataset.games()) mags.push_back(movement_magnitude(g));
  std::sort(mags.begin(), mags.end());
  std::vector<std::pair<double, std::size_t>> out;
  out.reserve(thresholds.size());
  for (double t : thresholds) {
    const auto n = static_cast<std::size_t>(std::upper_bound(mags.begin(), mags.end(), t) - mags.begin());
    out.emplace_back(t, n);
  }
  return out;
}

}  // namespace linecast
