#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "fixtures.hpp"
#include "linecast/metrics.hpp"

namespace linecast {
namespace {

using testing::make_dataset;
using testing::make_game;
using testing::patriots_at_jets;

TEST(Mov, WinnerMinusLoser) {
  EXPECT_EQ(mov(patriots_at_jets()), 24);
  EXPECT_EQ(mov(make_game("DAL", "WAS", 21, 21, 3)), 0);
  EXPECT_EQ(mov(make_game("DAL", "WAS", 17, 20, 3)), 3);
}

TEST(LineDifference, Examples) {
  EXPECT_EQ(line_difference(patriots_at_jets()), 17.0);
  EXPECT_EQ(line_difference(make_game("DAL", "WAS", 27, 20, 7)), 0.0);
  // Favorite (home, -6 frame: +6) loses 17-20.
  EXPECT_EQ(line_difference(make_game("DAL", "WAS", 17, 20, 6)), -9.0);
  // Away favorite loses.
  EXPECT_EQ(line_difference(make_game("DAL", "WAS", 20, 17, -6)), -9.0);
  // Half-point spread.
  EXPECT_EQ(line_difference(make_game("DAL", "WAS", 24, 21, 2.5)), 0.5);
  // Pick-em: home margin.
  EXPECT_EQ(line_difference(make_game("DAL", "WAS", 10, 13, 0)), -3.0);
}

TEST(AtsOutcome, Examples) {
  EXPECT_EQ(ats_outcome(patriots_at_jets(), GameSide::Favorite), AtsOutcome::Cover);
  EXPECT_EQ(ats_outcome(patriots_at_jets(), GameSide::Away), AtsOutcome::Cover);
  EXPECT_EQ(ats_outcome(patriots_at_jets(), GameSide::Home), AtsOutcome::NoCover);

  const auto push = make_game("DAL", "WAS", 27, 20, 7);
  EXPECT_EQ(ats_outcome(push, GameSide::Underdog), AtsOutcome::Push);
  EXPECT_EQ(ats_outcome(push, GameSide::Favorite), AtsOutcome::Push);

  const auto upset = make_game("DAL", "WAS", 17, 20, 6);
  EXPECT_EQ(ats_outcome(upset, GameSide::Underdog), AtsOutcome::Cover);
  EXPECT_EQ(ats_outcome(upset, GameSide::Favorite), AtsOutcome::NoCover);

  // Underdog loses by less than the spread.
  EXPECT_EQ(ats_outcome(make_game("DAL", "WAS", 20, 17, 6.5), GameSide::Underdog), AtsOutcome::Cover);
}

TEST(AtsOutcome, PickEm) {
  const auto g = make_game("DAL", "WAS", 24, 20, 0);
  EXPECT_EQ(ats_outcome(g, GameSide::Home), AtsOutcome::Cover);
  EXPECT_EQ(ats_outcome(g, GameSide::Away), AtsOutcome::NoCover);
  EXPECT_EQ(ats_outcome(make_game("DAL", "WAS", 20, 20, 0), GameSide::Home), AtsOutcome::Push);
  try {
    ats_outcome(g, GameSide::Favorite);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnresolvableSide);
  }
  EXPECT_THROW(ats_outcome(g, GameSide::Underdog), Error);
}

TEST(AtsOutcome, FavoriteUnderdogMirrorProperty) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> score(0, 45), halves(-36, 36);
  for (int i = 0; i < 2000; ++i) {
    const int h = halves(rng);
    if (h == 0) continue;
    const auto g = make_game("DAL", "WAS", score(rng), score(rng), h / 2.0);
    const auto fav = ats_outcome(g, GameSide::Favorite);
    const auto dog = ats_outcome(g, GameSide::Underdog);
    EXPECT_EQ(fav == AtsOutcome::Cover, dog == AtsOutcome::NoCover);
    EXPECT_EQ(fav == AtsOutcome::Push, dog == AtsOutcome::Push);
    // LD == 0 iff push, and pushes need an integer spread.
    EXPECT_EQ(line_difference(g) == 0.0, fav == AtsOutcome::Push);
    if (h % 2 != 0) EXPECT_NE(fav, AtsOutcome::Push);
  }
}

TEST(LineMovement, Examples) {
  // Opened Jets -6 (home +6), closed Patriots -7 (home -7).
  EXPECT_EQ(line_movement(patriots_at_jets()), -13.0);
  EXPECT_EQ(movement_magnitude(patriots_at_jets()), 13.0);
  EXPECT_EQ(line_movement(make_game("DAL", "WAS", 1, 2, -7, -6)), -1.0);
  EXPECT_EQ(line_movement(make_game("DAL", "WAS", 1, 2, 3, 3)), 0.0);
  EXPECT_EQ(line_movement(make_game("DAL", "WAS", 1, 2, 3.5, 2.5)), 1.0);
}

TEST(FavoriteAtsSummary, HandClassifiedFixture) {
  const auto ds = make_dataset({
      make_game("DAL", "WAS", 30, 20, 7),                   // cover
      make_game("NYG", "PHI", 27, 20, 7),                   // push
      make_game("CHI", "GB", 17, 20, -3, std::nullopt, 2007, 2),  // away fav GB covers? margin 3 == spread -> push
      make_game("MIN", "DET", 10, 24, 3),                   // loss
  });
  const auto s = favorite_ats_summary(ds);
  EXPECT_EQ(s.covers, 1u);
  EXPECT_EQ(s.wins_no_cover, 0u);
  EXPECT_EQ(s.losses, 1u);
  EXPECT_EQ(s.pushes, 2u);
  EXPECT_EQ(s.total(), ds.size());

  const auto three = make_dataset({
      make_game("DAL", "WAS", 30, 20, 7),  // cover
      make_game("NYG", "PHI", 27, 20, 7),  // push
      make_game("MIN", "DET", 10, 24, 3),  // loss
  });
  EXPECT_EQ(favorite_ats_summary(three), (FavoriteAtsSummary{1, 0, 1, 1, 0}));

  EXPECT_EQ(favorite_ats_summary(make_dataset({})), FavoriteAtsSummary{});
}

TEST(FavoriteAtsSummary, StraightUpTieCountsAsLossAndWinNoCover) {
  const auto ds = make_dataset({
      make_game("DAL", "WAS", 20, 20, 3),  // favorite tied: loss
      make_game("NYG", "PHI", 21, 20, 3),  // won by 1, spread 3
      make_game("MIN", "DET", 20, 20, 0),  // pick-em
  });
  const auto s = favorite_ats_summary(ds);
  EXPECT_EQ(s.losses, 1u);
  EXPECT_EQ(s.wins_no_cover, 1u);
  EXPECT_EQ(s.pick_ems, 1u);
}

TEST(FavoriteAtsSummary, PartitionsSyntheticSeasons) {
  const auto& ds = testing::synthetic_dataset();
  const auto s = favorite_ats_summary(ds);
  EXPECT_EQ(s.total(), ds.size());
  EXPECT_GT(s.covers, 0u);
  EXPECT_GT(s.wins_no_cover, 0u);
  EXPECT_GT(s.losses, 0u);
  EXPECT_GT(s.pick_ems, 0u);
}

TEST(HomeRecordTable, SingleGame) {
  const auto t = home_record_table(make_dataset({make_game("DAL", "WAS", 30, 20, 7)}));
  EXPECT_EQ(t.total.favorites, (WinLoss{1, 0}));
  EXPECT_EQ(t.total.favorites.win_ratio(), 1.0);
  EXPECT_EQ(t.total.underdogs.win_ratio(), 0.0);
  EXPECT_EQ(t.seasons.at(2007).all_home, (WinLoss{1, 0}));
}

TEST(HomeRecordTable, ColumnsSumAndPushesExcluded) {
  const auto ds = make_dataset({
      make_game("DAL", "WAS", 30, 20, 7),                          // home fav cover
      make_game("NYG", "PHI", 27, 20, 7),                          // push, excluded
      make_game("CHI", "GB", 24, 20, -3),                          // home dog cover
      make_game("MIN", "DET", 10, 24, 3),                          // home fav loss
      make_game("ATL", "CAR", 13, 10, 0),                          // pick-em home SU win
      make_game("NO", "TB", 10, 13, 0, std::nullopt, 2008, 1),     // pick-em home SU loss
      make_game("SEA", "SF", 10, 10, 0, std::nullopt, 2008, 2),    // pick-em tie, excluded
  });
  const auto t = home_record_table(ds);
  EXPECT_EQ(t.seasons.at(2007).favorites, (WinLoss{1, 1}));
  EXPECT_EQ(t.seasons.at(2007).underdogs, (WinLoss{1, 0}));
  EXPECT_EQ(t.seasons.at(2007).pick_ems, (WinLoss{1, 0}));
  EXPECT_EQ(t.seasons.at(2008).pick_ems, (WinLoss{0, 1}));
  EXPECT_EQ(t.total.pick_ems, (WinLoss{1, 1}));
  for (const auto& [season, row] : t.seasons) {
    WinLoss sum = row.favorites;
    sum += row.underdogs;
    sum += row.pick_ems;
    EXPECT_EQ(sum, row.all_home);
  }
  EXPECT_EQ(t.total.all_home, (WinLoss{3, 2}));
}

TEST(Histogram, Examples) {
  const std::vector<double> zeros = {0, 0, 0};
  const auto h0 = histogram(zeros, 1.0, 0.0);
  ASSERT_EQ(h0.bins.size(), 1u);
  EXPECT_EQ(h0.bins.at(0), 3u);

  const std::vector<double> v = {-0.5, 0.4, 0.5};
  const auto h = histogram(v, 1.0, -0.5);
  EXPECT_EQ(h.bins.size(), 2u);
  EXPECT_EQ(h.bins.at(0), 2u);
  EXPECT_EQ(h.bins.at(1), 1u);
  EXPECT_EQ(h.total, 3u);

  EXPECT_TRUE(histogram(std::vector<double>{}, 1.0).bins.empty());
  EXPECT_THROW(histogram(v, 0.0), Error);
}

TEST(Histogram, CountsSumAndTranslationConsistency) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> halves(-60, 60);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> values(200);
    for (auto& v : values) v = halves(rng) / 2.0;
    const double shift = halves(rng) / 2.0;
    std::vector<double> shifted = values;
    for (auto& v : shifted) v += shift;
    const auto a = histogram(values, 0.5, -0.25);
    const auto b = histogram(shifted, 0.5, -0.25 + shift);
    std::size_t sum = 0;
    for (const auto& [i, c] : a.bins) sum += c;
    EXPECT_EQ(sum, values.size());
    EXPECT_EQ(a.bins, b.bins);
  }
}

TEST(Histogram, CentredBinsPutKeyNumbersAtCentres) {
  const std::vector<double> lines = {3, 3, 3, -3, -3, 7, 7, 2.5, 6.5};
  const auto h = histogram(lines, 0.5, centered_origin(0.5));
  const auto modes = h.modes(3);
  ASSERT_EQ(modes.size(), 3u);
  EXPECT_EQ(h.center(modes[0]), 3.0);
  // -3 and 7 both have 2; ordered by bin index.
  EXPECT_EQ(h.center(modes[1]), -3.0);
  EXPECT_EQ(h.center(modes[2]), 7.0);
}

TEST(MovementByWeek, Examples) {
  const auto ds = make_dataset({
      make_game("DAL", "WAS", 1, 2, 3, 1.5),
      make_game("NYG", "PHI", 1, 2, 3, 3),
      make_game("CHI", "GB", 1, 2, -3, -1.5),
      make_game("MIN", "DET", 1, 2, 7, 6.5),
      make_game("DAL", "WAS", 1, 2, 3, 1, 2007, 2),
  });
  const auto m = movement_fraction_by_week(ds, 1.0);
  EXPECT_EQ(m.fraction.at(1), 0.5);
  EXPECT_EQ(m.fraction.at(2), 1.0);
  EXPECT_EQ(m.games.at(1), 4u);
  EXPECT_DOUBLE_EQ(m.overall, 3.0 / 5.0);
  EXPECT_DOUBLE_EQ(m.mean, 0.75);
  EXPECT_NEAR(m.std_dev, std::sqrt(0.125), 1e-12);

  const auto none = movement_fraction_by_week(ds, 10.0);
  for (const auto& [w, f] : none.fraction) EXPECT_EQ(f, 0.0);
  EXPECT_THROW(movement_fraction_by_week(ds, 0.0), Error);
}

TEST(MovementCumulative, MonotoneAndTotal) {
  const auto& ds = testing::synthetic_dataset();
  const std::vector<double> thresholds = {0, 0.5, 1, 1.5, 2, 3, 5,
                                          std::numeric_limits<double>::infinity()};
  const auto counts = movement_cumulative_counts(ds, thresholds);
  ASSERT_EQ(counts.size(), thresholds.size());
  for (std::size_t i = 1; i < counts.size(); ++i) EXPECT_GE(counts[i].second, counts[i - 1].second);
  EXPECT_EQ(counts.back().second, ds.size());

  std::size_t by_hand = 0;
  for (const auto& g : ds.games()) by_hand += movement_magnitude(g) <= 0.5 ? 1 : 0;
  EXPECT_EQ(counts[1].second, by_hand);
}

TEST(HomeStraightUp, TiesHalf) {
  const auto ds = make_dataset({make_game("DAL", "WAS", 20, 10, 3), make_game("NYG", "PHI", 10, 10, 3),
                                make_game("CHI", "GB", 0, 7, 3), make_game("MIN", "DET", 7, 0, 3)});
  EXPECT_DOUBLE_EQ(home_straight_up_rate(ds), 2.5 / 4.0);
}

}  // namespace
}  // namespace linecast
