#pragma once

#include <string>
#include <vector>

#include "linecast/dataset.hpp"

namespace linecast::testing {

inline std::string data_path(const std::string& name) {
  return std::string(LINECAST_TEST_DATA_DIR) + "/" + name;
}

inline const DivisionMap& divisions_2002() {
  static const DivisionMap map = parse_divisions(read_text_file(data_path("divisions_2002.csv")));
  return map;
}

inline const Dataset& synthetic_dataset() {
  static const Dataset ds =
      load_dataset(data_path("synthetic_games.csv"), data_path("divisions_2002.csv"));
  return ds;
}

/// Game with `line_close` in the home-positive convention; the opening line
/// defaults to the closing line.
inline GameRecord make_game(const std::string& home, const std::string& away, int home_score,
                            int away_score, double line_close,
                            std::optional<double> line_open = std::nullopt, int season = 2007,
                            int week = 1) {
  GameRecord g;
  g.season = season;
  g.week = week;
  g.date = std::chrono::year_month_day{std::chrono::year{season}, std::chrono::September,
                                       std::chrono::day{9}};
  g.home = TeamId{home};
  g.away = TeamId{away};
  g.home_score = home_score;
  g.away_score = away_score;
  g.line_close = Spread::from_points(line_close);
  g.line_open = Spread::from_points(line_open.value_or(line_close));
  return g;
}

inline Dataset make_dataset(std::vector<GameRecord> games) {
  return Dataset(std::move(games), divisions_2002(), "test");
}

/// NE at NYJ, 2007 week 1: opened NYJ -6, closed NE -7, NE won 38-14.
inline GameRecord patriots_at_jets() { return make_game("NYJ", "NE", 14, 38, -7, 6); }

}  // namespace linecast::testing
