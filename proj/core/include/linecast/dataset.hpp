#pragma once

#include <chrono>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "linecast/error.hpp"

namespace linecast {

/// Last regular-season week for the 2002-2011 era; larger weeks are postseason.
inline constexpr int kLastRegularSeasonWeek = 17;

struct TeamId {
  std::string code;

  auto operator<=>(const TeamId&) const = default;
  bool operator==(const TeamId&) const = default;
};

enum class Conference { AFC, NFC };
enum class Division { East, North, South, West };

std::string_view to_string(Conference c) noexcept;
std::string_view to_string(Division d) noexcept;

struct DivisionSlot {
  Conference conference;
  Division division;

  auto operator<=>(const DivisionSlot&) const = default;
  bool operator==(const DivisionSlot&) const = default;
};

/// "AFC East" style label.
std::string label(const DivisionSlot& slot);

/// Point spread stored as an integer count of half points, so pushes and
/// equality tests are exact. Positive favors the home team.
class Spread {
 public:
  constexpr Spread() = default;
  static constexpr Spread from_half_points(std::int32_t halves) { return Spread(halves); }
  /// Throws InvalidArgument unless `points` is a multiple of 0.5.
  static Spread from_points(double points);

  constexpr std::int32_t half_points() const { return halves_; }
  constexpr double points() const { return halves_ / 2.0; }
  constexpr Spread magnitude() const { return Spread(halves_ < 0 ? -halves_ : halves_); }
  constexpr bool is_pick_em() const { return halves_ == 0; }
  constexpr bool is_integer() const { return halves_ % 2 == 0; }

  constexpr Spread operator-() const { return Spread(-halves_); }
  constexpr Spread operator-(Spread o) const { return Spread(halves_ - o.halves_); }
  auto operator<=>(const Spread&) const = default;

 private:
  constexpr explicit Spread(std::int32_t halves) : halves_(halves) {}
  std::int32_t halves_ = 0;
};

/// "-7", "3.5", "0".
std::string format_spread(Spread s);

struct GameRecord {
  int season = 0;
  int week = 0;
  std::chrono::year_month_day date{};
  TeamId home;
  TeamId away;
  int home_score = 0;
  int away_score = 0;
  Spread line_open;
  Spread line_close;

  bool is_regular_season() const { return week >= 1 && week <= kLastRegularSeasonWeek; }
  bool operator==(const GameRecord&) const = default;
};

class DivisionMap {
 public:
  DivisionMap() = default;
  /// Validates the 32-team, 8x4 structure.
  explicit DivisionMap(std::map<TeamId, DivisionSlot> entries);

  bool contains(const TeamId& team) const { return entries_.contains(team); }
  /// Throws UnknownTeam.
  const DivisionSlot& at(const TeamId& team) const;
  std::vector<TeamId> teams_in(const DivisionSlot& slot) const;
  /// All eight cells, AFC first, East..West.
  static std::vector<DivisionSlot> cells();

  const std::map<TeamId, DivisionSlot>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<TeamId, DivisionSlot> entries_;
};

enum class GameSide { Home, Away, Favorite, Underdog };

std::string_view to_string(GameSide side) noexcept;

/// Which of the two recorded lines to read.
enum class LineChoice { Closing, Opening };

Spread line_of(const GameRecord& game, LineChoice line) noexcept;

struct FavoriteView {
  TeamId favorite;
  TeamId underdog;
  Spread magnitude;
  bool favorite_is_home;
};

/// Absent for a pick-em (line 0).
std::optional<FavoriteView> favorite_of(const GameRecord& game,
                                        LineChoice line = LineChoice::Closing);

struct YearRange {
  int first;
  int last;
  bool contains(int v) const { return v >= first && v <= last; }
};

struct FilterOptions {
  std::optional<YearRange> seasons;
  std::optional<YearRange> weeks;
  bool regular_season_only = false;
};

class Dataset {
 public:
  Dataset() = default;
  /// Throws DuplicateGame / UnknownTeam; the row in the error is the
  /// 1-based data row index plus one (i.e. the file line when the games
  /// came straight from `parse_games`).
  Dataset(std::vector<GameRecord> games, DivisionMap divisions, std::string provenance);

  std::span<const GameRecord> games() const { return games_; }
  const DivisionMap& divisions() const { return divisions_; }
  const std::string& provenance() const { return provenance_; }
  std::size_t size() const { return games_.size(); }
  bool empty() const { return games_.empty(); }

  /// Sorted distinct seasons present.
  std::vector<int> seasons() const;

 private:
  std::vector<GameRecord> games_;
  DivisionMap divisions_;
  std::string provenance_;
};

/// Games CSV. Header must carry exactly
/// season,week,date,home,away,home_score,away_score,line_open,line_close
/// (any order). LF or CRLF; a UTF-8 BOM is ignored. Errors name the file line.
std::vector<GameRecord> parse_games(std::string_view csv_text);

/// Divisions CSV with header team,conference,division.
DivisionMap parse_divisions(std::string_view csv_text);

/// Inverse of parse_games; canonical column order.
std::string games_to_csv(std::span<const GameRecord> games);

Dataset filter(const Dataset& dataset, const FilterOptions& options);

/// Reads a whole file; throws std::runtime_error on I/O failure.
std::string read_text_file(const std::string& path);

/// Parses both files and builds a Dataset.
Dataset load_dataset(const std::string& games_path, const std::string& divisions_path);

}  // namespace linecast
