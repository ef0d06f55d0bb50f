#include "linecast/dataset.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include <fmt/format.h>

#include "csv.hpp"

namespace linecast {

namespace csv {

std::vector<Line> split_lines(std::string_view text) {
  constexpr std::string_view kBom = "\xEF\xBB\xBF";
  if (text.starts_with(kBom)) text.remove_prefix(kBom.size());
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (line.ends_with('\r')) line.remove_suffix(1);
    if (trim(line).empty()) continue;
    lines.push_back({number, line});
  }
  return lines;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  while (true) {
    const auto comma = line.find(',');
    fields.push_back(trim(line.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    line.remove_prefix(comma + 1);
  }
  return fields;
}

}  // namespace csv

std::string_view to_string(Conference c) noexcept { return c == Conference::AFC ? "AFC" : "NFC"; }

std::string_view to_string(Division d) noexcept {
  switch (d) {
    case Division::East: return "East";
    case Division::North: return "North";
    case Division::South: return "South";
    case Division::West: return "West";
  }
  return "?";
}

std::string label(const DivisionSlot& slot) {
  return fmt::format("{} {}", to_string(slot.conference), to_string(slot.division));
}

std::string_view to_string(GameSide side) noexcept {
  switch (side) {
    case GameSide::Home: return "home";
    case GameSide::Away: return "away";
    case GameSide::Favorite: return "favorite";
    case GameSide::Underdog: return "underdog";
  }
  return "?";
}

Spread Spread::from_points(double points) {
  const double halves = points * 2.0;
  if (!std::isfinite(halves) || halves != std::nearbyint(halves) || std::fabs(halves) > 1e6) {
    throw Error(ErrorCode::InvalidArgument, fmt::format("{} is not a half-point spread", points));
  }
  return Spread(static_cast<std::int32_t>(halves));
}

std::string format_spread(Spread s) {
  const std::int32_t h = s.half_points();
  const std::int32_t whole = h / 2;
  if (h % 2 == 0) return std::to_string(whole);
  // -0.5 has whole == 0, so the sign needs to be spelled out.
  return fmt::format("{}{}.5", h < 0 ? "-" : "", whole < 0 ? -whole : whole);
}

Spread line_of(const GameRecord& game, LineChoice line) noexcept {
  return line == LineChoice::Closing ? game.line_close : game.line_open;
}

std::optional<FavoriteView> favorite_of(const GameRecord& game, LineChoice line) {
  const Spread s = line_of(game, line);
  if (s.is_pick_em()) return std::nullopt;
  if (s > Spread{}) return FavoriteView{game.home, game.away, s, true};
  return FavoriteView{game.away, game.home, -s, false};
}

// ---------------------------------------------------------------------------
// DivisionMap

DivisionMap::DivisionMap(std::map<TeamId, DivisionSlot> entries) : entries_(std::move(entries)) {
  std::map<DivisionSlot, int> per_cell;
  for (const auto& [team, slot] : entries_) ++per_cell[slot];
  // An overfull cell is reported as such even when the total is also off.
  for (const auto& [cell, n] : per_cell) {
    if (n > 4) {
      throw Error(ErrorCode::UnbalancedDivision,
                  fmt::format("{} has {} teams, expected 4", label(cell), n));
    }
  }
  if (entries_.size() != 32) {
    throw Error(ErrorCode::WrongTeamCount,
                fmt::format("expected 32 teams, found {}", entries_.size()));
  }
  for (const auto& cell : cells()) {
    const int n = per_cell[cell];
    if (n != 4) {
      throw Error(ErrorCode::UnbalancedDivision,
                  fmt::format("{} has {} teams, expected 4", label(cell), n));
    }
  }
}

const DivisionSlot& DivisionMap::at(const TeamId& team) const {
  const auto it = entries_.find(team);
  if (it == entries_.end()) {
    throw Error(ErrorCode::UnknownTeam, fmt::format("team '{}' is not in the division map", team.code));
  }
  return it->second;
}

std::vector<TeamId> DivisionMap::teams_in(const DivisionSlot& slot) const {
  std::vector<TeamId> out;
  for (const auto& [team, s] : entries_) {
    if (s == slot) out.push_back(team);
  }
  return out;
}

std::vector<DivisionSlot> DivisionMap::cells() {
  std::vector<DivisionSlot> out;
  for (auto c : {Conference::AFC, Conference::NFC}) {
    for (auto d : {Division::East, Division::North, Division::South, Division::West}) {
      out.push_back({c, d});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

constexpr std::array<std::string_view, 9> kGameColumns = {
    "season", "week", "date", "home", "away", "home_score", "away_score", "line_open", "line_close"};

enum GameColumn : std::size_t {
  kSeason, kWeek, kDate, kHome, kAway, kHomeScore, kAwayScore, kLineOpen, kLineClose
};

[[noreturn]] void malformed(std::size_t row, const std::string& why) {
  throw Error(ErrorCode::MalformedRow, why, row);
}

int parse_int(std::string_view field, std::string_view name, std::size_t row) {
  int value = 0;
  const auto* first = field.data();
  const auto* last = field.data() + field.size();
  if (!field.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (field.empty() || ec != std::errc{} || ptr != last) {
    malformed(row, fmt::format("{} '{}' is not an integer", name, field));
  }
  return value;
}

// Decimal with at most one fractional digit, which must be 0 or 5.
Spread parse_spread(std::string_view field, std::string_view name, std::size_t row) {
  std::string_view s = field;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto dot = s.find('.');
  const std::string_view whole = s.substr(0, dot);
  const std::string_view frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  const auto all_digits = [](std::string_view v) {
    return std::all_of(v.begin(), v.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if (whole.empty() || !all_digits(whole) || !all_digits(frac) ||
      (dot != std::string_view::npos && frac.empty())) {
    malformed(row, fmt::format("{} '{}' is not a number", name, field));
  }
  // Trailing zeros beyond the first fractional digit are tolerated ("3.50").
  std::string_view significant = frac;
  while (significant.size() > 1 && significant.back() == '0') significant.remove_suffix(1);
  if (significant.size() > 1 || (significant.size() == 1 && significant[0] != '0' && significant[0] != '5')) {
    throw Error(ErrorCode::NonHalfPointSpread,
                fmt::format("{} '{}' is not a multiple of 0.5", name, field), row);
  }
  std::int64_t halves = 0;
  for (char c : whole) {
    halves = halves * 10 + (c - '0');
    if (halves > 1'000'000) malformed(row, fmt::format("{} '{}' is out of range", name, field));
  }
  halves *= 2;
  if (significant == "5") halves += 1;
  return Spread::from_half_points(static_cast<std::int32_t>(negative ? -halves : halves));
}

std::chrono::year_month_day parse_date(std::string_view field, std::size_t row) {
  // YYYY-MM-DD
  if (field.size() != 10 || field[4] != '-' || field[7] != '-') {
    malformed(row, fmt::format("date '{}' is not YYYY-MM-DD", field));
  }
  const int y = parse_int(field.substr(0, 4), "date year", row);
  const int m = parse_int(field.substr(5, 2), "date month", row);
  const int d = parse_int(field.substr(8, 2), "date day", row);
  const std::chrono::year_month_day ymd{std::chrono::year{y},
                                        std::chrono::month{static_cast<unsigned>(m)},
                                        std::chrono::day{static_cast<unsigned>(d)}};
  if (!ymd.ok()) malformed(row, fmt::format("date '{}' is not a calendar date", field));
  return ymd;
}

TeamId parse_team(std::string_view field, std::string_view name, std::size_t row) {
  const bool ok = !field.empty() && field.size() <= 5 &&
                  std::all_of(field.begin(), field.end(), [](char c) {
                    return (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
                  });
  if (!ok) malformed(row, fmt::format("{} '{}' is not an uppercase team code", name, field));
  return TeamId{std::string(field)};
}

struct ParsedGames {
  std::vector<GameRecord> games;
  std::vector<std::size_t> lines;
};

ParsedGames parse_games_with_lines(std::string_view csv_text) {
  ParsedGames out;
  const auto lines = csv::split_lines(csv_text);
  if (lines.empty()) return out;

  const auto header = csv::split_fields(lines.front().text);
  const std::size_t header_row = lines.front().number;
  std::array<std::size_t, kGameColumns.size()> index{};
  index.fill(static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < header.size(); ++i) {
    const auto it = std::find(kGameColumns.begin(), kGameColumns.end(), header[i]);
    if (it == kGameColumns.end()) {
      malformed(header_row, fmt::format("unexpected column '{}'", header[i]));
    }
    auto& slot = index[static_cast<std::size_t>(it - kGameColumns.begin())];
    if (slot != static_cast<std::size_t>(-1)) {
      malformed(header_row, fmt::format("duplicate column '{}'", header[i]));
    }
    slot = i;
  }
  for (std::size_t c = 0; c < kGameColumns.size(); ++c) {
    if (index[c] == static_cast<std::size_t>(-1)) {
      throw Error(ErrorCode::MissingColumn, fmt::format("column '{}' is missing", kGameColumns[c]),
                  header_row);
    }
  }

  std::set<std::tuple<int, int, std::string, std::string>> seen;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto row = lines[li].number;
    const auto fields = csv::split_fields(lines[li].text);
    if (fields.size() != header.size()) {
      malformed(row, fmt::format("expected {} fields, found {}", header.size(), fields.size()));
    }
    const auto field = [&](GameColumn c) { return fields[index[c]]; };

    GameRecord g;
    g.season = parse_int(field(kSeason), "season", row);
    g.week = parse_int(field(kWeek), "week", row);
    if (g.week < 1) malformed(row, fmt::format("week {} is not positive", g.week));
    g.date = parse_date(field(kDate), row);
    g.home = parse_team(field(kHome), "home", row);
    g.away = parse_team(field(kAway), "away", row);
    if (g.home == g.away) malformed(row, fmt::format("team '{}' cannot play itself", g.home.code));
    g.home_score = parse_int(field(kHomeScore), "home_score", row);
    g.away_score = parse_int(field(kAwayScore), "away_score", row);
    if (g.home_score < 0 || g.away_score < 0) malformed(row, "scores must be non-negative");
    g.line_open = parse_spread(field(kLineOpen), "line_open", row);
    g.line_close = parse_spread(field(kLineClose), "line_close", row);

    if (!seen.emplace(g.season, g.week, g.home.code, g.away.code).second) {
      throw Error(ErrorCode::DuplicateGame,
                  fmt::format("{} week {} {} vs {} appears twice", g.season, g.week, g.away.code,
                              g.home.code),
                  row);
    }
    out.games.push_back(std::move(g));
    out.lines.push_back(row);
  }
  return out;
}

Conference parse_conference(std::string_view field, std::size_t row) {
  if (field == "AFC") return Conference::AFC;
  if (field == "NFC") return Conference::NFC;
  throw Error(ErrorCode::UnknownConference, fmt::format("conference '{}' is not AFC or NFC", field),
              row);
}

Division parse_division(std::string_view field, std::size_t row) {
  if (field == "East") return Division::East;
  if (field == "North") return Division::North;
  if (field == "South") return Division::South;
  if (field == "West") return Division::West;
  malformed(row, fmt::format("division '{}' is not East, North, South or West", field));
}

}  // namespace

std::vector<GameRecord> parse_games(std::string_view csv_text) {
  return parse_games_with_lines(csv_text).games;
}

DivisionMap parse_divisions(std::string_view csv_text) {
  const auto lines = csv::split_lines(csv_text);
  if (lines.empty()) throw Error(ErrorCode::MissingColumn, "divisions file is empty");
  const auto header = csv::split_fields(lines.front().text);
  const std::array<std::string_view, 3> expected = {"team", "conference", "division"};
  for (auto name : expected) {
    if (std::find(header.begin(), header.end(), name) == header.end()) {
      throw Error(ErrorCode::MissingColumn, fmt::format("column '{}' is missing", name),
                  lines.front().number);
    }
  }
  const auto col = [&](std::string_view name) {
    return static_cast<std::size_t>(std::find(header.begin(), header.end(), name) - header.begin());
  };
  const std::size_t team_col = col("team");
  const std::size_t conf_col = col("conference");
  const std::size_t div_col = col("division");

  std::map<TeamId, DivisionSlot> entries;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto row = lines[li].number;
    const auto fields = csv::split_fields(lines[li].text);
    if (fields.size() != header.size()) {
      malformed(row, fmt::format("expected {} fields, found {}", header.size(), fields.size()));
    }
    TeamId team = parse_team(fields[team_col], "team", row);
    const DivisionSlot slot{parse_conference(fields[conf_col], row),
                            parse_division(fields[div_col], row)};
    if (!entries.emplace(team, slot).second) {
      malformed(row, fmt::format("team '{}' listed twice", team.code));
    }
  }
  return DivisionMap(std::move(entries));
}

std::string games_to_csv(std::span<const GameRecord> games) {
  std::string out = "season,week,date,home,away,home_score,away_score,line_open,line_close\n";
  for (const auto& g : games) {
    out += fmt::format("{},{},{:04}-{:02}-{:02},{},{},{},{},{},{}\n", g.season, g.week,
                       static_cast<int>(g.date.year()), static_cast<unsigned>(g.date.month()),
                       static_cast<unsigned>(g.date.day()), g.home.code, g.away.code, g.home_score,
                       g.away_score, format_spread(g.line_open), format_spread(g.line_close));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dataset

Dataset::Dataset(std::vector<GameRecord> games, DivisionMap divisions, std::string provenance)
    : games_(std::move(games)), divisions_(std::move(divisions)), provenance_(std::move(provenance)) {
  std::set<std::tuple<int, int, std::string, std::string>> seen;
  for (std::size_t i = 0; i < games_.size(); ++i) {
    const auto& g = games_[i];
    for (const auto* team : {&g.home, &g.away}) {
      if (!divisions_.contains(*team)) {
        throw Error(ErrorCode::UnknownTeam,
                    fmt::format("game #{}: team '{}' is not in the division map", i + 1, team->code));
      }
    }
    if (!seen.emplace(g.season, g.week, g.home.code, g.away.code).second) {
      throw Error(ErrorCode::DuplicateGame,
                  fmt::format("game #{}: {} week {} {} vs {} appears twice", i + 1, g.season, g.week,
                              g.away.code, g.home.code));
    }
  }
}

std::vector<int> Dataset::seasons() const {
  std::set<int> s;
  for (const auto& g : games_) s.insert(g.season);
  return {s.begin(), s.end()};
}

Dataset filter(const Dataset& dataset, const FilterOptions& options) {
  std::vector<GameRecord> kept;
  for (const auto& g : dataset.games()) {
    if (options.seasons && !options.seasons->contains(g.season)) continue;
    if (options.weeks && !options.weeks->contains(g.week)) continue;
    if (options.regular_season_only && !g.is_regular_season()) continue;
    kept.push_back(g);
  }
  return Dataset(std::move(kept), dataset.divisions(), dataset.provenance());
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Dataset load_dataset(const std::string& games_path, const std::string& divisions_path) {
  DivisionMap divisions = parse_divisions(read_text_file(divisions_path));
  auto parsed = parse_games_with_lines(read_text_file(games_path));
  for (std::size_t i = 0; i < parsed.games.size(); ++i) {
    const auto& g = parsed.games[i];
    for (const auto* team : {&g.home, &g.away}) {
      if (!divisions.contains(*team)) {
        throw Error(ErrorCode::UnknownTeam,
                    fmt::format("team '{}' is not in the division map", team->code),
                    parsed.lines[i]);
      }
    }
  }
  return Dataset(std::move(parsed.games), std::move(divisions), games_path);
}

}  // namespace linecast
