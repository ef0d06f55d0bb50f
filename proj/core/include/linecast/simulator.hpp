#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "linecast/dataset.hpp"
#include "linecast/prob_model.hpp"

namespace linecast {

inline constexpr std::size_t kGamesPerTeam = 16;
inline constexpr std::size_t kDefaultReplications = 1000;

struct ScheduledGame {
  std::uint32_t game_index = 0;
  TeamId home;
  TeamId away;
  double home_win_prob = 0.5;
  /// Recorded home margin, when the game has been played.
  std::optional<int> home_margin;
};

struct SeasonSchedule {
  int season = 0;
  std::vector<ScheduledGame> entries;
  /// Straight-up wins; a tie credits half a win to each side.
  std::map<TeamId, double> actual_wins;
  /// Teams whose game count is not kGamesPerTeam, etc.
  std::vector<std::string> warnings;

  /// Distinct teams, sorted.
  std::vector<TeamId> teams() const;
};

/// Regular-season games of `season` with home_win_prob from the closing
/// line. Throws MissingSeason when the season has no regular-season games.
SeasonSchedule build_schedule(const Dataset& dataset, int season, const WinModel& model = {});

struct SimulationOptions {
  std::size_t replications = kDefaultReplications;
  std::uint64_t seed = 0;
  /// 0 picks std::thread::hardware_concurrency().
  std::size_t threads = 1;
  /// Keep per-replication win counts in SimulationResult::win_samples.
  bool keep_samples = false;
};

struct SimulationResult {
  std::size_t replications = 0;
  std::uint64_t seed = 0;
  std::size_t games = 0;
  std::vector<TeamId> teams;                // sorted; indexes win_samples columns
  std::map<TeamId, std::int64_t> total_wins;  // summed over replications
  std::map<TeamId, double> mean_wins;
  std::map<TeamId, int> predicted_wins;     // mean rounded half up
  /// win_samples[r][t]: wins of teams[t] in replication r.
  std::optional<std::vector<std::vector<std::uint16_t>>> win_samples;
};

/// Replication r, game g resolves as a home win iff
/// uniform_at(seed, r, g) < home_win_prob. Results do not depend on the
/// thread count. Throws InvalidArgument for zero replications.
SimulationResult simulate(const SeasonSchedule& schedule, const SimulationOptions& options);

/// Rounds half up: 10.5 -> 11.
int round_half_up(double x) noexcept;

struct DivisionPrediction {
  DivisionSlot slot;
  TeamId predicted_winner;
  TeamId actual_winner;
  /// Teams sharing the top predicted win total (size 1 when clear).
  std::set<TeamId> tied_set;
  /// True when the actual winner needed a tie-break.
  bool actual_tied = false;
  bool correct = false;
};

/// One prediction per division. Ties in predicted wins are resolved in the
/// predictor's favour: the prediction is correct when the actual winner is
/// among the tied teams. Ties in actual wins fall to head-to-head record
/// within the schedule, then team code. Throws UnknownTeam for a schedule
/// team missing from `divisions`.
std::vector<DivisionPrediction> predict_division_winners(const SimulationResult& result,
                                                         const SeasonSchedule& schedule,
                                                         const DivisionMap& divisions);

struct PredictionScore {
  std::size_t correct = 0;
  std::size_t total = 0;
  bool operator==(const PredictionScore&) const = default;
};

PredictionScore score_predictions(const std::vector<DivisionPrediction>& predictions) noexcept;

}  // namespace linecast
