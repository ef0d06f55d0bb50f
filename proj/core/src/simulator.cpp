#include "linecast/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <thread>

#include <fmt/format.h>

#include "linecast/rng.hpp"

namespace linecast {

std::vector<TeamId> SeasonSchedule::teams() const {
  std::set<TeamId> s;
  for (const auto& e : entries) {
    s.insert(e.home);
    s.insert(e.away);
  }
  return {s.begin(), s.end()};
}

SeasonSchedule build_schedule(const Dataset& dataset, int season, const WinModel& model) {
  SeasonSchedule sched;
  sched.season = season;
  std::map<TeamId, std::size_t> games_played;
  for (const auto& g : dataset.games()) {
    if (g.season != season || !g.is_regular_season()) continue;
    ScheduledGame e;
    e.game_index = static_cast<std::uint32_t>(sched.entries.size());
    e.home = g.home;
    e.away = g.away;
    e.home_win_prob = win_probability(model, g.line_close.points());
    e.home_margin = g.home_score - g.away_score;
    sched.entries.push_back(e);

    ++games_played[g.home];
    ++games_played[g.away];
    auto& hw = sched.actual_wins[g.home];
    auto& aw = sched.actual_wins[g.away];
    if (g.home_score > g.away_score) {
      hw += 1.0;
    } else if (g.home_score < g.away_score) {
      aw += 1.0;
    } else {
      hw += 0.5;
      aw += 0.5;
    }
  }
  if (sched.entries.empty()) {
    throw Error(ErrorCode::MissingSeason, fmt::format("no regular-season games for {}", season));
  }
  for (const auto& [team, n] : games_played) {
    if (n != kGamesPerTeam) {
      sched.warnings.push_back(fmt::format("{} plays {} games in {} (expected {})", team.code, n,
                                           season, kGamesPerTeam));
    }
  }
  return sched;
}

int round_half_up(double x) noexcept { return static_cast<int>(std::floor(x + 0.5)); }

SimulationResult simulate(const SeasonSchedule& schedule, const SimulationOptions& options) {
  if (options.replications == 0) {
    throw Error(ErrorCode::InvalidArgument, "replications must be at least 1");
  }
  SimulationResult result;
  result.replications = options.replications;
  result.seed = options.seed;
  result.games = schedule.entries.size();
  result.teams = schedule.teams();

  std::map<TeamId, std::size_t> index;
  for (std::size_t t = 0; t < result.teams.size(); ++t) index[result.teams[t]] = t;

  struct Compiled {
    std::uint32_t game;
    std::size_t home;
    std::size_t away;
    double p;
  };
  std::vector<Compiled> games;
  games.reserve(schedule.entries.size());
  for (const auto& e : schedule.entries) {
    games.push_back({e.game_index, index.at(e.home), index.at(e.away), e.home_win_prob});
  }

  const std::size_t n_teams = result.teams.size();
  const std::size_t reps = options.replications;
  std::size_t threads = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
  threads = std::clamp<std::size_t>(threads, 1, reps);

  if (options.keep_samples) {
    result.win_samples.emplace(reps, std::vector<std::uint16_t>(n_teams, 0));
  }

  // Integer totals per worker; summing them is order independent.
  std::vector<std::vector<std::int64_t>> partial(threads, std::vector<std::int64_t>(n_teams, 0));
  auto work = [&](std::size_t worker, std::size_t first, std::size_t last) {
    std::vector<std::uint16_t> wins(n_teams);
    auto& totals = partial[worker];
    for (std::size_t r = first; r < last; ++r) {
      std::fill(wins.begin(), wins.end(), 0);
      for (const auto& g : games) {
        const bool home_wins = uniform_at(options.seed, r, g.game) < g.p;
        ++wins[home_wins ? g.home : g.away];
      }
      for (std::size_t t = 0; t < n_teams; ++t) totals[t] += wins[t];
      if (result.win_samples) (*result.win_samples)[r] = wins;
    }
  };

  if (threads == 1) {
    work(0, 0, reps);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t w = 0; w < threads; ++w) {
      const std::size_t first = reps * w / threads;
      const std::size_t last = reps * (w + 1) / threads;
      pool.emplace_back(work, w, first, last);
    }
  }

  for (std::size_t t = 0; t < n_teams; ++t) {
    std::int64_t total = 0;
    for (const auto& p : partial) total += p[t];
    const auto& team = result.teams[t];
    result.total_wins[team] = total;
    const double mean = static_cast<double>(total) / static_cast<double>(reps);
    result.mean_wins[team] = mean;
    result.predicted_wins[team] = round_half_up(mean);
  }
  return result;
}

namespace {

// Straight-up record of `team` against the other members of `group`.
double head_to_head(const SeasonSchedule& schedule, const TeamId& team,
                    const std::vector<TeamId>& group) {
  double wins = 0.0;
  double played = 0.0;
  const auto in_group = [&](const TeamId& t) {
    return t != team && std::find(group.begin(), group.end(), t) != group.end();
  };
  for (const auto& e : schedule.entries) {
    if (!e.home_margin) continue;
    int margin = 0;
    if (e.home == team && in_group(e.away)) {
      margin = *e.home_margin;
    } else if (e.away == team && in_group(e.home)) {
      margin = -*e.home_margin;
    } else {
      continue;
    }
    played += 1.0;
    wins += margin > 0 ? 1.0 : margin == 0 ? 0.5 : 0.0;
  }
  return played == 0.0 ? 0.5 : wins / played;
}

}  // namespace

std::vector<DivisionPrediction> predict_division_winners(const SimulationResult& result,
                                                         const SeasonSchedule& schedule,
                                                         const DivisionMap& divisions) {
  for (const auto& team : result.teams) divisions.at(team);

  std::vector<DivisionPrediction> out;
  for (const auto& slot : DivisionMap::cells()) {
    std::vector<TeamId> members;
    for (const auto& team : divisions.teams_in(slot)) {
      if (result.predicted_wins.contains(team)) members.push_back(team);
    }
    if (members.empty()) continue;

    DivisionPrediction p;
    p.slot = slot;

    int best_predicted = -1;
    for (const auto& t : members) best_predicted = std::max(best_predicted, result.predicted_wins.at(t));
    for (const auto& t : members) {
      if (result.predicted_wins.at(t) == best_predicted) p.tied_set.insert(t);
    }

    const auto actual = [&](const TeamId& t) {
      const auto it = schedule.actual_wins.find(t);
      return it == schedule.actual_wins.end() ? 0.0 : it->second;
    };
    double best_actual = -1.0;
    for (const auto& t : members) best_actual = std::max(best_actual, actual(t));
    std::vector<TeamId> leaders;
    for (const auto& t : members) {
      if (actual(t) == best_actual) leaders.push_back(t);
    }
    p.actual_tied = leaders.size() > 1;
    p.actual_winner = leaders.front();
    if (p.actual_tied) {
      double best_h2h = -1.0;
      for (const auto& t : leaders) {  // sorted, so ties keep the lowest code
        const double h = head_to_head(schedule, t, leaders);
        if (h > best_h2h) {
          best_h2h = h;
          p.actual_winner = t;
        }
      }
    }

    p.correct = p.tied_set.contains(p.actual_winner);
    p.predicted_winner = p.correct ? p.actual_winner : *p.tied_set.begin();
    out.push_back(std::move(p));
  }
  return out;
}

PredictionScore score_predictions(const std::vector<DivisionPrediction>& predictions) noexcept {
  PredictionScore s;
  s.total = predictions.size();
  for (const auto& p : predictions) s.correct += p.correct ? 1 : 0;
  return s;
}

}  // namespace linecast
