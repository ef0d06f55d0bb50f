#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linecast/dataset.hpp"
#include "linecast/metrics.hpp"

namespace linecast {

/// Flat staking: risk `stake` to win `win_payout` (110 to win 100).
struct Pricing {
  double stake = 110.0;
  double win_payout = 100.0;
};

/// Win proportion at which flat betting breaks even: stake / (stake + win_payout).
/// Throws NonPositiveStake.
double break_even_ratio(double win_payout, double stake);
inline double break_even_ratio(const Pricing& p) { return break_even_ratio(p.win_payout, p.stake); }

/// Picks the side to bet (if any) given a game and the line the bet will
/// settle on.
using Selector = std::function<std::optional<GameSide>(const GameRecord&, Spread line)>;

class Strategy {
 public:
  enum class Builtin { HomeUnderdog, HomeFavorite, AllHome, AllFavorites, AllUnderdogs };

  Strategy(std::string name, Selector selector);
  static Strategy builtin(Builtin which);
  /// "home-underdog", "home-favorite", "all-home", "all-favorites",
  /// "all-underdogs". Throws UnknownStrategy.
  static Strategy from_name(const std::string& name);
  static std::vector<std::string> builtin_names();

  /// Bets only the games `predicate` accepts.
  Strategy only_when(std::string suffix,
                     std::function<bool(const GameRecord&, Spread line)> predicate) const;

  const std::string& name() const { return name_; }
  std::optional<GameSide> select(const GameRecord& game, Spread line) const {
    return selector_(game, line);
  }

 private:
  std::string name_;
  Selector selector_;
};

struct Bet {
  std::size_t game_index;  // position in the dataset
  int season;
  GameSide side;
  AtsOutcome outcome;
  double cashflow;  // +win_payout, -stake or 0
};

struct LedgerTotals {
  std::size_t wins = 0;
  std::size_t losses = 0;
  std::size_t pushes = 0;
  double profit = 0.0;

  std::size_t bets() const { return wins + losses + pushes; }
  std::size_t decided() const { return wins + losses; }
  /// Pushes excluded; 0 when nothing was decided.
  double win_ratio() const {
    return decided() == 0 ? 0.0 : static_cast<double>(wins) / static_cast<double>(decided());
  }
  void record(AtsOutcome outcome, const Pricing& pricing);
};

struct StrategyLedger {
  std::string strategy;
  Pricing pricing;
  LineChoice settled_on = LineChoice::Closing;
  std::vector<Bet> bets;
  LedgerTotals totals;
  std::map<int, LedgerTotals> per_season;
};

StrategyLedger run_strategy(const Dataset& dataset, const Strategy& strategy,
                            const Pricing& pricing = {},
                            LineChoice settle_on = LineChoice::Closing);

/// Per-season cover proportion (pushes excluded). Seasons where the
/// strategy made no decided bet are absent.
std::map<int, double> yearly_cover_series(const Dataset& dataset, const Strategy& strategy,
                                          LineChoice settle_on = LineChoice::Closing);

struct BreakevenComparison {
  double margin = 0.0;  // win_ratio - break_even_ratio
  bool profitable = false;
};

/// Throws NoDecidedBets for a ledger without wins or losses.
BreakevenComparison compare_to_breakeven(const LedgerTotals& totals, const Pricing& pricing);

}  // namespace linecast
