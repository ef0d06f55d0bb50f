#include "linecast/backtest.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace linecast {

double break_even_ratio(double win_payout, double stake) {
  if (!(win_payout > 0.0) || !(stake > 0.0)) {
    throw Error(ErrorCode::NonPositiveStake,
                fmt::format("stake {} and payout {} must both be positive", stake, win_payout));
  }
  return stake / (stake + win_payout);
}

Strategy::Strategy(std::string name, Selector selector)
    : name_(std::move(name)), selector_(std::move(selector)) {}

Strategy Strategy::builtin(Builtin which) {
  switch (which) {
    case Builtin::HomeUnderdog:
      return {"home-underdog", [](const GameRecord&, Spread line) -> std::optional<GameSide> {
                if (line < Spread{}) return GameSide::Home;
                return std::nullopt;
              }};
    case Builtin::HomeFavorite:
      return {"home-favorite", [](const GameRecord&, Spread line) -> std::optional<GameSide> {
                if (line > Spread{}) return GameSide::Home;
                return std::nullopt;
              }};
    case Builtin::AllHome:
      return {"all-home",
              [](const GameRecord&, Spread) -> std::optional<GameSide> { return GameSide::Home; }};
    case Builtin::AllFavorites:
      return {"all-favorites", [](const GameRecord&, Spread line) -> std::optional<GameSide> {
                if (line.is_pick_em()) return std::nullopt;
                return GameSide::Favorite;
              }};
    case Builtin::AllUnderdogs:
      return {"all-underdogs", [](const GameRecord&, Spread line) -> std::optional<GameSide> {
                if (line.is_pick_em()) return std::nullopt;
                return GameSide::Underdog;
              }};
  }
  throw Error(ErrorCode::UnknownStrategy, "unknown builtin strategy");
}

std::vector<std::string> Strategy::builtin_names() {
  return {"home-underdog", "home-favorite", "all-home", "all-favorites", "all-underdogs"};
}

Strategy Strategy::from_name(const std::string& name) {
  for (auto b : {Builtin::HomeUnderdog, Builtin::HomeFavorite, Builtin::AllHome,
                 Builtin::AllFavorites, Builtin::AllUnderdogs}) {
    Strategy s = builtin(b);
    if (s.name() == name) return s;
  }
  throw Error(ErrorCode::UnknownStrategy,
              fmt::format("unknown strategy '{}' (expected one of {})", name,
                          fmt::join(builtin_names(), ", ")));
}

Strategy Strategy::only_when(std::string suffix,
                             std::function<bool(const GameRecord&, Spread)> predicate) const {
  Selector inner = selector_;
  return {name_ + "+" + suffix,
          [inner, predicate = std::move(predicate)](const GameRecord& g,
                                                    Spread line) -> std::optional<GameSide> {
            if (!predicate(g, line)) return std::nullopt;
            return inner(g, line);
          }};
}

void LedgerTotals::record(AtsOutcome outcome, const Pricing& pricing) {
  switch (outcome) {
    case AtsOutcome::Cover:
      ++wins;
      profit += pricing.win_payout;
      break;
    case AtsOutcome::NoCover:
      ++losses;
      profit -= pricing.stake;
      break;
    case AtsOutcome::Push:
      ++pushes;
      break;
  }
}

StrategyLedger run_strategy(const Dataset& dataset, const Strategy& strategy,
                            const Pricing& pricing, LineChoice settle_on) {
  break_even_ratio(pricing);  // validates the pricing

  StrategyLedger ledger;
  ledger.strategy = strategy.name();
  ledger.pricing = pricing;
  ledger.settled_on = settle_on;
  const auto games = dataset.games();
  for (std::size_t i = 0; i < games.size(); ++i) {
    const auto& g = games[i];
    const auto side = strategy.select(g, line_of(g, settle_on));
    if (!side) continue;
    const AtsOutcome outcome = ats_outcome(g, *side, settle_on);
    const double cash = outcome == AtsOutcome::Cover     ? pricing.win_payout
                        : outcome == AtsOutcome::NoCover ? -pricing.stake
                                                         : 0.0;
    ledger.bets.push_back({i, g.season, *side, outcome, cash});
    ledger.totals.record(outcome, pricing);
    ledger.per_season[g.season].record(outcome, pricing);
  }
  return ledger;
}

std::map<int, double> yearly_cover_series(const Dataset& dataset, const Strategy& strategy,
                                          LineChoice settle_on) {
  const auto ledger = run_strategy(dataset, strategy, Pricing{}, settle_on);
  std::map<int, double> out;
  for (const auto& [season, t] : ledger.per_season) {
    if (t.decided() > 0) out[season] = t.win_ratio();
  }
  return out;
}

BreakevenComparison compare_to_breakeven(const LedgerTotals& totals, const Pricing& pricing) {
  if (totals.decided() == 0) {
    throw Error(ErrorCode::NoDecidedBets, "ledger has no won or lost bets");
  }
  const double be = break_even_ratio(pricing);
  BreakevenComparison c;
  c.margin = totals.win_ratio() - be;
  // Decided on the exact cash sums so the flag agrees with profit > 0.
  c.profitable = static_cast<double>(totals.wins) * pricing.win_payout >
                 static_cast<double>(totals.losses) * pricing.stake;
  return c;
}

}  // namespace linecast
