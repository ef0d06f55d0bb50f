#include "commands.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "linecast/export.hpp"
#include "linecast/metrics.hpp"
#include "linecast/stats.hpp"

namespace linecast::cli {

namespace {

// Published figures for the 2002-2011 regular seasons, shown beside the
// computed values.
constexpr const char* kReferenceLabel = "reference (2002-2011)";
const std::map<int, int> kReferenceDivisionScores = {
    {2002, 7}, {2003, 7}, {2004, 6}, {2005, 8}, {2006, 6},
    {2007, 7}, {2008, 7}, {2009, 7}, {2010, 6}, {2011, 6},
};

std::string write_artifact(const RunConfig& config, const std::string& name,
                           const std::string& content) {
  std::filesystem::create_directories(config.output_dir);
  const auto path = (std::filesystem::path(config.output_dir) / name).string();
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error(fmt::format("cannot write {}", path));
  f << content;
  if (!f.flush()) throw std::runtime_error(fmt::format("cannot write {}", path));
  return path;
}

std::string ratio(const WinLoss& wl) { return fmt::format("{:.3f}", wl.win_ratio()); }

std::string z_against_even(const WinLoss& wl) {
  if (wl.wins + wl.losses == 0) return "-";
  return fmt::format("{:+.3f}", proportion_z(wl.wins, wl.losses, 0.5).z);
}

}  // namespace

YearRange parse_year_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int y = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {y, y};
    }
    const std::string a = text.substr(0, dots);
    const std::string b = text.substr(dots + 2);
    const int first = std::stoi(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    const int last = std::stoi(b, &used);
    if (used != b.size() || last < first) throw std::invalid_argument(text);
    return {first, last};
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::InvalidArgument,
                fmt::format("bad season range '{}' (expected YYYY or YYYY..YYYY)", text));
  }
}

Format parse_format(const std::string& text) {
  if (text == "text") return Format::Text;
  if (text == "csv") return Format::Csv;
  if (text == "svg") return Format::Svg;
  throw Error(ErrorCode::InvalidArgument, fmt::format("unknown format '{}'", text));
}

std::string default_data_dir() {
  const char* env = std::getenv("LINECAST_DATA_DIR");
  return env && *env ? env : "data";
}

Dataset load(const RunConfig& config) {
  const auto all = load_dataset(config.games_path, config.divisions_path);
  return filter(all, {.seasons = config.seasons, .regular_season_only = !config.include_postseason});
}

void cmd_ingest_check(const RunConfig& config, std::ostream& out) {
  const auto ds = load_dataset(config.games_path, config.divisions_path);
  std::map<int, std::pair<std::size_t, std::size_t>> per_season;  // regular, post
  std::map<std::pair<int, TeamId>, std::size_t> played;
  for (const auto& g : ds.games()) {
    auto& [regular, post] = per_season[g.season];
    if (g.is_regular_season()) {
      ++regular;
      ++played[{g.season, g.home}];
      ++played[{g.season, g.away}];
    } else {
      ++post;
    }
  }
  fmt::print(out, "ok: {} games, {} teams, {} seasons\n", ds.size(), ds.divisions().size(),
             per_season.size());
  fmt::print(out, "season  regular  postseason\n");
  for (const auto& [season, counts] : per_season) {
    fmt::print(out, "{:<6}  {:>7}  {:>10}\n", season, counts.first, counts.second);
  }
  for (const auto& [key, n] : played) {
    if (n != kGamesPerTeam) {
      fmt::print(out, "warning: {} {} played {} regular-season games\n", key.first, key.second.code, n);
    }
  }
}

void cmd_summary(const RunConfig& config, std::ostream& out) {
  const auto ds = load(config);
  const auto seasons = ds.seasons();
  std::map<int, std::size_t> per_season;
  for (const auto& g : ds.games()) ++per_season[g.season];
  const auto fav = favorite_ats_summary(ds);
  const auto ld = line_differences(ds);

  if (config.format == Format::Csv) {
    fmt::print(out, "metric,value\n");
    fmt::print(out, "games,{}\n", ds.size());
    for (const auto& [season, n] : per_season) fmt::print(out, "games_{},{}\n", season, n);
    if (!ds.empty()) fmt::print(out, "home_straight_up_rate,{:.6f}\n", home_straight_up_rate(ds));
    fmt::print(out, "favorite_covers,{}\nfavorite_wins_no_cover,{}\nfavorite_losses,{}\n",
               fav.covers, fav.wins_no_cover, fav.losses);
    fmt::print(out, "favorite_pushes,{}\npick_ems,{}\n", fav.pushes, fav.pick_ems);
    if (ld.size() >= 2) {
      const auto m = moments(ld);
      fmt::print(out, "ld_mean,{:.6f}\nld_std,{:.6f}\n", m.mean, m.std_dev);
    }
    return;
  }

  if (seasons.empty()) {
    fmt::print(out, "games: 0\n");
  } else {
    fmt::print(out, "games: {} (seasons {}-{})\n", ds.size(), seasons.front(), seasons.back());
  }
  for (const auto& [season, n] : per_season) fmt::print(out, "  {}: {}\n", season, n);
  if (!ds.empty()) {
    fmt::print(out, "home straight-up win rate: {:.3f}\n", home_straight_up_rate(ds));
  }
  fmt::print(out,
             "favorites against the spread: {} covered, {} won without covering, {} lost, "
             "{} pushed, {} pick-ems ({} total)\n",
             fav.covers, fav.wins_no_cover, fav.losses, fav.pushes, fav.pick_ems, fav.total());
  if (ld.size() >= 2) {
    const auto m = moments(ld);
    fmt::print(out, "line difference: mean {:.3f}, std {:.3f} (n={})\n", m.mean, m.std_dev, m.n);
  } else {
    fmt::print(out, "line difference: n/a (n={})\n", ld.size());
  }

  const auto table = home_record_table(ds);
  fmt::print(out, "\nhome team against the spread\n");
  fmt::print(out, "{:<6}  {:>9} {:>6}  {:>9} {:>6}  {:>9} {:>6}  {:>9} {:>6}\n", "season",
             "favorite", "ratio", "underdog", "ratio", "pick-em", "ratio", "all", "ratio");
  const auto row = [&](const std::string& label, const HomeRecordRow& r) {
    std::string line = fmt::format("{:<6}", label);
    for (const auto* c : {&r.favorites, &r.underdogs, &r.pick_ems, &r.all_home}) {
      line += fmt::format("  {:>9} {:>6}", fmt::format("{}-{}", c->wins, c->losses), ratio(*c));
    }
    fmt::print(out, "{}\n", line);
  };
  for (const auto& [season, r] : table.seasons) row(std::to_string(season), r);
  row("total", table.total);
  fmt::print(out, "{:<6}  {:>16}  {:>16}  {:>16}  {:>16}\n", "z", z_against_even(table.total.favorites),
             z_against_even(table.total.underdogs), z_against_even(table.total.pick_ems),
             z_against_even(table.total.all_home));

  fmt::print(out,
             "\n{}: 2560 games; line difference mean -0.009, std 13.588; favorites "
             "1194 covered, 412 won without covering, 853 lost, 101 pushed; home records "
             "816-888 favorite, 409-396 underdog, 15-13 pick-em\n",
             kReferenceLabel);
}

void cmd_hist(const RunConfig& config, const std::string& metric, double bin_width, std::ostream& out) {
  std::vector<double> values;
  std::string title;
  const auto ds = load(config);
  if (metric == "closing-line") {
    values = closing_lines(ds);
    title = "Closing line (home-positive)";
  } else if (metric == "ld") {
    values = line_differences(ds);
    title = "Line difference";
  } else if (metric == "movement") {
    values = line_movements(ds);
    title = "Line movement (close - open)";
  } else {
    throw Error(ErrorCode::UnknownMetric,
                fmt::format("unknown metric '{}' (expected closing-line, ld or movement)", metric));
  }
  const auto h = histogram(values, bin_width, centered_origin(bin_width));

  switch (config.format) {
    case Format::Csv:
      fmt::print(out, "wrote {}\n", write_artifact(config, "hist_" + metric + ".csv", histogram_to_csv(h)));
      return;
    case Format::Svg:
      fmt::print(out, "wrote {}\n",
                 write_artifact(config, "hist_" + metric + ".svg",
                                histogram_to_svg(h, {.title = title, .x_label = "points"})));
      return;
    case Format::Text:
      break;
  }
  fmt::print(out, "{} (bin width {}, n={})\n", title, bin_width, h.total);
  for (const auto& [idx, count] : h.bins) fmt::print(out, "{:>7} {:>6}\n", h.center(idx), count);
  std::string modes;
  for (const auto idx : h.modes(3)) modes += fmt::format("{}{}", modes.empty() ? "" : ", ", h.center(idx));
  fmt::print(out, "modes: {}\n", modes.empty() ? "-" : modes);
}

void cmd_gof(const RunConfig& config, double bin_width, double min_expected, std::ostream& out) {
  const auto ds = load(config);
  const auto ld = line_differences(ds);
  const auto m = moments(ld);
  const auto r = chi_square_gof(ld, {.sigma = kLineErrorSigma, .bin_width = bin_width,
                                     .min_expected = min_expected});
  if (config.format == Format::Csv) {
    fmt::print(out, "lower,upper,observed,expected\n");
    for (const auto& b : r.bins) fmt::print(out, "{},{},{},{:.6f}\n", b.lower, b.upper, b.observed, b.expected);
    return;
  }
  fmt::print(out, "line difference: mean {:.3f}, std {:.3f} (n={})\n", m.mean, m.std_dev, m.n);
  fmt::print(out, "chi-squared against Normal(0, {}): {:.3f} on {} df (critical {:.3f} at 0.05)\n",
             kLineErrorSigma, r.statistic, r.degrees_of_freedom, r.critical_value);
  fmt::print(out, "{}\n", r.reject_at_05 ? "normality rejected at 0.05" : "normality not rejected at 0.05");
  fmt::print(out, "{:>9} {:>9} {:>9} {:>10}\n", "lower", "upper", "observed", "expected");
  for (const auto& b : r.bins) {
    fmt::print(out, "{:>9} {:>9} {:>9} {:>10.2f}\n", b.lower, b.upper, b.observed, b.expected);
  }
}

PredictionScore cmd_simulate(const RunConfig& config, int season, std::ostream& out) {
  const auto ds = load(config);
  const auto schedule = build_schedule(ds, season);
  const auto result = simulate(schedule, {.replications = config.replications,
                                          .seed = config.seed,
                                          .threads = config.threads});
  const auto predictions = predict_division_winners(result, schedule, ds.divisions());
  const auto score = score_predictions(predictions);
  const auto path = write_artifact(config, fmt::format("simulate_{}.csv", season),
                                   simulation_to_csv(result, schedule, ds.divisions(), predictions));
  fmt::print(out, "wrote {}\n", path);
  for (const auto& w : schedule.warnings) fmt::print(out, "note: {}\n", w);
  fmt::print(out, "divisions correct: {}/{}\n", score.correct, score.total);
  return score;
}

void cmd_predict_divisions(const RunConfig& config, std::ostream& out) {
  const auto ds = load(config);
  fmt::print(out, "season  correct  {}\n", kReferenceLabel);
  PredictionScore all;
  for (const int season : ds.seasons()) {
    const auto schedule = build_schedule(ds, season);
    const auto result = simulate(schedule, {.replications = config.replications,
                                            .seed = config.seed,
                                            .threads = config.threads});
    const auto score = score_predictions(predict_division_winners(result, schedule, ds.divisions()));
    all.correct += score.correct;
    all.total += score.total;
    const auto ref = kReferenceDivisionScores.find(season);
    fmt::print(out, "{:<6}  {:>7}  {}\n", season, fmt::format("{}/{}", score.correct, score.total),
               ref == kReferenceDivisionScores.end() ? "-" : fmt::format("{}/8", ref->second));
  }
  fmt::print(out, "total   {:>7}\n", fmt::format("{}/{}", all.correct, all.total));
}

void cmd_backtest(const RunConfig& config, const std::string& strategy_name, const Pricing& pricing,
                  LineChoice settle_on, std::ostream& out) {
  const auto ds = load(config);
  const auto strategy = Strategy::from_name(strategy_name);
  const auto ledger = run_strategy(ds, strategy, pricing, settle_on);
  const auto& t = ledger.totals;

  if (config.format == Format::Csv) {
    fmt::print(out, "wrote {}\n",
               write_artifact(config, "backtest_" + strategy_name + ".csv", ledger_to_csv(ledger, ds)));
    return;
  }

  fmt::print(out, "strategy {} settled on the {} line, risking {} to win {}\n", strategy.name(),
             settle_on == LineChoice::Closing ? "closing" : "opening", pricing.stake, pricing.win_payout);
  fmt::print(out, "bets {}: {} won, {} lost, {} pushed; profit {:.2f}\n", t.bets(), t.wins, t.losses,
             t.pushes, t.profit);
  const double be = break_even_ratio(pricing);
  if (t.decided() == 0) {
    fmt::print(out, "no decided bets; break-even ratio {:.4f}\n", be);
  } else {
    const auto cmp = compare_to_breakeven(t, pricing);
    fmt::print(out, "win ratio {:.4f}, break-even {:.4f}, margin {:+.4f}: {}\n", t.win_ratio(), be,
               cmp.margin, cmp.profitable ? "profitable" : "not profitable");
  }

  fmt::print(out, "\nseason  won  lost  push  ratio\n");
  for (const auto& [season, s] : ledger.per_season) {
    fmt::print(out, "{:<6}  {:>3}  {:>4}  {:>4}  {}\n", season, s.wins, s.losses, s.pushes,
               s.decided() == 0 ? "-" : fmt::format("{:.3f}", s.win_ratio()));
  }

  const auto fav = run_strategy(ds, Strategy::from_name("all-favorites"), pricing, settle_on).totals;
  const auto dog = run_strategy(ds, Strategy::from_name("all-underdogs"), pricing, settle_on).totals;
  const bool mirror = fav.wins == dog.losses && fav.losses == dog.wins && fav.pushes == dog.pushes;
  fmt::print(out, "\nmirror check (favorites {}-{}-{}, underdogs {}-{}-{}): {}\n", fav.wins, fav.losses,
             fav.pushes, dog.wins, dog.losses, dog.pushes, mirror ? "holds" : "FAILS");
  if (strategy_name == "home-underdog") {
    fmt::print(out, "{}: home underdogs 409-396 (0.508); headline figure 0.535\n", kReferenceLabel);
  }
}

void cmd_movement(const RunConfig& config, double threshold, std::ostream& out) {
  const auto ds = load(config);
  const auto weekly = movement_fraction_by_week(ds, threshold);
  if (config.format == Format::Csv) {
    fmt::print(out, "wrote {}\n",
               write_artifact(config, "movement_weekly.csv", weekly_movement_to_csv(weekly)));
    return;
  }
  fmt::print(out, "share of games whose line moved at least {} point(s)\n", threshold);
  fmt::print(out, "week  games  share\n");
  for (const auto& [week, f] : weekly.fraction) {
    fmt::print(out, "{:>4}  {:>5}  {:.3f}\n", week, weekly.games.at(week), f);
  }
  fmt::print(out, "overall {:.3f}; weekly mean {:.3f}, std {:.3f}\n", weekly.overall, weekly.mean,
             weekly.std_dev);

  const std::vector<double> thresholds = {0.0, 0.5, 1.0, 2.0, 3.0, 7.0,
                                          std::numeric_limits<double>::infinity()};
  fmt::print(out, "\ngames with |movement| <= threshold\n");
  for (const auto& [th, n] : movement_cumulative_counts(ds, thresholds)) {
    fmt::print(out, "{:>5}  {}\n", std::isinf(th) ? std::string("any") : fmt::format("{}", th), n);
  }
  fmt::print(out, "{}: 1548 games at <= 0.5, over 2000 at <= 1.0\n", kReferenceLabel);
}

namespace {

void add_data_options(CLI::App* sub, RunConfig& config, std::string& seasons, std::string& format) {
  sub->add_option("--games", config.games_path, "games CSV")->capture_default_str();
  sub->add_option("--divisions", config.divisions_path, "team to division CSV")->capture_default_str();
  sub->add_option("--seasons", seasons, "season or range, e.g. 2002..2011");
  sub->add_flag("--include-postseason", config.include_postseason, "keep weeks after the regular season");
  sub->add_option("--format", format, "text, csv or svg")
      ->check(CLI::IsMember({"text", "csv", "svg"}))
      ->capture_default_str();
  sub->add_option("--output-dir", config.output_dir, "directory for file artifacts")->capture_default_str();
}

void add_simulation_options(CLI::App* sub, RunConfig& config) {
  sub->add_option("--seed", config.seed, "random seed")->capture_default_str();
  sub->add_option("--replications", config.replications, "simulated seasons")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--threads", config.threads, "worker threads (0 = all cores)")->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Point-spread analytics: line accuracy, season simulation and betting backtests"};
  app.name("linecast");
  app.require_subcommand(1);

  RunConfig config;
  const auto dir = default_data_dir();
  config.games_path = dir + "/games.csv";
  config.divisions_path = dir + "/divisions.csv";
  std::string seasons;
  std::string format = "text";

  auto* ingest = app.add_subcommand("ingest-check", "validate the input files");
  auto* summary = app.add_subcommand("summary", "dataset facts, favorite ATS split, home records");
  auto* hist = app.add_subcommand("hist", "histogram of closing lines, line differences or movement");
  auto* gof = app.add_subcommand("gof", "chi-squared normality test of line differences");
  auto* sim = app.add_subcommand("simulate", "simulate one season and predict division winners");
  auto* predict = app.add_subcommand("predict-divisions", "division prediction score for every season");
  auto* backtest = app.add_subcommand("backtest", "flat-stake betting strategy ledger");
  auto* movement = app.add_subcommand("movement", "opening to closing line movement");
  for (auto* sub : {ingest, summary, hist, gof, sim, predict, backtest, movement}) {
    add_data_options(sub, config, seasons, format);
  }
  add_simulation_options(sim, config);
  add_simulation_options(predict, config);

  std::string metric = "closing-line";
  std::optional<double> bin_width;
  hist->add_option("--metric", metric, "closing-line, ld or movement")
      ->check(CLI::IsMember({"closing-line", "ld", "movement"}))
      ->capture_default_str();
  hist->add_option("--bin-width", bin_width, "bin width in points (default 1 for ld, else 0.5)")
      ->check(CLI::PositiveNumber);

  double gof_width = 2.0;
  double min_expected = 5.0;
  gof->add_option("--bin-width", gof_width, "fine bin width before merging")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  gof->add_option("--min-expected", min_expected, "minimum expected count per bin")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  int season = 0;
  sim->add_option("--season", season, "season to simulate")->required();

  std::string strategy = "home-underdog";
  Pricing pricing;
  std::string line = "close";
  backtest->add_option("--strategy", strategy, "betting strategy")
      ->check(CLI::IsMember(Strategy::builtin_names()))
      ->capture_default_str();
  backtest->add_option("--stake", pricing.stake, "amount risked per bet")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  backtest->add_option("--payout", pricing.win_payout, "amount won per winning bet")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  backtest->add_option("--line", line, "settle on the close or open line")
      ->check(CLI::IsMember({"close", "open"}))
      ->capture_default_str();

  double threshold = 1.0;
  movement->add_option("--threshold", threshold, "movement threshold in points")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
    if (!seasons.empty()) config.seasons = parse_year_range(seasons);
    config.format = parse_format(format);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    fmt::print(err, "linecast: {}\n", e.what());
    return 2;
  }

  try {
    if (*ingest) cmd_ingest_check(config, out);
    if (*summary) cmd_summary(config, out);
    if (*hist) cmd_hist(config, metric, bin_width.value_or(metric == "ld" ? 1.0 : 0.5), out);
    if (*gof) cmd_gof(config, gof_width, min_expected, out);
    if (*sim) cmd_simulate(config, season, out);
    if (*predict) cmd_predict_divisions(config, out);
    if (*backtest) {
      cmd_backtest(config, strategy, pricing, line == "open" ? LineChoice::Opening : LineChoice::Closing, out);
    }
    if (*movement) cmd_movement(config, threshold, out);
  } catch (const std::exception& e) {
    fmt::print(err, "linecast: {}\n", e.what());
    return 1;
  }
  return 0;
}

}  // namespace linecast::cli
