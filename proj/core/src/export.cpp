#include "linecast/export.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace linecast {

std::string histogram_to_csv(const Histogram& h) {
  std::string out = "bin_center,count\n";
  for (const auto& [idx, count] : h.bins) out += fmt::format("{},{}\n", h.center(idx), count);
  return out;
}

std::string home_record_table_to_csv(const HomeRecordTable& t) {
  std::string out =
      "season,fav_win,fav_lose,fav_wr,dog_win,dog_lose,dog_wr,pick_win,pick_lose,pick_wr,"
      "all_win,all_lose,all_wr\n";
  const auto row = [](const std::string& label, const HomeRecordRow& r) {
    std::string line = label;
    for (const auto* c : {&r.favorites, &r.underdogs, &r.pick_ems, &r.all_home}) {
      line += fmt::format(",{},{},{:.3f}", c->wins, c->losses, c->win_ratio());
    }
    return line + "\n";
  };
  for (const auto& [season, r] : t.seasons) out += row(std::to_string(season), r);
  out += row("Total", t.total);
  return out;
}

std::string weekly_movement_to_csv(const WeeklyMovement& m) {
  std::string out = "week,games,fraction\n";
  for (const auto& [week, f] : m.fraction) {
    out += fmt::format("{},{},{:.6f}\n", week, m.games.at(week), f);
  }
  return out;
}

std::string win_distribution_to_csv(const WinDistribution& d) {
  std::string out = "k,probability\n";
  for (std::size_t k = 0; k < d.probs.size(); ++k) out += fmt::format("{},{:.12f}\n", k, d.probs[k]);
  return out;
}

std::string yearly_series_to_csv(const std::map<int, double>& series) {
  std::string out = "season,cover_rate\n";
  for (const auto& [season, r] : series) out += fmt::format("{},{:.6f}\n", season, r);
  return out;
}

std::string ledger_to_csv(const StrategyLedger& ledger, const Dataset& dataset) {
  std::string out = "season,week,home,away,line,side,outcome,cashflow\n";
  const auto games = dataset.games();
  for (const auto& b : ledger.bets) {
    const auto& g = games[b.game_index];
    out += fmt::format("{},{},{},{},{},{},{},{}\n", g.season, g.week, g.home.code, g.away.code,
                       format_spread(line_of(g, ledger.settled_on)), to_string(b.side),
                       to_string(b.outcome), b.cashflow);
  }
  return out;
}

std::string simulation_to_csv(const SimulationResult& result, const SeasonSchedule& schedule,
                              const DivisionMap& divisions,
                              const std::vector<DivisionPrediction>& predictions) {
  struct Row {
    DivisionSlot slot;
    TeamId team;
    int predicted;
    int actual;
    bool winner;
  };
  std::vector<Row> rows;
  for (const auto& team : result.teams) {
    const auto& slot = divisions.at(team);
    const auto it = schedule.actual_wins.find(team);
    const double actual = it == schedule.actual_wins.end() ? 0.0 : it->second;
    const bool winner = std::any_of(predictions.begin(), predictions.end(), [&](const auto& p) {
      return p.slot == slot && p.actual_winner == team;
    });
    rows.push_back({slot, team, result.predicted_wins.at(team),
                    static_cast<int>(std::floor(actual)), winner});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.slot != b.slot) return a.slot < b.slot;
    if (a.predicted != b.predicted) return a.predicted > b.predicted;
    return a.team < b.team;
  });
  std::string out = "team,division,predicted_wins,actual_wins,outcome\n";
  for (const auto& r : rows) {
    out += fmt::format("{},{},{},{},{}\n", r.team.code, label(r.slot), r.predicted, r.actual,
                       r.winner ? "Division Winner" : "");
  }
  return out;
}

namespace {

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string histogram_to_svg(const Histogram& h, const SvgOptions& options) {
  const double left = 50.0;
  const double right = 20.0;
  const double top = 40.0;
  const double bottom = 50.0;
  const double plot_w = options.width - left - right;
  const double plot_h = options.height - top - bottom;

  std::string out = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" "
      "viewBox=\"0 0 {} {}\">\n"
      "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n",
      options.width, options.height, options.width, options.height);
  if (!options.title.empty()) {
    out += fmt::format(
        "<text x=\"{}\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        "font-size=\"16\">{}</text>\n",
        options.width / 2, escape_xml(options.title));
  }
  if (!options.x_label.empty()) {
    out += fmt::format(
        "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        "font-size=\"12\">{}</text>\n",
        options.width / 2, options.height - 10, escape_xml(options.x_label));
  }
  out += fmt::format("<line x1=\"{0}\" y1=\"{1:.1f}\" x2=\"{2:.1f}\" y2=\"{1:.1f}\" stroke=\"black\"/>\n",
                     left, top + plot_h, left + plot_w);

  if (!h.bins.empty()) {
    const auto lo = h.bins.begin()->first;
    const auto hi = h.bins.rbegin()->first;
    const auto span = static_cast<double>(hi - lo + 1);
    std::size_t peak = 0;
    for (const auto& [idx, c] : h.bins) peak = std::max(peak, c);
    const double bar_w = plot_w / span;
    for (const auto& [idx, c] : h.bins) {
      const double bh = plot_h * static_cast<double>(c) / static_cast<double>(peak);
      const double x = left + static_cast<double>(idx - lo) * bar_w;
      out += fmt::format(
          "<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" fill=\"steelblue\">"
          "<title>{}: {}</title></rect>\n",
          x, top + plot_h - bh, std::max(bar_w - 1.0, 0.5), bh, h.center(idx), c);
    }
    out += fmt::format(
        "<text x=\"{:.1f}\" y=\"{:.1f}\" font-family=\"sans-serif\" font-size=\"11\">{}</text>\n",
        left, top + plot_h + 16, h.center(lo));
    out += fmt::format(
        "<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"end\" font-family=\"sans-serif\" "
        "font-size=\"11\">{}</text>\n",
        left + plot_w, top + plot_h + 16, h.center(hi));
    out += fmt::format(
        "<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"end\" font-family=\"sans-serif\" "
        "font-size=\"11\">{}</text>\n",
        left - 4, top + 4, peak);
  }
  out += "</svg>\n";
  return out;
}

}  // namespace linecast
