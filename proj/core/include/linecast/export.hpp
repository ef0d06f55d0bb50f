#pragma once

#include <map>
#include <string>
#include <vector>

#include "linecast/backtest.hpp"
#include "linecast/dataset.hpp"
#include "linecast/metrics.hpp"
#include "linecast/prob_model.hpp"
#include "linecast/simulator.hpp"

namespace linecast {

// CSV writers share the input dialect: comma separated, LF line endings,
// a header row, no quoting. Output is byte-stable for equal input.

std::string histogram_to_csv(const Histogram& h);
std::string home_record_table_to_csv(const HomeRecordTable& t);
std::string weekly_movement_to_csv(const WeeklyMovement& m);
std::string win_distribution_to_csv(const WinDistribution& d);
std::string yearly_series_to_csv(const std::map<int, double>& series);
std::string ledger_to_csv(const StrategyLedger& ledger, const Dataset& dataset);

/// team,division,predicted_wins,actual_wins,outcome ordered by division,
/// then predicted wins (descending), then team. `outcome` is
/// "Division Winner" for the actual division winner.
std::string simulation_to_csv(const SimulationResult& result, const SeasonSchedule& schedule,
                              const DivisionMap& divisions,
                              const std::vector<DivisionPrediction>& predictions);

struct SvgOptions {
  std::string title;
  std::string x_label;
  int width = 720;
  int height = 400;
};

/// Standalone static bar chart of a histogram.
std::string histogram_to_svg(const Histogram& h, const SvgOptions& options = {});

}  // namespace linecast
