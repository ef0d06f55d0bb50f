#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "linecast/backtest.hpp"
#include "linecast/dataset.hpp"
#include "linecast/simulator.hpp"

namespace linecast::cli {

enum class Format { Text, Csv, Svg };

struct RunConfig {
  std::string games_path;
  std::string divisions_path;
  std::optional<YearRange> seasons;
  bool include_postseason = false;
  std::uint64_t seed = 2002;
  std::size_t replications = kDefaultReplications;
  std::size_t threads = 1;
  std::string output_dir = ".";
  Format format = Format::Text;
};

/// Parses "2002..2011" or a single year. Throws InvalidArgument.
YearRange parse_year_range(const std::string& text);

Format parse_format(const std::string& text);

/// Directory named by LINECAST_DATA_DIR, or "data".
std::string default_data_dir();

/// Loads both files and applies the season filter. Postseason games are
/// dropped unless `include_postseason` is set.
Dataset load(const RunConfig& config);

// Each command writes its report to `out`. File artifacts land in
// config.output_dir; their paths are reported on `out`.

void cmd_ingest_check(const RunConfig& config, std::ostream& out);
void cmd_summary(const RunConfig& config, std::ostream& out);
void cmd_hist(const RunConfig& config, const std::string& metric, double bin_width, std::ostream& out);
void cmd_gof(const RunConfig& config, double bin_width, double min_expected, std::ostream& out);
/// Writes simulate_<season>.csv and prints "divisions correct: N/8".
PredictionScore cmd_simulate(const RunConfig& config, int season, std::ostream& out);
void cmd_predict_divisions(const RunConfig& config, std::ostream& out);
void cmd_backtest(const RunConfig& config, const std::string& strategy, const Pricing& pricing,
                  LineChoice settle_on, std::ostream& out);
void cmd_movement(const RunConfig& config, double threshold, std::ostream& out);

/// Full command line, argv[0] included. Returns the process exit code:
/// 0 on success, 1 for data and runtime errors, 2 for usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace linecast::cli
