#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace linecast {

enum class ErrorCode {
  // ingestion
  MissingColumn,
  MalformedRow,
  NonHalfPointSpread,
  DuplicateGame,
  UnknownTeam,
  WrongTeamCount,
  UnknownConference,
  UnbalancedDivision,
  // metrics / stats / model
  UnresolvableSide,
  EmptySample,
  InsufficientData,
  DegenerateBinning,
  NoGamesAtSpread,
  InvalidArgument,
  // simulation / backtest / cli
  MissingSeason,
  NonPositiveStake,
  NoDecidedBets,
  UnknownMetric,
  UnknownStrategy,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. `row()` is the 1-based line number
/// in the source file when the error came from ingestion.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> row = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> row() const noexcept { return row_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> row_;
};

}  // namespace linecast
