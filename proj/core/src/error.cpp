#include "linecast/error.hpp"

namespace linecast {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MissingColumn: return "MissingColumn";
    case ErrorCode::MalformedRow: return "MalformedRow";
    case ErrorCode::NonHalfPointSpread: return "NonHalfPointSpread";
    case ErrorCode::DuplicateGame: return "DuplicateGame";
    case ErrorCode::UnknownTeam: return "UnknownTeam";
    case ErrorCode::WrongTeamCount: return "WrongTeamCount";
    case ErrorCode::UnknownConference: return "UnknownConference";
    case ErrorCode::UnbalancedDivision: return "UnbalancedDivision";
    case ErrorCode::UnresolvableSide: return "UnresolvableSide";
    case ErrorCode::EmptySample: return "EmptySample";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::DegenerateBinning: return "DegenerateBinning";
    case ErrorCode::NoGamesAtSpread: return "NoGamesAtSpread";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::MissingSeason: return "MissingSeason";
    case ErrorCode::NonPositiveStake: return "NonPositiveStake";
    case ErrorCode::NoDecidedBets: return "NoDecidedBets";
    case ErrorCode::UnknownMetric: return "UnknownMetric";
    case ErrorCode::UnknownStrategy: return "UnknownStrategy";
  }
  return "Unknown";
}

namespace {

std::string decorate(ErrorCode code, const std::string& message,
                     std::optional<std::size_t> row) {
  std::string out(to_string(code));
  if (row) out += " at line " + std::to_string(*row);
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message, std::optional<std::size_t> row)
    : std::runtime_error(decorate(code, message, row)), code_(code), row_(row) {}

}  // namespace linecast
