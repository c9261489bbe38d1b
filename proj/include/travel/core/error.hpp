#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace travel {

// Machine-readable failure codes shared by every module and surfaced verbatim
// by the HTTP service.
enum class ErrorCode {
    MissingField,
    BadField,
    BadDate,
    NegativeCount,
    MalformedDocument,
    InvalidValue,
    MissingParam,
    ProviderUnavailable,
    NoResults,
    DayOverflow,
    ModelFailure,
    UnknownItem,
    PreconditionFailed,
    LengthMismatch,
    NoFlights,
    BudgetTooSmall,
    InfeasibleTrip,
    NoActiveScenario,
    EmptyBuffer,
    FixtureMissing,
    EmptySeries,
    NotFound,
    StageConflict,
    Io,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message);

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

} // namespace travel
