#include "travel/core/error.hpp"

namespace travel {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::MissingField: return "missing_field";
    case ErrorCode::BadField: return "bad_field";
    case ErrorCode::BadDate: return "bad_date";
    case ErrorCode::NegativeCount: return "negative_count";
    case ErrorCode::MalformedDocument: return "malformed_document";
    case ErrorCode::InvalidValue: return "invalid_value";
    case ErrorCode::MissingParam: return "missing_param";
    case ErrorCode::ProviderUnavailable: return "provider_unavailable";
    case ErrorCode::NoResults: return "no_results";
    case ErrorCode::DayOverflow: return "day_overflow";
    case ErrorCode::ModelFailure: return "model_failure";
    case ErrorCode::UnknownItem: return "unknown_item";
    case ErrorCode::PreconditionFailed: return "precondition_failed";
    case ErrorCode::LengthMismatch: return "length_mismatch";
    case ErrorCode::NoFlights: return "no_flights";
    case ErrorCode::BudgetTooSmall: return "budget_too_small";
    case ErrorCode::InfeasibleTrip: return "infeasible_trip";
    case ErrorCode::NoActiveScenario: return "no_active_scenario";
    case ErrorCode::EmptyBuffer: return "empty_buffer";
    case ErrorCode::FixtureMissing: return "fixture_missing";
    case ErrorCode::EmptySeries: return "empty_series";
    case ErrorCode::NotFound: return "not_found";
    case ErrorCode::StageConflict: return "stage_conflict";
    case ErrorCode::Io: return "io";
    }
    return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

} // namespace travel
