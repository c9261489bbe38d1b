#include "travel/domain/insight.hpp"

#include "travel/core/error.hpp"

namespace travel {

std::string_view to_string(InsightKind kind) {
    return kind == InsightKind::soft ? "soft" : "commonsense";
}

InsightKind parse_insight_kind(std::string_view text) {
    if (text == "soft") return InsightKind::soft;
    if (text == "commonsense") return InsightKind::commonsense;
    throw Error(ErrorCode::BadField, "unknown insight kind '" + std::string(text) + "'");
}

} // namespace travel
