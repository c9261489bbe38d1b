#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace travel {

enum class InsightKind { soft, commonsense };

std::string_view to_string(InsightKind kind);
InsightKind parse_insight_kind(std::string_view text);

// Structured keys used by soft insights.
namespace insight_keys {
inline constexpr std::string_view spending_level = "user_spending_level";
inline constexpr std::string_view attraction_preference = "user_attraction_preference";
inline constexpr std::string_view restaurant_preference = "user_restaurant_preference";
inline constexpr std::string_view top_categories = "user_top_categories";
} // namespace insight_keys

// Soft records belong to a user; commonsense records leave user_id empty and
// carry "id", "condition" and "effect" in `structured`.
struct InsightRecord {
    std::string user_id;
    InsightKind kind = InsightKind::soft;
    std::map<std::string, std::string> structured;
    std::string narrative;
    std::string scenario_id;
    std::int64_t created_at = 0; // logical timestamp supplied by the caller

    bool operator==(const InsightRecord&) const = default;
};

} // namespace travel
