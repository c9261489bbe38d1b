#include "travel/domain/itinerary.hpp"

#include "travel/core/error.hpp"

#include <array>
#include <string>
#include <utility>

namespace travel {
namespace {

constexpr std::array<std::pair<RouteKind, std::string_view>, 7> kKindNames = {{
    {RouteKind::flight, "flight"},
    {RouteKind::check_in, "check_in"},
    {RouteKind::check_out, "check_out"},
    {RouteKind::visit, "visit"},
    {RouteKind::meal, "meal"},
    {RouteKind::transfer, "transfer"},
    {RouteKind::return_to_hotel, "return_to_hotel"},
}};

} // namespace

std::string_view to_string(RouteKind kind) {
    for (const auto& [k, name] : kKindNames) {
        if (k == kind) return name;
    }
    return "visit";
}

RouteKind parse_route_kind(std::string_view text) {
    for (const auto& [k, name] : kKindNames) {
        if (name == text) return k;
    }
    throw Error(ErrorCode::BadField, "unknown route point kind '" + std::string(text) + "'");
}

std::vector<std::string> check_day_ordering(const DayPlan& day) {
    constexpr double eps = 1e-9;
    std::vector<std::string> problems;
    for (std::size_t i = 0; i < day.points.size(); ++i) {
        const auto& p = day.points[i];
        if (p.end < p.start - eps) {
            problems.push_back("point " + std::to_string(i) + " ends before it starts");
        }
        if (i > 0 && p.start < day.points[i - 1].end - eps) {
            problems.push_back("point " + std::to_string(i) + " overlaps its predecessor");
        }
    }
    return problems;
}

} // namespace travel
