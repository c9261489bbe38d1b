#pragma once

#include "travel/domain/catalog_items.hpp"
#include "travel/domain/clock.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace travel {

enum class RouteKind { flight, check_in, check_out, visit, meal, transfer, return_to_hotel };

std::string_view to_string(RouteKind kind);
RouteKind parse_route_kind(std::string_view text);

struct RoutePoint {
    RouteKind kind = RouteKind::visit;
    Hours start = 0.0;
    Hours end = 0.0;
    ItemId item_ref;
    std::string note;

    bool operator==(const RoutePoint&) const = default;
};

struct DayPlan {
    Date date{};
    std::vector<RoutePoint> points;

    bool operator==(const DayPlan&) const = default;
};

struct Itinerary {
    std::string trip_id;
    std::vector<DayPlan> days;

    bool operator==(const Itinerary&) const = default;
};

// Empty when points are sorted by start and pairwise non-overlapping.
std::vector<std::string> check_day_ordering(const DayPlan& day);

} // namespace travel
