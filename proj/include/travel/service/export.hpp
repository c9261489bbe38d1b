#pragma once

#include "travel/budget/budget.hpp"
#include "travel/domain/itinerary.hpp"
#include "travel/domain/request.hpp"
#include "travel/route/planner.hpp"

#include <map>
#include <optional>
#include <string>

namespace travel::service {

struct PlanDocument {
    TravelRequest request;
    Itinerary itinerary;
    route::FlightPair flights;
    std::optional<Hotel> hotel;
    std::map<ItemId, Attraction> attractions;
    std::map<ItemId, Restaurant> restaurants;
    std::optional<budget::BudgetPlan> budget;
};

// Day-by-day document: one "HH:MM to HH:MM: ..." entry per route point,
// followed by a Flight/Hotel/Sight/Restaurant Info block where one applies.
std::string render_markdown(const PlanDocument& doc);

} // namespace travel::service
