#include "travel/domain/catalog_items.hpp"

#include <cmath>
#include <string>

namespace travel {

std::vector<std::string> check_invariants(const Flight& f) {
    std::vector<std::string> problems;
    const double span = minutes_between(f.departure_time, f.arrival_time);
    if (std::fabs(span - f.total_duration) > 0.5) {
        problems.push_back(f.flight_number + ": arrival - departure is " + std::to_string(span) +
                           " min but total_duration is " + std::to_string(f.total_duration));
    }
    if (f.round_trip_price.cents < 0) problems.push_back(f.flight_number + ": negative price");
    return problems;
}

std::vector<std::string> check_invariants(const Attraction& a) {
    std::vector<std::string> problems;
    if (!(a.recommend_duration > 0.0)) problems.push_back(a.name + ": recommend_duration must be positive");
    if (a.rating < 0.0 || a.rating > 5.0) problems.push_back(a.name + ": rating outside [0, 5]");
    if (a.price_per_person.cents < 0) problems.push_back(a.name + ": negative price");
    return problems;
}

} // namespace travel
