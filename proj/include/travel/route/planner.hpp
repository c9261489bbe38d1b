#pragma once

#include "travel/budget/budget.hpp"
#include "travel/domain/catalog_items.hpp"
#include "travel/domain/constraints.hpp"
#include "travel/domain/itinerary.hpp"
#include "travel/domain/request.hpp"
#include "travel/domain/score.hpp"

#include <functional>
#include <optional>
#include <set>
#include <vector>

namespace travel::route {

struct PlannerConfig {
    double travel_speed_kmh = 5.0;
    Hours day_start = 9.0;
    Hours day_end = 19.0;
    std::optional<TimeWindow> lunch_window = TimeWindow(11.0, 13.0);
    std::optional<TimeWindow> dinner_window = TimeWindow(16.0, 18.0);
    Hours meal_duration = 2.0;
    // Visits are only scheduled before a meal when the meal can still start
    // within this long after its window opens.
    Hours meal_start_slack = 0.5;
    // Skip visits that would not overlap the attraction's recommended window at all.
    bool require_window_overlap = true;
    double restaurant_search_radius_km = 1.5;
    // Time between the aircraft door and the hotel (or the city centre), and back.
    Hours airport_transfer = 1.0;
    bool check_in_routine = true;
    bool check_out_routine = true;
    // Visits per day; 0 means unlimited.
    int max_visits_per_day = 0;
    // Auto-accepted recommendations per trip day in non-interactive runs.
    int attractions_per_day = 4;
};

// Throws InvalidValue when the speed is not positive or the meal windows
// overlap or fall outside the day.
void validate(const PlannerConfig& cfg);

// Adjusts the config for the trip according to commonsense rules
// (child-pacing caps visits per day when a young child travels).
PlannerConfig apply_commonsense(PlannerConfig cfg, const CommonsenseRuleSet& rules, const TravelRequest& r);

struct PlannerState {
    GeoPoint p_cur;
    Hours t_cur = 9.0;
    Hours day_end = 19.0;
    std::vector<Attraction> remaining;
    std::set<ItemId> visited_restaurants;
    Date date{};
};

// Component scores. return_time_score is nullopt for the infeasible case.
std::optional<double> return_time_score(Hours t_left, Hours t_cost);
double visit_time_score(Hours t_arr, Hours t_dep, const TimeWindow& window);
double reserve_time_score(Hours t_left, double d_km, double speed_kmh);

// Swappable scoring forms.
class ScoringPolicy {
  public:
    virtual ~ScoringPolicy() = default;
    virtual ScoreBreakdown score(const PlannerState& state, const PlannerConfig& cfg, const Attraction& a) const = 0;
};

class DefaultScoring final : public ScoringPolicy {
  public:
    ScoreBreakdown score(const PlannerState& state, const PlannerConfig& cfg, const Attraction& a) const override;
};

const ScoringPolicy& default_scoring();

ScoreBreakdown score_attraction(const PlannerState& state, const PlannerConfig& cfg, const Attraction& a);

struct Selection {
    std::size_t index = 0; // into state.remaining
    ScoreBreakdown score;
};

// Extra planner-level admission test applied after the feasibility gate.
using SelectionGate = std::function<bool(const Attraction&, const ScoreBreakdown&)>;

// Highest s_total among feasible candidates that pass the gate; ties go to
// higher rating, then shorter distance, then smaller id.
std::optional<Selection> select_next(const PlannerState& state, const PlannerConfig& cfg,
                                     const ScoringPolicy& policy = default_scoring(), const SelectionGate& gate = {});

// What a single day must fit around.
struct DayRoutines {
    GeoPoint base;       // where the day ends
    ItemId base_ref;     // hotel id, empty for the city centre
    bool lunch = true;   // meals still wanted today
    bool dinner = true;
    std::string cuisine; // preferred cuisine, may be empty
    // Remaining entry-fee allowance in cents, shared across the trip and
    // charged per party member; unlimited when null.
    std::int64_t* attraction_budget_left = nullptr;
    int party_size = 1;
    // When false the day ends wherever the last activity ends and no return
    // leg is reserved (the caller adds its own transfer).
    bool return_to_base = true;
};

// Runs the greedy day loop from state.t_cur until nothing fits, then returns
// to base. Chosen attractions are removed from state.remaining and chosen
// restaurants are added to state.visited_restaurants.
DayPlan plan_day(PlannerState& state, const PlannerConfig& cfg, const std::vector<Restaurant>& restaurants,
                 const DayRoutines& routines, const ScoringPolicy& policy = default_scoring());

struct FlightPair {
    Flight outbound;
    Flight inbound;

    bool operator==(const FlightPair&) const = default;
};

// Earliest-arriving outbound and latest-departing return within the
// cheapest price tier of each direction. Throws NoFlights.
FlightPair choose_flights(const std::vector<Flight>& flights);

// Highest-rated hotel whose stay price fits the accommodation allowance
// (cheapest first on equal rating). nullopt when none fits.
std::optional<Hotel> choose_hotel(const std::vector<Hotel>& hotels, std::optional<Money> allowance);

struct TripInputs {
    TravelRequest request;
    std::vector<Attraction> attractions; // in re-ranked order
    FlightPair flights;
    std::optional<Hotel> hotel;
    std::vector<Restaurant> restaurants;
    std::optional<budget::BudgetPlan> budget;
    GeoPoint city_center;
    std::string trip_id;
};

// Throws InfeasibleTrip when the flights overlap, or when a stay with nights
// has no hotel (or the hotel exceeds the accommodation allowance).
Itinerary plan_trip(const TripInputs& in, const PlannerConfig& cfg = {},
                    const ScoringPolicy& policy = default_scoring());

} // namespace travel::route
