#include "travel/route/planner.hpp"

#include "travel/core/error.hpp"
#include "travel/toolkit/geo_distance.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace travel::route {
namespace {

constexpr double kEps = 1e-9;

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

Hours travel_hours(const GeoPoint& a, const GeoPoint& b, const PlannerConfig& cfg) {
    return tools::distance_km(a, b) / cfg.travel_speed_kmh;
}

bool later(const DateTime& a, const DateTime& b) {
    if (a.date != b.date) return a.date > b.date;
    return a.hour > b.hour;
}

// Candidate order on equal total score.
bool tie_preferred(const Attraction& a, const ScoreBreakdown& sa, const Attraction& b, const ScoreBreakdown& sb) {
    if (a.rating != b.rating) return a.rating > b.rating;
    if (sa.d_km != sb.d_km) return sa.d_km < sb.d_km;
    return a.id < b.id;
}

const Restaurant* pick_restaurant(const std::vector<Restaurant>& restaurants, const GeoPoint& from,
                                  const PlannerConfig& cfg, const std::string& cuisine,
                                  const std::set<ItemId>& visited) {
    const std::string want = lower(cuisine);
    auto best_of = [&](bool match_cuisine) -> const Restaurant* {
        const Restaurant* best = nullptr;
        double best_d = 0.0;
        for (const auto& r : restaurants) {
            if (visited.contains(r.id)) continue;
            if (match_cuisine && lower(r.cuisine) != want) continue;
            const double d = tools::distance_km(from, r.position);
            if (d > cfg.restaurant_search_radius_km + kEps) continue;
            const bool better = best == nullptr || r.rating > best->rating ||
                                (r.rating == best->rating && (d < best_d || (d == best_d && r.id < best->id)));
            if (better) {
                best = &r;
                best_d = d;
            }
        }
        return best;
    };
    if (!want.empty()) {
        if (const Restaurant* r = best_of(true)) return r;
    }
    if (const Restaurant* r = best_of(false)) return r;
    // Nothing within the radius: the closest unvisited restaurant anywhere.
    const Restaurant* nearest = nullptr;
    double nearest_d = 0.0;
    for (const auto& r : restaurants) {
        if (visited.contains(r.id)) continue;
        const double d = tools::distance_km(from, r.position);
        if (nearest == nullptr || d < nearest_d || (d == nearest_d && r.id < nearest->id)) {
            nearest = &r;
            nearest_d = d;
        }
    }
    return nearest;
}

struct Meal {
    TimeWindow window;
    bool pending = true;
    const char* label = "";
};

RoutePoint point(RouteKind kind, Hours start, Hours end, ItemId ref, std::string note) {
    return RoutePoint{kind, start, end, std::move(ref), std::move(note)};
}

Hours hour_on(const DateTime& t, const Date& day) {
    if (t.date == day) return t.hour;
    return t.date < day ? 0.0 : 24.0;
}

} // namespace

void validate(const PlannerConfig& cfg) {
    if (!(cfg.travel_speed_kmh > 0.0) || !std::isfinite(cfg.travel_speed_kmh)) {
        throw Error(ErrorCode::InvalidValue, "travel speed must be positive");
    }
    if (!(cfg.day_start >= 0.0 && cfg.day_start < cfg.day_end && cfg.day_end <= 24.0)) {
        throw Error(ErrorCode::InvalidValue, "day bounds must satisfy 0 <= start < end <= 24");
    }
    if (!(cfg.meal_duration > 0.0)) throw Error(ErrorCode::InvalidValue, "meal duration must be positive");
    if (cfg.restaurant_search_radius_km < 0.0) throw Error(ErrorCode::InvalidValue, "search radius is negative");
    if (cfg.airport_transfer < 0.0) throw Error(ErrorCode::InvalidValue, "airport transfer is negative");
    if (cfg.meal_start_slack < 0.0) throw Error(ErrorCode::InvalidValue, "meal start slack is negative");
    for (const auto& w : {cfg.lunch_window, cfg.dinner_window}) {
        if (w && (w->start() < cfg.day_start || w->end() > cfg.day_end)) {
            throw Error(ErrorCode::InvalidValue, "meal windows must lie inside the day");
        }
    }
    if (cfg.lunch_window && cfg.dinner_window && cfg.lunch_window->end() > cfg.dinner_window->start()) {
        throw Error(ErrorCode::InvalidValue, "lunch window must end before the dinner window starts");
    }
}

PlannerConfig apply_commonsense(PlannerConfig cfg, const CommonsenseRuleSet& rules, const TravelRequest& r) {
    if (!rules.contains(rule_ids::meal_windows)) {
        cfg.lunch_window.reset();
        cfg.dinner_window.reset();
    }
    if (rules.contains(rule_ids::child_pacing)) {
        const bool young = std::any_of(r.children_ages.begin(), r.children_ages.end(), [](int a) { return a < 6; });
        if (young && (cfg.max_visits_per_day == 0 || cfg.max_visits_per_day > 3)) cfg.max_visits_per_day = 3;
    }
    return cfg;
}

std::optional<double> return_time_score(Hours t_left, Hours t_cost) {
    if (t_cost <= t_left) return 1.0;
    return std::nullopt;
}

double visit_time_score(Hours t_arr, Hours t_dep, const TimeWindow& window) {
    if (!(t_dep > t_arr)) throw Error(ErrorCode::PreconditionFailed, "visit must have positive length");
    return overlap_length(t_arr, t_dep, window) / (t_dep - t_arr);
}

double reserve_time_score(Hours t_left, double d_km, double speed_kmh) {
    if (!(t_left > 0.0)) throw Error(ErrorCode::PreconditionFailed, "no time left in the day");
    return 1.0 - std::min(1.0, (d_km / speed_kmh) / t_left);
}

ScoreBreakdown DefaultScoring::score(const PlannerState& state, const PlannerConfig& cfg, const Attraction& a) const {
    ScoreBreakdown s;
    s.d_km = tools::distance_km(state.p_cur, a.position);
    const Hours travel = s.d_km / cfg.travel_speed_kmh;
    s.travel_minutes = travel * 60.0;
    s.t_cost = travel + a.recommend_duration;
    s.t_arr = state.t_cur + travel;
    s.t_dep = s.t_arr + a.recommend_duration;
    const Hours t_left = state.day_end - state.t_cur;

    const auto ret = return_time_score(t_left, s.t_cost);
    s.feasible = ret.has_value();
    s.s_ret = ret.value_or(0.0);
    s.s_opt = visit_time_score(s.t_arr, s.t_dep, a.recommend_window);
    s.s_left = t_left > 0.0 ? reserve_time_score(t_left, s.d_km, cfg.travel_speed_kmh) : 0.0;
    s.s_total = s.s_ret + s.s_opt + s.s_left;
    return s;
}

const ScoringPolicy& default_scoring() {
    static const DefaultScoring policy;
    return policy;
}

ScoreBreakdown score_attraction(const PlannerState& state, const PlannerConfig& cfg, const Attraction& a) {
    return default_scoring().score(state, cfg, a);
}

std::optional<Selection> select_next(const PlannerState& state, const PlannerConfig& cfg,
                                     const ScoringPolicy& policy, const SelectionGate& gate) {
    std::optional<Selection> best;
    for (std::size_t i = 0; i < state.remaining.size(); ++i) {
        const Attraction& a = state.remaining[i];
        ScoreBreakdown s = policy.score(state, cfg, a);
        if (!s.feasible) continue;
        if (gate && !gate(a, s)) continue;
        if (!best || s.s_total > best->score.s_total ||
            (s.s_total == best->score.s_total && tie_preferred(a, s, state.remaining[best->index], best->score))) {
            best = Selection{i, s};
        }
    }
    return best;
}

DayPlan plan_day(PlannerState& state, const PlannerConfig& cfg, const std::vector<Restaurant>& restaurants,
                 const DayRoutines& routines, const ScoringPolicy& policy) {
    DayPlan day;
    day.date = state.date;

    std::vector<Meal> meals;
    if (routines.lunch && cfg.lunch_window) meals.push_back({*cfg.lunch_window, true, "lunch"});
    if (routines.dinner && cfg.dinner_window) meals.push_back({*cfg.dinner_window, true, "dinner"});

    auto back_leg = [&](const GeoPoint& from) {
        return routines.return_to_base ? travel_hours(from, routines.base, cfg) : 0.0;
    };
    // Whether a meal started from `from` at `t` (no later than `latest`) can finish in time.
    auto meal_fits = [&](const GeoPoint& from, Hours t, Hours latest) -> std::optional<const Restaurant*> {
        if (t > latest + kEps) return std::nullopt;
        const Restaurant* r = pick_restaurant(restaurants, from, cfg, routines.cuisine, state.visited_restaurants);
        if (r == nullptr) return nullptr;
        const Hours go = travel_hours(from, r->position, cfg);
        if (t + go + cfg.meal_duration + back_leg(r->position) > state.day_end + kEps) return std::nullopt;
        return r;
    };

    int visits = 0;
    for (;;) {
        // A meal nobody can reach any more is dropped.
        for (auto& m : meals) {
            if (!m.pending) continue;
            auto fit = meal_fits(state.p_cur, std::max(state.t_cur, m.window.start()), m.window.end());
            if (!fit || *fit == nullptr) m.pending = false;
        }

        bool ate = false;
        for (auto& m : meals) {
            if (!m.pending || state.t_cur + kEps < m.window.start()) continue;
            m.pending = false;
            auto fit = meal_fits(state.p_cur, state.t_cur, m.window.end());
            if (fit && *fit != nullptr) {
                const Restaurant& r = **fit;
                const Hours go = travel_hours(state.p_cur, r.position, cfg);
                if (go > kEps) {
                    day.points.push_back(point(RouteKind::transfer, state.t_cur, state.t_cur + go, r.id, r.name));
                }
                const Hours start = state.t_cur + go;
                day.points.push_back(point(RouteKind::meal, start, start + cfg.meal_duration, r.id, m.label));
                state.t_cur = start + cfg.meal_duration;
                state.p_cur = r.position;
                state.visited_restaurants.insert(r.id);
                ate = true;
            }
            break;
        }
        if (ate) continue;

        const Meal* next_meal = nullptr;
        for (const auto& m : meals) {
            if (m.pending) {
                next_meal = &m;
                break;
            }
        }

        std::optional<Selection> sel;
        if (cfg.max_visits_per_day == 0 || visits < cfg.max_visits_per_day) {
            auto gate = [&](const Attraction& a, const ScoreBreakdown& s) {
                if (s.t_dep + back_leg(a.position) > state.day_end + kEps) return false;
                if (cfg.require_window_overlap && !(s.s_opt > 0.0)) return false;
                if (routines.attraction_budget_left != nullptr &&
                    a.price_per_person.cents * routines.party_size > *routines.attraction_budget_left) {
                    return false;
                }
                if (next_meal != nullptr) {
                    // A visit may not hold the meal back past the start slack.
                    const Hours latest =
                        std::min(next_meal->window.end(), next_meal->window.start() + cfg.meal_start_slack);
                    auto fit = meal_fits(a.position, std::max(s.t_dep, next_meal->window.start()), latest);
                    if (!fit || *fit == nullptr) return false;
                }
                return true;
            };
            sel = select_next(state, cfg, policy, gate);
        }

        if (sel) {
            const Attraction a = state.remaining[sel->index];
            const ScoreBreakdown& s = sel->score;
            if (s.t_arr - state.t_cur > kEps) {
                day.points.push_back(point(RouteKind::transfer, state.t_cur, s.t_arr, a.id, a.name));
            }
            day.points.push_back(point(RouteKind::visit, s.t_arr, s.t_dep, a.id, a.name));
            state.t_cur = s.t_dep;
            state.p_cur = a.position;
            state.remaining.erase(state.remaining.begin() + static_cast<std::ptrdiff_t>(sel->index));
            if (routines.attraction_budget_left != nullptr) {
                *routines.attraction_budget_left -= a.price_per_person.cents * routines.party_size;
            }
            ++visits;
            continue;
        }

        // Nothing fits before the next meal: wait for its window to open.
        if (next_meal != nullptr && state.t_cur + kEps < next_meal->window.start()) {
            state.t_cur = next_meal->window.start();
            continue;
        }
        break;
    }

    if (routines.return_to_base) {
        const Hours back = travel_hours(state.p_cur, routines.base, cfg);
        if (back > kEps) {
            day.points.push_back(point(RouteKind::return_to_hotel, state.t_cur, state.t_cur + back, routines.base_ref, ""));
            state.t_cur += back;
            state.p_cur = routines.base;
        }
    }
    return day;
}

FlightPair choose_flights(const std::vector<Flight>& flights) {
    const Flight* out = nullptr;
    const Flight* back = nullptr;
    for (const auto& f : flights) {
        if (f.direction == FlightDirection::outbound) {
            if (out == nullptr || f.round_trip_price.cents < out->round_trip_price.cents ||
                (f.round_trip_price.cents == out->round_trip_price.cents && later(out->arrival_time, f.arrival_time))) {
                out = &f;
            }
        } else {
            if (back == nullptr || f.round_trip_price.cents < back->round_trip_price.cents ||
                (f.round_trip_price.cents == back->round_trip_price.cents &&
                 later(f.departure_time, back->departure_time))) {
                back = &f;
            }
        }
    }
    if (out == nullptr || back == nullptr) throw Error(ErrorCode::NoFlights, "need one outbound and one return flight");
    return FlightPair{*out, *back};
}

std::optional<Hotel> choose_hotel(const std::vector<Hotel>& hotels, std::optional<Money> allowance) {
    const Hotel* best = nullptr;
    for (const auto& h : hotels) {
        if (allowance && h.total_price.cents > allowance->cents) continue;
        if (best == nullptr || h.rating > best->rating ||
            (h.rating == best->rating &&
             (h.total_price.cents < best->total_price.cents ||
              (h.total_price.cents == best->total_price.cents && h.id < best->id)))) {
            best = &h;
        }
    }
    if (best == nullptr) return std::nullopt;
    return *best;
}

Itinerary plan_trip(const TripInputs& in, const PlannerConfig& cfg, const ScoringPolicy& policy) {
    validate(cfg);
    const TravelRequest& r = in.request;
    const Flight& out = in.flights.outbound;
    const Flight& back = in.flights.inbound;
    if (!later(back.departure_time, out.arrival_time)) {
        throw Error(ErrorCode::InfeasibleTrip, "return flight departs before the outbound flight lands");
    }
    if (out.departure_time.date != r.outbound_date || back.departure_time.date != r.return_date) {
        throw Error(ErrorCode::InfeasibleTrip, "flights do not match the trip dates");
    }
    const int nights = r.nights();
    if (nights > 0 && !in.hotel) throw Error(ErrorCode::InfeasibleTrip, "no hotel for a stay with nights");
    if (nights > 0 && in.budget &&
        in.hotel->total_price.cents > in.budget->amount(budget::Category::accommodation).cents) {
        throw Error(ErrorCode::InfeasibleTrip, "hotel exceeds the accommodation allowance");
    }

    std::int64_t fee_left = in.budget ? in.budget->amount(budget::Category::attraction).cents : 0;
    PlannerState state;
    state.remaining = in.attractions;

    DayRoutines base_routines;
    base_routines.cuisine = r.restaurant_preference;
    base_routines.party_size = std::max(1, r.party_size());
    base_routines.attraction_budget_left = in.budget ? &fee_left : nullptr;
    if (in.hotel) {
        base_routines.base = in.hotel->position;
        base_routines.base_ref = in.hotel->id;
    } else {
        base_routines.base = in.city_center;
    }

    auto run = [&](DayPlan& day, Hours start, Hours end, DayRoutines routines) {
        if (end - start <= kEps) return start;
        state.t_cur = start;
        state.day_end = end;
        state.date = day.date;
        DayPlan part = plan_day(state, cfg, in.restaurants, routines, policy);
        day.points.insert(day.points.end(), part.points.begin(), part.points.end());
        return state.t_cur;
    };

    Itinerary it;
    it.trip_id = in.trip_id;
    for (int d = 0; d <= nights; ++d) {
        DayPlan day;
        day.date = add_days(r.outbound_date, d);
        const bool first = d == 0;
        const bool last = d == nights;
        const Hours arrive = hour_on(out.arrival_time, day.date);
        const Hours leave = back.departure_time.hour;

        if (first) {
            day.points.push_back(point(RouteKind::flight, out.departure_time.hour, arrive, out.id, out.flight_number));
        }

        if (nights == 0) {
            // Same-day trip: airport -> city centre -> airport, no hotel.
            const Hours in_town = std::min(arrive + cfg.airport_transfer, leave);
            day.points.push_back(point(RouteKind::transfer, arrive, in_town, "", "the city centre"));
            state.p_cur = in.city_center;
            DayRoutines routines = base_routines;
            routines.return_to_base = false;
            Hours t = run(day, in_town, std::min(cfg.day_end, leave - cfg.airport_transfer), routines);
            t = std::max(t, in_town);
            if (leave - t > kEps) day.points.push_back(point(RouteKind::transfer, t, leave, "", "the airport"));
        } else if (first) {
            Hours settled = arrive + cfg.airport_transfer;
            if (cfg.check_in_routine) {
                settled = std::max(settled, in.hotel->check_in_time);
                day.points.push_back(point(RouteKind::check_in, arrive, settled, in.hotel->id, in.hotel->name));
            } else {
                day.points.push_back(point(RouteKind::transfer, arrive, settled, in.hotel->id, in.hotel->name));
            }
            state.p_cur = in.hotel->position;
            run(day, settled, cfg.day_end, base_routines);
        } else if (last) {
            state.p_cur = in.hotel->position;
            const Hours ready = std::max(0.0, leave - cfg.airport_transfer);
            const Hours start = std::min(cfg.day_start, ready);
            const Hours sight_end = std::min(in.hotel->check_out_time, ready);
            Hours t = std::max(start, run(day, start, sight_end, base_routines));
            if (cfg.check_out_routine && leave - t > kEps) {
                day.points.push_back(point(RouteKind::check_out, t, leave, in.hotel->id, in.hotel->name));
            }
        } else {
            state.p_cur = in.hotel->position;
            run(day, cfg.day_start, cfg.day_end, base_routines);
        }

        if (last) {
            day.points.push_back(point(RouteKind::flight, leave, hour_on(back.arrival_time, day.date), back.id,
                                       back.flight_number));
        }
        it.days.push_back(std::move(day));
    }
    return it;
}

} // namespace travel::route
