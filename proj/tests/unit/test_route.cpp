#include "oracles.hpp"
#include "support.hpp"

#include "travel/core/error.hpp"
#include "travel/route/planner.hpp"

#include <doctest.h>

#include <random>

using namespace travel;
using namespace travel::route;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::Io;
}

const GeoPoint kHome(31.2304, 121.4737);

// Point `km` due north of `p` (along a meridian the chord formula is exact).
GeoPoint north(const GeoPoint& p, double km) {
    return GeoPoint(p.lat() + km / oracle::kRadiusKm * 180.0 / oracle::kPi, p.lon());
}

PlannerConfig no_meals() {
    PlannerConfig cfg;
    cfg.lunch_window.reset();
    cfg.dinner_window.reset();
    return cfg;
}

std::vector<Attraction> random_attractions(std::mt19937_64& rng, int n, const GeoPoint& around) {
    std::uniform_real_distribution<double> off(-0.03, 0.03), start(6.0, 20.0), len(1.0, 6.0), rating(3.0, 5.0);
    std::uniform_int_distribution<int> dur(1, 6), fee(0, 3);
    std::vector<Attraction> out;
    for (int i = 0; i < n; ++i) {
        const double w0 = start(rng);
        Attraction a = support::attraction("a" + std::to_string(i), around.lat() + off(rng), around.lon() + off(rng),
                                           0.5 * dur(rng), w0, std::min(24.0, w0 + len(rng)),
                                           std::round(rating(rng) * 10) / 10);
        a.price_per_person = Money::from_cents(fee(rng) == 0 ? 0 : 500 * fee(rng));
        out.push_back(std::move(a));
    }
    return out;
}

std::vector<Restaurant> random_restaurants(std::mt19937_64& rng, int n, const GeoPoint& around) {
    std::uniform_real_distribution<double> off(-0.03, 0.03), rating(3.0, 5.0);
    std::vector<Restaurant> out;
    for (int i = 0; i < n; ++i) {
        out.push_back(support::restaurant("r" + std::to_string(i), around.lat() + off(rng), around.lon() + off(rng),
                                          std::round(rating(rng) * 10) / 10, i % 3 == 0 ? "Western" : "Chinese"));
    }
    return out;
}

std::vector<RoutePoint> of_kind(const DayPlan& d, RouteKind k) {
    std::vector<RoutePoint> out;
    for (const auto& p : d.points) {
        if (p.kind == k) out.push_back(p);
    }
    return out;
}

Flight flight(std::string id, FlightDirection dir, const char* dep, const char* arr, std::int64_t price) {
    Flight f;
    f.id = id;
    f.flight_number = std::move(id);
    f.direction = dir;
    f.departure_time = parse_date_time(dep);
    f.arrival_time = parse_date_time(arr);
    f.total_duration = static_cast<int>(minutes_between(f.departure_time, f.arrival_time));
    f.round_trip_price = Money::from_cents(price);
    return f;
}

} // namespace

TEST_SUITE("route") {

TEST_CASE("component scores match their definitions") {
    CHECK(return_time_score(2.0, 1.5) == 1.0);
    CHECK(return_time_score(2.0, 2.0) == 1.0);
    CHECK_FALSE(return_time_score(2.0, 2.5).has_value());
    CHECK(visit_time_score(10, 12, TimeWindow(8, 11)) == doctest::Approx(0.5));
    CHECK(visit_time_score(13, 14, TimeWindow(8, 11)) == 0.0);
    CHECK(reserve_time_score(4.0, 5.0, 5.0) == doctest::Approx(0.75));
    CHECK(reserve_time_score(0.5, 5.0, 5.0) == 0.0);
    CHECK(code_of([] { reserve_time_score(0.0, 1.0, 5.0); }) == ErrorCode::PreconditionFailed);
    CHECK(code_of([] { visit_time_score(3, 3, TimeWindow(1, 2)); }) == ErrorCode::PreconditionFailed);
}

TEST_CASE("score breakdown against the oracle") {
    std::mt19937_64 rng(3);
    PlannerConfig cfg;
    for (int i = 0; i < 200; ++i) {
        PlannerState st;
        st.p_cur = kHome;
        st.t_cur = 9.0 + 0.25 * static_cast<double>(i % 36);
        st.day_end = 19.0;
        for (const auto& a : random_attractions(rng, 5, kHome)) {
            const ScoreBreakdown s = score_attraction(st, cfg, a);
            const oracle::Breakdown o = oracle::score(st.p_cur, st.t_cur, st.day_end, cfg.travel_speed_kmh, a);
            CHECK(s.d_km == doctest::Approx(o.d).epsilon(1e-9));
            CHECK(s.travel_minutes == doctest::Approx(o.travel * 60.0).epsilon(1e-9));
            CHECK(s.t_arr == doctest::Approx(o.t_arr).epsilon(1e-9));
            CHECK(s.t_dep == doctest::Approx(o.t_dep).epsilon(1e-9));
            CHECK(s.feasible == o.feasible);
            CHECK(s.s_ret == o.s_ret);
            CHECK(std::abs(s.s_opt - o.s_opt) < 1e-9);
            CHECK(std::abs(s.s_left - o.s_left) < 1e-9);
            CHECK(s.s_total == doctest::Approx(s.s_ret + s.s_opt + s.s_left));
        }
    }
}

TEST_CASE("select_next is the exhaustive argmax") {
    std::mt19937_64 rng(17);
    PlannerConfig cfg;
    int picked = 0;
    for (int i = 0; i < 300; ++i) {
        PlannerState st;
        st.p_cur = kHome;
        st.t_cur = 9.0 + static_cast<double>(i % 9);
        st.day_end = 19.0;
        st.remaining = random_attractions(rng, 6, kHome);
        if (i % 5 == 0) st.remaining[1].rating = st.remaining[0].rating; // exercise the tie order
        std::vector<oracle::Breakdown> scores;
        for (const auto& a : st.remaining) {
            scores.push_back(oracle::score(st.p_cur, st.t_cur, st.day_end, cfg.travel_speed_kmh, a));
        }
        const auto want = oracle::argmax(st.remaining, scores);
        const auto got = select_next(st, cfg);
        REQUIRE(got.has_value() == want.has_value());
        if (got) {
            CHECK(st.remaining[got->index].id == st.remaining[*want].id);
            ++picked;
        }
    }
    CHECK(picked > 200);
}

TEST_CASE("ties fall back to rating, distance, then id") {
    PlannerConfig cfg;
    PlannerState st;
    st.p_cur = kHome;
    st.t_cur = 10;
    st.day_end = 19;
    // Same spot, same window: identical totals.
    st.remaining = {support::attraction("b", 31.24, 121.47, 1, 9, 18, 4.0),
                    support::attraction("a", 31.24, 121.47, 1, 9, 18, 4.0),
                    support::attraction("c", 31.24, 121.47, 1, 9, 18, 4.5)};
    CHECK(st.remaining[select_next(st, cfg)->index].id == "c");
    st.remaining.pop_back();
    CHECK(st.remaining[select_next(st, cfg)->index].id == "a");
    const auto gate = [](const Attraction& a, const ScoreBreakdown&) { return a.id != "a"; };
    CHECK(st.remaining[select_next(st, cfg, default_scoring(), gate)->index].id == "b");
}

TEST_CASE("an evening sight ten minutes away fits after dinner") {
    PlannerConfig cfg;
    PlannerState st;
    st.p_cur = kHome;
    st.t_cur = 18.0;
    st.day_end = 19.0;
    const GeoPoint bridge = north(kHome, 5.0 * 10.0 / 60.0);
    Attraction a = support::attraction("9", bridge.lat(), bridge.lon(), 0.5, 18, 22, 4.5);
    st.remaining = {a};
    DayRoutines r;
    r.base = kHome;
    r.lunch = false;
    r.dinner = false;
    const DayPlan d = plan_day(st, cfg, {}, r);
    REQUIRE(d.points.size() == 3);
    CHECK(d.points[0].kind == RouteKind::transfer);
    CHECK(format_clock(d.points[0].start) == "18:00");
    CHECK(format_clock(d.points[0].end) == "18:10");
    CHECK(d.points[1].kind == RouteKind::visit);
    CHECK(d.points[1].item_ref == "9");
    CHECK(format_clock(d.points[1].start) == "18:10");
    CHECK(format_clock(d.points[1].end) == "18:40");
    CHECK(d.points[2].kind == RouteKind::return_to_hotel);
    CHECK(format_clock(d.points[2].end) == "18:50");
    CHECK(st.remaining.empty());
}

TEST_CASE("no attractions leaves only the routines") {
    PlannerConfig cfg;
    PlannerState st;
    st.p_cur = kHome;
    st.t_cur = 9.0;
    st.day_end = 19.0;
    const Restaurant near = support::restaurant("r1", north(kHome, 0.5).lat(), kHome.lon());
    const Restaurant other = support::restaurant("r2", north(kHome, 0.8).lat(), kHome.lon(), 3.5);
    DayRoutines r;
    r.base = kHome;
    const DayPlan d = plan_day(st, cfg, {near, other}, r);
    const auto meals = of_kind(d, RouteKind::meal);
    REQUIRE(meals.size() == 2);
    CHECK(meals[0].start == doctest::Approx(11.1));
    CHECK(meals[0].item_ref == "r1");
    CHECK(meals[1].item_ref == "r2"); // no repeats
    CHECK(meals[1].start >= 16.0);
    CHECK(of_kind(d, RouteKind::visit).empty());
    CHECK(check_day_ordering(d).empty());
}

TEST_CASE("a meal-free day follows the greedy oracle") {
    std::mt19937_64 rng(23);
    const PlannerConfig cfg = no_meals();
    for (int trial = 0; trial < 100; ++trial) {
        PlannerState st;
        st.p_cur = kHome;
        st.t_cur = 9.0;
        st.day_end = 19.0;
        st.remaining = random_attractions(rng, 5, kHome);

        // Expected sequence, rebuilt from the oracle score.
        std::vector<Attraction> left = st.remaining;
        GeoPoint p = kHome;
        double t = 9.0;
        std::vector<std::pair<std::string, double>> want;
        for (;;) {
            std::vector<oracle::Breakdown> sc;
            for (const auto& a : left) {
                auto b = oracle::score(p, t, 19.0, 5.0, a);
                const double back = oracle::chord_distance_km(a.position, kHome) / 5.0;
                if (b.t_dep + back > 19.0 + 1e-9 || !(b.s_opt > 0)) b.feasible = false;
                sc.push_back(b);
            }
            auto pick = oracle::argmax(left, sc);
            if (!pick) break;
            want.emplace_back(left[*pick].id, sc[*pick].t_arr);
            t = sc[*pick].t_dep;
            p = left[*pick].position;
            left.erase(left.begin() + static_cast<std::ptrdiff_t>(*pick));
        }

        DayRoutines r;
        r.base = kHome;
        const auto visits = of_kind(plan_day(st, cfg, {}, r), RouteKind::visit);
        REQUIRE(visits.size() == want.size());
        for (std::size_t i = 0; i < want.size(); ++i) {
            CHECK(visits[i].item_ref == want[i].first);
            CHECK(visits[i].start == doctest::Approx(want[i].second).epsilon(1e-9));
        }
    }
}

TEST_CASE("randomized days stay feasible") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> start(8.0, 15.0);
    const PlannerConfig cfg;
    for (int trial = 0; trial < 300; ++trial) {
        PlannerState st;
        st.p_cur = kHome;
        st.t_cur = start(rng);
        st.day_end = 19.0;
        st.remaining = random_attractions(rng, 8, kHome);
        const auto all = st.remaining;
        const auto rest = random_restaurants(rng, 4, kHome);
        DayRoutines r;
        r.base = kHome;
        r.cuisine = "Chinese";
        const double t0 = st.t_cur;
        const DayPlan d = plan_day(st, cfg, rest, r);

        CHECK(check_day_ordering(d).empty());
        std::set<std::string> seen;
        for (const auto& p : d.points) {
            CHECK(p.start >= t0 - 1e-9);
            CHECK(p.end <= 19.0 + 1e-9);
            CHECK(p.end >= p.start);
        }
        for (const auto& v : of_kind(d, RouteKind::visit)) {
            CHECK(seen.insert(v.item_ref).second);
            auto a = std::find_if(all.begin(), all.end(), [&](const Attraction& x) { return x.id == v.item_ref; });
            REQUIRE(a != all.end());
            CHECK(oracle::overlap(v.start, v.end, a->recommend_window.start(), a->recommend_window.end()) > 0);
        }
        std::set<std::string> eaten;
        for (std::size_t i = 0; i < d.points.size(); ++i) {
            const auto& m = d.points[i];
            if (m.kind != RouteKind::meal) continue;
            const TimeWindow w = m.note == "lunch" ? *cfg.lunch_window : *cfg.dinner_window;
            // Leaving for the meal happens inside its window.
            const bool walked = i > 0 && d.points[i - 1].kind == RouteKind::transfer &&
                                d.points[i - 1].item_ref == m.item_ref;
            const double leave = walked ? d.points[i - 1].start : m.start;
            CHECK(leave >= w.start() - 1e-9);
            CHECK(leave <= w.end() + 1e-9);
            CHECK(eaten.insert(m.item_ref).second);
        }
        CHECK(st.remaining.size() + seen.size() == all.size());
        // The day ends at base.
        if (!d.points.empty() && d.points.back().kind != RouteKind::return_to_hotel) {
            CHECK(oracle::chord_distance_km(st.p_cur, kHome) < 1e-9);
        }
    }
}

TEST_CASE("a zero fee allowance plans exactly like the free subset") {
    std::mt19937_64 rng(41);
    const PlannerConfig cfg = no_meals();
    for (int trial = 0; trial < 100; ++trial) {
        const auto items = random_attractions(rng, 7, kHome);
        PlannerState a;
        a.p_cur = kHome;
        a.remaining = items;
        std::int64_t zero = 0;
        DayRoutines r;
        r.base = kHome;
        r.attraction_budget_left = &zero;
        r.party_size = 3;
        const DayPlan with_budget = plan_day(a, cfg, {}, r);

        PlannerState b;
        b.p_cur = kHome;
        std::copy_if(items.begin(), items.end(), std::back_inserter(b.remaining),
                     [](const Attraction& x) { return x.price_per_person.is_free(); });
        DayRoutines open;
        open.base = kHome;
        const DayPlan free_only = plan_day(b, cfg, {}, open);
        CHECK(with_budget == free_only);
        CHECK(zero == 0);
    }
}

TEST_CASE("the fee allowance is charged per person") {
    PlannerState st;
    st.p_cur = kHome;
    Attraction a = support::attraction("x", north(kHome, 0.3).lat(), kHome.lon(), 1, 9, 12);
    a.price_per_person = Money::from_cents(1000);
    st.remaining = {a};
    std::int64_t left = 3500;
    DayRoutines r;
    r.base = kHome;
    r.party_size = 3;
    r.attraction_budget_left = &left;
    CHECK(of_kind(plan_day(st, no_meals(), {}, r), RouteKind::visit).size() == 1);
    CHECK(left == 500);
}

TEST_CASE("visit cap and commonsense adjustments") {
    TravelRequest req = support::form(0); // one three-year-old
    CommonsenseRuleSet rules;
    rules.add({std::string(rule_ids::child_pacing), "young child", "cap visits", RuleSource::seed});
    PlannerConfig cfg = apply_commonsense({}, rules, req);
    CHECK(cfg.max_visits_per_day == 3);
    CHECK_FALSE(cfg.lunch_window.has_value()); // meal-windows rule absent
    rules.add({std::string(rule_ids::meal_windows), "always", "meals", RuleSource::seed});
    cfg = apply_commonsense({}, rules, req);
    CHECK(cfg.lunch_window.has_value());
    req.children_ages = {9};
    CHECK(apply_commonsense({}, rules, req).max_visits_per_day == 0);

    std::mt19937_64 rng(8);
    PlannerConfig capped = no_meals();
    capped.max_visits_per_day = 2;
    PlannerState st;
    st.p_cur = kHome;
    st.remaining = random_attractions(rng, 10, kHome);
    DayRoutines r;
    r.base = kHome;
    CHECK(of_kind(plan_day(st, capped, {}, r), RouteKind::visit).size() <= 2);
}

TEST_CASE("config validation") {
    PlannerConfig cfg;
    CHECK_NOTHROW(validate(cfg));
    cfg.travel_speed_kmh = 0;
    CHECK(code_of([&] { validate(cfg); }) == ErrorCode::InvalidValue);
    cfg = {};
    cfg.lunch_window = TimeWindow(11, 17);
    CHECK(code_of([&] { validate(cfg); }) == ErrorCode::InvalidValue);
    cfg = {};
    cfg.dinner_window = TimeWindow(18, 21);
    CHECK(code_of([&] { validate(cfg); }) == ErrorCode::InvalidValue);
    cfg = {};
    cfg.meal_start_slack = -1;
    CHECK(code_of([&] { validate(cfg); }) == ErrorCode::InvalidValue);
}

TEST_CASE("flight choice prefers the cheapest tier, early arrival and late return") {
    const auto p = support::provider();
    const auto r = support::form(0);
    const FlightPair f = choose_flights(p->flights({"beijing", "shanghai", r.outbound_date, r.return_date}));
    CHECK(f.outbound.flight_number == "CZ 8879");
    CHECK(f.inbound.flight_number == "CZ 8888");
    CHECK(format_clock(f.inbound.departure_time.hour) == "15:30");
    CHECK(code_of([] { choose_flights({}); }) == ErrorCode::NoFlights);
    const Flight only = flight("X1", FlightDirection::outbound, "2024-08-06 08:00", "2024-08-06 10:00", 100);
    CHECK(code_of([&] { choose_flights({only}); }) == ErrorCode::NoFlights);
}

TEST_CASE("hotel choice") {
    auto hotel = [](std::string id, double rating, std::int64_t total) {
        Hotel h;
        h.id = std::move(id);
        h.rating = rating;
        h.total_price = Money::from_cents(total);
        return h;
    };
    const std::vector<Hotel> hs = {hotel("a", 4.0, 300), hotel("b", 4.8, 900), hotel("c", 4.8, 700),
                                   hotel("d", 3.0, 100)};
    CHECK(choose_hotel(hs, std::nullopt)->id == "c");
    CHECK(choose_hotel(hs, Money::from_cents(500))->id == "a");
    CHECK(choose_hotel(hs, Money::from_cents(150))->id == "d");
    CHECK_FALSE(choose_hotel(hs, Money::from_cents(50)).has_value());
}

TEST_CASE("same-day trips go airport, city, airport") {
    TripInputs in;
    in.request = support::form(0);
    in.request.return_date = in.request.outbound_date;
    in.flights.outbound = flight("O", FlightDirection::outbound, "2024-08-06 07:00", "2024-08-06 08:30", 100);
    in.flights.inbound = flight("I", FlightDirection::return_trip, "2024-08-06 20:00", "2024-08-06 22:00", 100);
    in.city_center = kHome;
    in.attractions = {support::attraction("x", north(kHome, 0.5).lat(), kHome.lon(), 1.0, 9, 18)};
    const Itinerary it = plan_trip(in, no_meals());
    REQUIRE(it.days.size() == 1);
    const auto& pts = it.days[0].points;
    CHECK(pts.front().kind == RouteKind::flight);
    CHECK(pts.back().kind == RouteKind::flight);
    CHECK(pts.back().start == 20.0);
    CHECK(of_kind(it.days[0], RouteKind::visit).size() == 1);
    CHECK(of_kind(it.days[0], RouteKind::check_in).empty());
    CHECK(check_day_ordering(it.days[0]).empty());
}

TEST_CASE("trip-level infeasibility") {
    TripInputs in;
    in.request = support::form(0);
    in.flights.outbound = flight("O", FlightDirection::outbound, "2024-08-06 08:00", "2024-08-06 10:10", 100);
    in.flights.inbound = flight("I", FlightDirection::return_trip, "2024-08-09 15:30", "2024-08-09 17:45", 100);
    in.city_center = kHome;
    CHECK(code_of([&] { plan_trip(in); }) == ErrorCode::InfeasibleTrip); // nights without a hotel
    Hotel h;
    h.id = "h";
    h.position = kHome;
    h.total_price = Money::from_cents(50000);
    in.hotel = h;
    const Itinerary it = plan_trip(in);
    CHECK(it.days.size() == 4);
    CHECK(of_kind(it.days[0], RouteKind::check_in).size() == 1);
    CHECK(of_kind(it.days[3], RouteKind::check_out).size() == 1);
    for (const auto& d : it.days) CHECK(check_day_ordering(d).empty());

    in.budget = budget::allocate_budget(Money::from_cents(100000), in.request, {});
    CHECK(code_of([&] { plan_trip(in); }) == ErrorCode::InfeasibleTrip); // hotel over the allowance
    in.budget.reset();
    in.flights.inbound.departure_time = parse_date_time("2024-08-06 09:00");
    CHECK(code_of([&] { plan_trip(in); }) == ErrorCode::InfeasibleTrip);
}

} // TEST_SUITE
