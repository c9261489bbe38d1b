#include "travel/domain/json_io.hpp"

#include "travel/core/error.hpp"

namespace travel {

void to_json(nlohmann::json& j, const GeoPoint& p) {
    j = nlohmann::json{{"lat", p.lat()}, {"lon", p.lon()}};
}

void from_json(const nlohmann::json& j, GeoPoint& p) {
    p = GeoPoint(j.at("lat").get<double>(), j.at("lon").get<double>());
}

void to_json(nlohmann::json& j, const TimeWindow& w) {
    j = nlohmann::json::array({w.start(), w.end()});
}

void from_json(const nlohmann::json& j, TimeWindow& w) {
    if (j.is_string()) {
        w = parse_time_window(j.get<std::string>());
        return;
    }
    w = TimeWindow(j.at(0).get<double>(), j.at(1).get<double>());
}

void to_json(nlohmann::json& j, const Money& m) {
    j = format_money(m);
}

void from_json(const nlohmann::json& j, Money& m) {
    if (j.is_number()) {
        m = Money::from_units(j.get<double>());
        return;
    }
    m = parse_money(j.get<std::string>());
}

void to_json(nlohmann::json& j, const DateTime& t) {
    j = format_date_time(t);
}

void from_json(const nlohmann::json& j, DateTime& t) {
    t = parse_date_time(j.get<std::string>());
}

void to_json(nlohmann::json& j, const Attraction& a) {
    j = nlohmann::json{{"id", a.id},
                       {"index", a.index},
                       {"name", a.name},
                       {"position", a.position},
                       {"price_per_person", a.price_per_person},
                       {"rating", a.rating},
                       {"description", a.description},
                       {"recommend_duration", a.recommend_duration},
                       {"recommend_window", a.recommend_window},
                       {"recommend_reason", a.recommend_reason},
                       {"types", a.types},
                       {"address", a.address},
                       {"image", a.image},
                       {"phone", a.phone}};
}

void from_json(const nlohmann::json& j, Attraction& a) {
    a.id = j.at("id").get<std::string>();
    a.index = j.value("index", 0);
    a.name = j.at("name").get<std::string>();
    a.position = j.at("position").get<GeoPoint>();
    a.price_per_person = j.at("price_per_person").get<Money>();
    a.rating = j.at("rating").get<double>();
    a.description = j.value("description", "");
    a.recommend_duration = j.at("recommend_duration").get<double>();
    a.recommend_window = j.at("recommend_window").get<TimeWindow>();
    a.recommend_reason = j.value("recommend_reason", "");
    a.types = j.value("types", std::vector<std::string>{});
    a.address = j.value("address", "");
    a.image = j.value("image", "");
    a.phone = j.value("phone", "");
}

void to_json(nlohmann::json& j, const Hotel& h) {
    j = nlohmann::json{{"id", h.id},
                       {"name", h.name},
                       {"address", h.address},
                       {"position", h.position},
                       {"price_per_night", h.price_per_night},
                       {"total_price", h.total_price},
                       {"rating", h.rating},
                       {"check_in_time", h.check_in_time},
                       {"check_out_time", h.check_out_time},
                       {"amenities", h.amenities},
                       {"image", h.image}};
}

void from_json(const nlohmann::json& j, Hotel& h) {
    h.id = j.at("id").get<std::string>();
    h.name = j.at("name").get<std::string>();
    h.address = j.value("address", "");
    h.position = j.at("position").get<GeoPoint>();
    h.price_per_night = j.at("price_per_night").get<Money>();
    h.total_price = j.at("total_price").get<Money>();
    h.rating = j.at("rating").get<double>();
    h.check_in_time = j.at("check_in_time").get<double>();
    h.check_out_time = j.at("check_out_time").get<double>();
    h.amenities = j.value("amenities", std::vector<std::string>{});
    h.image = j.value("image", "");
}

void to_json(nlohmann::json& j, const Restaurant& r) {
    j = nlohmann::json{{"id", r.id},         {"name", r.name},       {"address", r.address},
                       {"position", r.position}, {"price_band", r.price_band}, {"rating", r.rating},
                       {"cuisine", r.cuisine}, {"phone", r.phone}};
}

void from_json(const nlohmann::json& j, Restaurant& r) {
    r.id = j.at("id").get<std::string>();
    r.name = j.at("name").get<std::string>();
    r.address = j.value("address", "");
    r.position = j.at("position").get<GeoPoint>();
    r.price_band = j.value("price_band", 1);
    r.rating = j.at("rating").get<double>();
    r.cuisine = j.value("cuisine", "");
    r.phone = j.value("phone", "");
}

void to_json(nlohmann::json& j, const Airport& a) {
    j = nlohmann::json{{"name", a.name}, {"id", a.code}};
}

void from_json(const nlohmann::json& j, Airport& a) {
    a.name = j.value("name", "");
    a.code = j.value("id", "");
}

void to_json(nlohmann::json& j, const Flight& f) {
    j = nlohmann::json{{"id", f.id},
                       {"flight_number", f.flight_number},
                       {"outbound_or_return", f.direction == FlightDirection::outbound ? "outbound" : "return"},
                       {"round_trip_price", f.round_trip_price},
                       {"departure_time", f.departure_time},
                       {"arrival_time", f.arrival_time},
                       {"total_duration", f.total_duration},
                       {"departure_airport", f.departure_airport},
                       {"arrival_airport", f.arrival_airport},
                       {"airline", f.airline},
                       {"airplane", f.airplane},
                       {"travel_class", f.travel_class},
                       {"type", f.type}};
}

void from_json(const nlohmann::json& j, Flight& f) {
    f.id = j.at("id").get<std::string>();
    f.flight_number = j.at("flight_number").get<std::string>();
    f.direction = j.at("outbound_or_return").get<std::string>() == "return" ? FlightDirection::return_trip
                                                                            : FlightDirection::outbound;
    f.round_trip_price = j.at("round_trip_price").get<Money>();
    f.departure_time = j.at("departure_time").get<DateTime>();
    f.arrival_time = j.at("arrival_time").get<DateTime>();
    f.total_duration = j.at("total_duration").get<int>();
    f.departure_airport = j.value("departure_airport", Airport{});
    f.arrival_airport = j.value("arrival_airport", Airport{});
    f.airline = j.value("airline", "");
    f.airplane = j.value("airplane", "");
    f.travel_class = j.value("travel_class", "");
    f.type = j.value("type", "");
}

void to_json(nlohmann::json& j, const CityInfo& c) {
    j = nlohmann::json{{"city_name", c.city_name},
                       {"description", c.description},
                       {"weather",
                        {{"celsius", c.weather.celsius},
                         {"fahrenheit", c.weather.fahrenheit},
                         {"conditions", c.weather.conditions}}},
                       {"center", c.center}};
}

void from_json(const nlohmann::json& j, CityInfo& c) {
    c.city_name = j.at("city_name").get<std::string>();
    c.description = j.value("description", "");
    if (auto w = j.find("weather"); w != j.end() && w->is_object()) {
        c.weather.celsius = w->value("celsius", 0);
        c.weather.fahrenheit = w->value("fahrenheit", 0);
        c.weather.conditions = w->value("conditions", "");
    }
    c.center = j.at("center").get<GeoPoint>();
}

void to_json(nlohmann::json& j, const SoftConstraintSet& s) {
    j = nlohmann::json::object();
    if (s.spending_level) j["spending_level"] = to_string(*s.spending_level);
    j["attraction_preference"] = s.attraction_preference;
    j["restaurant_preference"] = s.restaurant_preference;
    j["extra"] = s.extra;
}

void from_json(const nlohmann::json& j, SoftConstraintSet& s) {
    s = SoftConstraintSet{};
    if (auto it = j.find("spending_level"); it != j.end() && it->is_string()) {
        s.spending_level = parse_spending_level(it->get<std::string>());
    }
    s.attraction_preference = j.value("attraction_preference", "");
    s.restaurant_preference = j.value("restaurant_preference", "");
    s.extra = j.value("extra", std::map<std::string, std::string>{});
}

void to_json(nlohmann::json& j, const CommonsenseRule& r) {
    j = nlohmann::json{{"id", r.id},
                       {"condition", r.condition},
                       {"effect", r.effect},
                       {"source", r.source == RuleSource::seed ? "seed" : "learned"}};
}

void from_json(const nlohmann::json& j, CommonsenseRule& r) {
    r.id = j.at("id").get<std::string>();
    r.condition = j.value("condition", "");
    r.effect = j.value("effect", "");
    r.source = j.value("source", "seed") == "learned" ? RuleSource::learned : RuleSource::seed;
}

void to_json(nlohmann::json& j, const InsightRecord& r) {
    j = nlohmann::json{{"user_id", r.user_id},         {"kind", to_string(r.kind)},
                       {"structured", r.structured},   {"narrative", r.narrative},
                       {"scenario_id", r.scenario_id}, {"created_at", r.created_at}};
}

void from_json(const nlohmann::json& j, InsightRecord& r) {
    r.user_id = j.value("user_id", "");
    r.kind = parse_insight_kind(j.value("kind", "soft"));
    r.structured = j.value("structured", std::map<std::string, std::string>{});
    r.narrative = j.value("narrative", "");
    r.scenario_id = j.value("scenario_id", "");
    r.created_at = j.value("created_at", std::int64_t{0});
}

void to_json(nlohmann::json& j, const ScoreBreakdown& s) {
    j = nlohmann::json{{"d_km", s.d_km},       {"travel_minutes", s.travel_minutes},
                       {"t_cost", s.t_cost},   {"t_arr", s.t_arr},
                       {"t_dep", s.t_dep},     {"feasible", s.feasible},
                       {"s_ret", s.s_ret},     {"s_opt", s.s_opt},
                       {"s_left", s.s_left},   {"s_total", s.s_total}};
}

void from_json(const nlohmann::json& j, ScoreBreakdown& s) {
    s.d_km = j.at("d_km").get<double>();
    s.travel_minutes = j.at("travel_minutes").get<double>();
    s.t_cost = j.at("t_cost").get<double>();
    s.t_arr = j.at("t_arr").get<double>();
    s.t_dep = j.at("t_dep").get<double>();
    s.feasible = j.at("feasible").get<bool>();
    s.s_ret = j.at("s_ret").get<double>();
    s.s_opt = j.at("s_opt").get<double>();
    s.s_left = j.at("s_left").get<double>();
    s.s_total = j.at("s_total").get<double>();
}

void to_json(nlohmann::json& j, const RoutePoint& p) {
    j = nlohmann::json{{"kind", to_string(p.kind)},
                       {"start", p.start},
                       {"end", p.end},
                       {"start_clock", format_clock(p.start)},
                       {"end_clock", format_clock(p.end)},
                       {"item_ref", p.item_ref},
                       {"note", p.note}};
}

void from_json(const nlohmann::json& j, RoutePoint& p) {
    p.kind = parse_route_kind(j.at("kind").get<std::string>());
    p.start = j.at("start").get<double>();
    p.end = j.at("end").get<double>();
    p.item_ref = j.value("item_ref", "");
    p.note = j.value("note", "");
}

void to_json(nlohmann::json& j, const DayPlan& d) {
    j = nlohmann::json{{"date", format_date(d.date)}, {"points", d.points}};
}

void from_json(const nlohmann::json& j, DayPlan& d) {
    d.date = parse_date(j.at("date").get<std::string>());
    d.points = j.at("points").get<std::vector<RoutePoint>>();
}

void to_json(nlohmann::json& j, const Itinerary& it) {
    j = nlohmann::json{{"trip_id", it.trip_id}, {"days", it.days}};
}

void from_json(const nlohmann::json& j, Itinerary& it) {
    it.trip_id = j.at("trip_id").get<std::string>();
    it.days = j.at("days").get<std::vector<DayPlan>>();
}

void to_json(nlohmann::json& j, const TravelRequest& r) {
    j = nlohmann::json(to_form_json(r));
}

void from_json(const nlohmann::json& j, TravelRequest& r) {
    r = parse_input_form(j).request;
}

void to_json(nlohmann::json& j, const Violation& v) {
    j = nlohmann::json{{"code", to_string(v.code)}, {"message", v.message}};
}

} // namespace travel
