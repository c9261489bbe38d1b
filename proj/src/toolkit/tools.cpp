#include "travel/toolkit/tools.hpp"

#include "travel/core/error.hpp"
#include "travel/toolkit/geo_distance.hpp"
#include "travel/toolkit/time_tool.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <utility>

namespace travel::tools {
namespace {

struct ToolInfo {
    ToolKind kind;
    std::string_view name;
    std::string_view function;
};

constexpr std::array<ToolInfo, 10> kToolInfo = {{
    {ToolKind::city, "city", "get_city_info"},
    {ToolKind::flight, "flight", "get_flight_info"},
    {ToolKind::hotel, "hotel", "get_hotel_info"},
    {ToolKind::restaurant, "restaurant", "get_restaurant_info"},
    {ToolKind::sight, "sight", "get_sight_info"},
    {ToolKind::tip, "tip", "get_tip_info"},
    {ToolKind::direction, "direction", "get_direction_info"},
    {ToolKind::position, "position", "get_position_info"},
    {ToolKind::distance, "distance", "get_distance_info"},
    {ToolKind::time, "time", "get_time_info"},
}};

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

double number_param(const ToolQuery& q, const std::string& key) {
    const std::string& text = q.params.at(key);
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size()) {
        throw Error(ErrorCode::BadField, "parameter '" + key + "' must be numeric, got '" + text + "'");
    }
    return v;
}

std::optional<std::string> optional_param(const ToolQuery& q, const std::string& key) {
    auto it = q.params.find(key);
    if (it == q.params.end() || it->second.empty()) return std::nullopt;
    return it->second;
}

GeoPoint point_param(const ToolQuery& q, const std::string& prefix) {
    return GeoPoint(number_param(q, prefix + "_lat"), number_param(q, prefix + "_lon"));
}

} // namespace

std::string_view to_string(ToolKind kind) {
    for (const auto& info : kToolInfo) {
        if (info.kind == kind) return info.name;
    }
    return "city";
}

std::string_view function_name(ToolKind kind) {
    for (const auto& info : kToolInfo) {
        if (info.kind == kind) return info.function;
    }
    return "get_city_info";
}

ToolKind parse_tool_kind(std::string_view text) {
    for (const auto& info : kToolInfo) {
        if (info.name == text || info.function == text) return info.kind;
    }
    throw Error(ErrorCode::BadField, "unknown tool '" + std::string(text) + "'");
}

const std::vector<std::string>& required_params(ToolKind kind) {
    static const std::map<ToolKind, std::vector<std::string>> table = {
        {ToolKind::city, {"city"}},
        {ToolKind::flight, {"from", "to", "outbound"}},
        {ToolKind::hotel, {"city"}},
        {ToolKind::restaurant, {"city"}},
        {ToolKind::sight, {"city"}},
        {ToolKind::tip, {"city"}},
        {ToolKind::direction, {"from_lat", "from_lon", "to_lat", "to_lon"}},
        {ToolKind::position, {"city", "name"}},
        {ToolKind::distance, {"from_lat", "from_lon", "to_lat", "to_lon"}},
        {ToolKind::time, {"t", "delta"}},
    };
    return table.at(kind);
}

bool is_arithmetic(ToolKind kind) {
    return kind == ToolKind::distance || kind == ToolKind::time;
}

FixtureProvider::FixtureProvider(std::shared_ptr<const Catalog> catalog, double speed_kmh)
    : catalog_(std::move(catalog)), speed_kmh_(speed_kmh) {
    if (!catalog_) throw Error(ErrorCode::InvalidValue, "fixture provider needs a catalog");
    if (!(speed_kmh_ > 0.0)) throw Error(ErrorCode::InvalidValue, "direction speed must be positive");
}

const CityPack& FixtureProvider::pack(const std::string& city) const {
    const CityPack* p = catalog_->find(lower(city));
    if (p == nullptr) throw Error(ErrorCode::NoResults, "no fixture data for city '" + city + "'");
    return *p;
}

CityInfo FixtureProvider::city_info(const std::string& city) const {
    return pack(city).info;
}

std::vector<Flight> FixtureProvider::flights(const FlightQuery& q) const {
    const CityPack& dest = pack(q.to);
    std::vector<Flight> out;
    auto it = dest.flights.find(lower(q.from));
    if (it == dest.flights.end()) return out;
    for (const auto& f : it->second) {
        const bool outbound_match = f.direction == FlightDirection::outbound && f.departure_time.date == q.outbound;
        const bool return_match =
            q.return_date && f.direction == FlightDirection::return_trip && f.departure_time.date == *q.return_date;
        if (outbound_match || return_match) out.push_back(f);
    }
    std::stable_sort(out.begin(), out.end(), [](const Flight& a, const Flight& b) {
        if (a.departure_time.date != b.departure_time.date) return a.departure_time.date < b.departure_time.date;
        return a.departure_time.hour < b.departure_time.hour;
    });
    return out;
}

std::vector<Hotel> FixtureProvider::hotels(const HotelQuery& q) const {
    std::vector<Hotel> out = pack(q.city).hotels;
    if (q.check_in && q.check_out) {
        const int nights = std::max(0, days_between(*q.check_in, *q.check_out));
        for (auto& h : out) h.total_price = Money{h.price_per_night.cents * nights, h.price_per_night.currency};
    }
    return out;
}

std::vector<Restaurant> FixtureProvider::restaurants(const std::string& city, const std::string& cuisine) const {
    const auto& all = pack(city).restaurants;
    if (cuisine.empty()) return all;
    std::vector<Restaurant> out;
    const std::string want = lower(cuisine);
    std::copy_if(all.begin(), all.end(), std::back_inserter(out),
                 [&](const Restaurant& r) { return lower(r.cuisine) == want; });
    return out;
}

std::vector<Attraction> FixtureProvider::sights(const std::string& city) const {
    return pack(city).sights;
}

std::vector<std::string> FixtureProvider::tips(const std::string& city) const {
    return pack(city).tips;
}

DirectionInfo FixtureProvider::direction(const GeoPoint& from, const GeoPoint& to) const {
    const double d = distance_km(from, to);
    return DirectionInfo{d, d / speed_kmh_, "straight_line"};
}

GeoPoint FixtureProvider::position(const std::string& city, const std::string& name) const {
    const CityPack& p = pack(city);
    const std::string want = lower(name);
    for (const auto& a : p.sights) {
        if (lower(a.name) == want) return a.position;
    }
    for (const auto& h : p.hotels) {
        if (lower(h.name) == want) return h.position;
    }
    for (const auto& r : p.restaurants) {
        if (lower(r.name) == want) return r.position;
    }
    if (lower(p.key) == want || lower(p.info.city_name) == want) return p.info.center;
    throw Error(ErrorCode::NoResults, "no position for '" + name + "' in " + city);
}

ToolResult call_tool(const ToolQuery& q, const DataProvider& provider) {
    for (const auto& key : required_params(q.tool)) {
        if (!q.params.contains(key)) {
            throw Error(ErrorCode::MissingParam, std::string(function_name(q.tool)) + " requires '" + key + "'");
        }
    }
    switch (q.tool) {
    case ToolKind::city:
        return provider.city_info(q.params.at("city"));
    case ToolKind::flight: {
        FlightQuery fq{q.params.at("from"), q.params.at("to"), parse_date(q.params.at("outbound")), std::nullopt};
        if (auto r = optional_param(q, "return")) fq.return_date = parse_date(*r);
        return provider.flights(fq);
    }
    case ToolKind::hotel: {
        HotelQuery hq{q.params.at("city"), std::nullopt, std::nullopt};
        if (auto d = optional_param(q, "check_in")) hq.check_in = parse_date(*d);
        if (auto d = optional_param(q, "check_out")) hq.check_out = parse_date(*d);
        return provider.hotels(hq);
    }
    case ToolKind::restaurant:
        return provider.restaurants(q.params.at("city"), optional_param(q, "cuisine").value_or(""));
    case ToolKind::sight:
        return provider.sights(q.params.at("city"));
    case ToolKind::tip:
        return provider.tips(q.params.at("city"));
    case ToolKind::direction:
        return provider.direction(point_param(q, "from"), point_param(q, "to"));
    case ToolKind::position:
        return provider.position(q.params.at("city"), q.params.at("name"));
    case ToolKind::distance:
        return distance_km(point_param(q, "from"), point_param(q, "to"));
    case ToolKind::time:
        return time_shift(number_param(q, "t"), number_param(q, "delta"));
    }
    throw Error(ErrorCode::BadField, "unhandled tool");
}

void Toolkit::register_provider(ToolKind kind, std::shared_ptr<const DataProvider> provider) {
    providers_[kind] = std::move(provider);
}

void Toolkit::register_all(const std::shared_ptr<const DataProvider>& provider) {
    for (ToolKind kind : kAllTools) {
        if (!is_arithmetic(kind)) providers_[kind] = provider;
    }
}

bool Toolkit::has_provider(ToolKind kind) const {
    auto it = providers_.find(kind);
    return it != providers_.end() && it->second != nullptr;
}

const DataProvider& Toolkit::provider(ToolKind kind) const {
    if (!has_provider(kind)) {
        throw Error(ErrorCode::ProviderUnavailable, "no provider registered for " + std::string(function_name(kind)));
    }
    return *providers_.at(kind);
}

ToolResult Toolkit::call(const ToolQuery& q) const {
    if (is_arithmetic(q.tool)) {
        // Arithmetic tools need no data source; any provider reference works.
        struct NullProvider final : DataProvider {
            CityInfo city_info(const std::string&) const override { return {}; }
            std::vector<Flight> flights(const FlightQuery&) const override { return {}; }
            std::vector<Hotel> hotels(const HotelQuery&) const override { return {}; }
            std::vector<Restaurant> restaurants(const std::string&, const std::string&) const override { return {}; }
            std::vector<Attraction> sights(const std::string&) const override { return {}; }
            std::vector<std::string> tips(const std::string&) const override { return {}; }
            DirectionInfo direction(const GeoPoint&, const GeoPoint&) const override { return {}; }
            GeoPoint position(const std::string&, const std::string&) const override { return {}; }
        };
        static const NullProvider none;
        return call_tool(q, none);
    }
    return call_tool(q, provider(q.tool));
}

} // namespace travel::tools
