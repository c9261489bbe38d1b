#include "travel/toolkit/catalog.hpp"

#include "travel/core/error.hpp"
#include "travel/domain/request.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace travel::tools {
namespace {

using nlohmann::json;

std::string id_string(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw Error(ErrorCode::MalformedDocument, "record id must be a string or integer");
}

std::string text_or_empty(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return {};
    if (it->is_string()) return it->get<std::string>();
    return it->dump();
}

GeoPoint point_of(const json& obj) {
    return GeoPoint(obj.at("latitude").get<double>(), obj.at("longitude").get<double>());
}

Money money_of(const json& v) {
    if (v.is_null()) return Money{};
    if (v.is_number()) return Money::from_units(v.get<double>());
    return parse_money(v.get<std::string>());
}

Attraction parse_sight(const json& rec) {
    const json& d = rec.at("details");
    Attraction a;
    a.id = id_string(rec.at("id"));
    a.index = rec.value("index", 0);
    a.name = d.value("sight_name", rec.value("sight_name", std::string{}));
    a.position = point_of(d);
    a.price_per_person = money_of(d.contains("per_price") ? d.at("per_price") : json());
    a.rating = d.value("overall_rating", 0.0);
    a.description = text_or_empty(d, "description");
    a.recommend_duration = d.at("llm_recommend_duration").get<double>();
    const json& play = d.at("llm_recommend_play_time");
    a.recommend_window = play.is_string() ? parse_time_window(play.get<std::string>())
                                          : TimeWindow(play.at(0).get<double>(), play.at(1).get<double>());
    a.recommend_reason = text_or_empty(d, "llm_recommend_reason");
    if (auto t = d.find("type"); t != d.end()) {
        a.types = t->is_array() ? t->get<std::vector<std::string>>() : parse_type_list(t->get<std::string>());
    }
    a.address = text_or_empty(d, "address");
    a.image = text_or_empty(d, "image");
    if (a.image.empty()) a.image = text_or_empty(rec, "image");
    a.phone = text_or_empty(d, "phone");
    return a;
}

Hotel parse_hotel(const json& rec) {
    Hotel h;
    h.id = id_string(rec.at("id"));
    h.name = rec.at("name").get<std::string>();
    h.address = text_or_empty(rec, "address");
    h.position = point_of(rec);
    h.price_per_night = money_of(rec.at("price_per_night"));
    h.total_price = h.price_per_night;
    h.rating = rec.value("rating", 0.0);
    h.check_in_time = parse_clock(rec.value("check_in_time", std::string("2:00 PM")));
    h.check_out_time = parse_clock(rec.value("check_out_time", std::string("12:00 PM")));
    h.amenities = rec.value("amenities", std::vector<std::string>{});
    h.image = text_or_empty(rec, "image");
    return h;
}

Restaurant parse_restaurant(const json& rec) {
    Restaurant r;
    r.id = id_string(rec.at("id"));
    r.name = rec.at("name").get<std::string>();
    r.address = text_or_empty(rec, "address");
    r.position = point_of(rec);
    const std::string band = rec.value("price", std::string("$"));
    r.price_band = static_cast<int>(std::count(band.begin(), band.end(), '$'));
    if (r.price_band == 0) r.price_band = 1;
    r.rating = rec.value("rating", 0.0);
    r.cuisine = text_or_empty(rec, "cuisine");
    r.phone = text_or_empty(rec, "phone");
    return r;
}

Flight parse_flight(const json& rec) {
    Flight f;
    f.id = id_string(rec.at("id"));
    f.flight_number = rec.at("flight_number").get<std::string>();
    f.direction = rec.at("outbound_or_return").get<std::string>() == "return" ? FlightDirection::return_trip
                                                                              : FlightDirection::outbound;
    f.round_trip_price = money_of(rec.at("round_trip_price"));
    f.departure_time = parse_date_time(rec.at("departure_time").get<std::string>());
    f.arrival_time = parse_date_time(rec.at("arrival_time").get<std::string>());
    f.total_duration = rec.at("total_duration").get<int>();
    if (auto a = rec.find("departure_airport"); a != rec.end() && a->is_object()) {
        f.departure_airport = Airport{a->value("name", ""), a->value("id", "")};
    }
    if (auto a = rec.find("arrival_airport"); a != rec.end() && a->is_object()) {
        f.arrival_airport = Airport{a->value("name", ""), a->value("id", "")};
    }
    f.airline = text_or_empty(rec, "airline");
    f.airplane = text_or_empty(rec, "airplane");
    f.travel_class = text_or_empty(rec, "travel_class");
    f.type = text_or_empty(rec, "type");
    return f;
}

template <typename T>
void require_unique_ids(const std::vector<T>& items, const char* store) {
    std::set<std::string> seen;
    for (const auto& item : items) {
        if (!seen.insert(item.id).second) {
            throw Error(ErrorCode::MalformedDocument, std::string("duplicate id '") + item.id + "' in " + store);
        }
    }
}

} // namespace

void Catalog::add(CityPack pack) {
    auto key = pack.key;
    packs_.insert_or_assign(std::move(key), std::move(pack));
}

const CityPack* Catalog::find(const std::string& city) const {
    auto it = packs_.find(city);
    return it == packs_.end() ? nullptr : &it->second;
}

std::vector<std::string> Catalog::cities() const {
    std::vector<std::string> out;
    for (const auto& [key, pack] : packs_) out.push_back(key);
    return out;
}

std::vector<std::string> parse_type_list(const std::string& text) {
    std::vector<std::string> out;
    std::string current;
    bool quoted = false;
    char quote = '\0';
    for (char c : text) {
        if (!quoted && (c == '\'' || c == '"')) {
            quoted = true;
            quote = c;
            current.clear();
        } else if (quoted && c == quote) {
            quoted = false;
            out.push_back(current);
        } else if (quoted) {
            current.push_back(c);
        }
    }
    return out;
}

CityPack parse_city_pack(const json& doc) {
    CityPack pack;
    try {
        const json& city = doc.at("city");
        pack.info.city_name = city.at("city_name").get<std::string>();
        pack.info.description = text_or_empty(city, "description");
        if (auto w = city.find("weather"); w != city.end() && w->is_object()) {
            pack.info.weather = Weather{w->value("celsius", 0), w->value("fahrenheit", 0), w->value("conditions", "")};
        }
        pack.info.center = point_of(city);
        pack.key = doc.contains("key") ? doc.at("key").get<std::string>() : city_key(pack.info.city_name);

        for (const auto& t : doc.value("tips", json::array())) pack.tips.push_back(t.get<std::string>());
        for (const auto& rec : doc.value("sights", json::array())) pack.sights.push_back(parse_sight(rec));
        for (const auto& rec : doc.value("hotels", json::array())) pack.hotels.push_back(parse_hotel(rec));
        for (const auto& rec : doc.value("restaurants", json::array())) pack.restaurants.push_back(parse_restaurant(rec));
        const json flights = doc.value("flights", json::object());
        for (const auto& [origin, records] : flights.items()) {
            auto& list = pack.flights[origin];
            for (const auto& rec : records) list.push_back(parse_flight(rec));
        }
    } catch (const Error& e) {
        if (e.code() == ErrorCode::MalformedDocument) throw;
        throw Error(ErrorCode::MalformedDocument, std::string("fixture record: ") + e.what());
    } catch (const json::exception& e) {
        throw Error(ErrorCode::MalformedDocument, std::string("fixture record: ") + e.what());
    }

    require_unique_ids(pack.sights, "sights");
    require_unique_ids(pack.hotels, "hotels");
    require_unique_ids(pack.restaurants, "restaurants");
    std::vector<Flight> all_flights;
    for (const auto& [origin, list] : pack.flights) {
        all_flights.insert(all_flights.end(), list.begin(), list.end());
        for (const auto& f : list) {
            if (auto problems = check_invariants(f); !problems.empty()) {
                throw Error(ErrorCode::MalformedDocument, problems.front());
            }
        }
    }
    require_unique_ids(all_flights, "flights");
    for (const auto& a : pack.sights) {
        if (auto problems = check_invariants(a); !problems.empty()) {
            throw Error(ErrorCode::MalformedDocument, problems.front());
        }
    }
    return pack;
}

Catalog load_fixture_dir(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) {
        throw Error(ErrorCode::Io, "fixture directory not found: " + dir.string());
    }
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    Catalog catalog;
    for (const auto& file : files) {
        std::ifstream in(file);
        json doc;
        try {
            doc = json::parse(in);
        } catch (const json::parse_error& e) {
            throw Error(ErrorCode::MalformedDocument, file.string() + ": " + e.what());
        }
        catalog.add(parse_city_pack(doc));
    }
    return catalog;
}

} // namespace travel::tools
