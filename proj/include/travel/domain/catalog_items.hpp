#pragma once

#include "travel/domain/clock.hpp"
#include "travel/domain/geo.hpp"
#include "travel/domain/money.hpp"
#include "travel/domain/time_window.hpp"

#include <optional>
#include <string>
#include <vector>

namespace travel {

using ItemId = std::string;

struct Attraction {
    ItemId id;
    int index = 0;
    std::string name;
    GeoPoint position;
    Money price_per_person;
    double rating = 0.0;
    std::string description;
    Hours recommend_duration = 1.0;
    TimeWindow recommend_window;
    std::string recommend_reason;
    std::vector<std::string> types;
    std::string address;
    std::string image;
    std::string phone;

    bool operator==(const Attraction&) const = default;
};

struct Hotel {
    ItemId id;
    std::string name;
    std::string address;
    GeoPoint position;
    Money price_per_night;
    // Price for the queried stay; equals price_per_night until a stay is known.
    Money total_price;
    double rating = 0.0;
    Hours check_in_time = 14.0;
    Hours check_out_time = 12.0;
    std::vector<std::string> amenities;
    std::string image;

    bool operator==(const Hotel&) const = default;
};

struct Restaurant {
    ItemId id;
    std::string name;
    std::string address;
    GeoPoint position;
    int price_band = 1; // number of '$' signs
    double rating = 0.0;
    std::string cuisine;
    std::string phone;

    bool operator==(const Restaurant&) const = default;
};

enum class FlightDirection { outbound, return_trip };

struct Airport {
    std::string name;
    std::string code;

    bool operator==(const Airport&) const = default;
};

struct Flight {
    ItemId id;
    std::string flight_number;
    FlightDirection direction = FlightDirection::outbound;
    Money round_trip_price;
    DateTime departure_time;
    DateTime arrival_time;
    int total_duration = 0; // minutes
    Airport departure_airport;
    Airport arrival_airport;
    std::string airline;
    std::string airplane;
    std::string travel_class;
    std::string type;

    bool operator==(const Flight&) const = default;
};

struct Weather {
    int celsius = 0;
    int fahrenheit = 0;
    std::string conditions;

    bool operator==(const Weather&) const = default;
};

struct CityInfo {
    std::string city_name;
    std::string description;
    Weather weather;
    GeoPoint center;

    bool operator==(const CityInfo&) const = default;
};

// Returns a message for each broken item invariant (durations, prices, ratings).
std::vector<std::string> check_invariants(const Flight& f);
std::vector<std::string> check_invariants(const Attraction& a);

} // namespace travel
