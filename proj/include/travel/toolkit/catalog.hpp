#pragma once

#include "travel/domain/catalog_items.hpp"

#include <json.hpp>

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace travel::tools {

// Everything known about one destination city.
struct CityPack {
    std::string key; // lowercase city key, e.g. "shanghai"
    CityInfo info;
    std::vector<std::string> tips;
    std::vector<Attraction> sights;
    std::vector<Hotel> hotels;
    std::vector<Restaurant> restaurants;
    // Flights to and from this city, keyed by the other endpoint's city key.
    std::map<std::string, std::vector<Flight>> flights;
};

class Catalog {
  public:
    void add(CityPack pack);

    [[nodiscard]] const CityPack* find(const std::string& city) const;
    [[nodiscard]] std::vector<std::string> cities() const;
    [[nodiscard]] bool empty() const noexcept { return packs_.empty(); }

  private:
    std::map<std::string, CityPack> packs_;
};

// Parses one fixture document (stores "sights", "hotels", "restaurants",
// "flights", "city", "tips"; record fields as in exported plans) and checks
// id uniqueness and item invariants. Throws MalformedDocument.
CityPack parse_city_pack(const nlohmann::json& doc);

// Loads every *.json document in a directory.
Catalog load_fixture_dir(const std::filesystem::path& dir);

// Splits the "['Tourist attraction', 'Park']" list form used by sight records.
std::vector<std::string> parse_type_list(const std::string& text);

} // namespace travel::tools
