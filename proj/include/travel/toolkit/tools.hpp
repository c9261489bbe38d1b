#pragma once

#include "travel/domain/catalog_items.hpp"
#include "travel/domain/clock.hpp"
#include "travel/toolkit/catalog.hpp"

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace travel::tools {

// Eight data-provider tools followed by the two arithmetic tools.
enum class ToolKind { city, flight, hotel, restaurant, sight, tip, direction, position, distance, time };

inline constexpr std::array<ToolKind, 10> kAllTools = {ToolKind::city,     ToolKind::flight,    ToolKind::hotel,
                                                       ToolKind::restaurant, ToolKind::sight,   ToolKind::tip,
                                                       ToolKind::direction, ToolKind::position, ToolKind::distance,
                                                       ToolKind::time};

std::string_view to_string(ToolKind kind);
// Function name of the tool, e.g. "get_hotel_info".
std::string_view function_name(ToolKind kind);
ToolKind parse_tool_kind(std::string_view text);
// Parameter keys that must be present for the tool.
const std::vector<std::string>& required_params(ToolKind kind);
bool is_arithmetic(ToolKind kind);

struct ToolQuery {
    ToolKind tool = ToolKind::city;
    std::map<std::string, std::string> params;
};

struct FlightQuery {
    std::string from;
    std::string to;
    Date outbound{};
    std::optional<Date> return_date;
};

struct HotelQuery {
    std::string city;
    std::optional<Date> check_in;
    std::optional<Date> check_out;
};

struct DirectionInfo {
    double distance_km = 0.0;
    Hours duration = 0.0;
    std::string mode;

    bool operator==(const DirectionInfo&) const = default;
};

// Source of real-time travel data. Implementations must be safe for
// concurrent reads. Unknown cities raise NoResults; a known city with
// nothing matching the filters yields an empty list.
class DataProvider {
  public:
    virtual ~DataProvider() = default;

    [[nodiscard]] virtual CityInfo city_info(const std::string& city) const = 0;
    [[nodiscard]] virtual std::vector<Flight> flights(const FlightQuery& q) const = 0;
    [[nodiscard]] virtual std::vector<Hotel> hotels(const HotelQuery& q) const = 0;
    [[nodiscard]] virtual std::vector<Restaurant> restaurants(const std::string& city, const std::string& cuisine) const = 0;
    [[nodiscard]] virtual std::vector<Attraction> sights(const std::string& city) const = 0;
    [[nodiscard]] virtual std::vector<std::string> tips(const std::string& city) const = 0;
    [[nodiscard]] virtual DirectionInfo direction(const GeoPoint& from, const GeoPoint& to) const = 0;
    [[nodiscard]] virtual GeoPoint position(const std::string& city, const std::string& name) const = 0;
};

// Offline provider over an immutable fixture catalog. Directions are
// straight-line distance at a configured speed.
class FixtureProvider final : public DataProvider {
  public:
    explicit FixtureProvider(std::shared_ptr<const Catalog> catalog, double speed_kmh = 5.0);

    [[nodiscard]] CityInfo city_info(const std::string& city) const override;
    [[nodiscard]] std::vector<Flight> flights(const FlightQuery& q) const override;
    [[nodiscard]] std::vector<Hotel> hotels(const HotelQuery& q) const override;
    [[nodiscard]] std::vector<Restaurant> restaurants(const std::string& city, const std::string& cuisine) const override;
    [[nodiscard]] std::vector<Attraction> sights(const std::string& city) const override;
    [[nodiscard]] std::vector<std::string> tips(const std::string& city) const override;
    [[nodiscard]] DirectionInfo direction(const GeoPoint& from, const GeoPoint& to) const override;
    [[nodiscard]] GeoPoint position(const std::string& city, const std::string& name) const override;

    [[nodiscard]] const Catalog& catalog() const noexcept { return *catalog_; }

  private:
    const CityPack& pack(const std::string& city) const;

    std::shared_ptr<const Catalog> catalog_;
    double speed_kmh_;
};

using ToolResult = std::variant<CityInfo, std::vector<Flight>, std::vector<Hotel>, std::vector<Restaurant>,
                                std::vector<Attraction>, std::vector<std::string>, DirectionInfo, GeoPoint, double>;

// Validates params for the tool, then dispatches. Arithmetic tools ignore the
// provider. Throws MissingParam, BadField, NoResults, DayOverflow.
ToolResult call_tool(const ToolQuery& q, const DataProvider& provider);

// Registry binding each data tool to a provider.
class Toolkit {
  public:
    void register_provider(ToolKind kind, std::shared_ptr<const DataProvider> provider);
    void register_all(const std::shared_ptr<const DataProvider>& provider);

    // Throws ProviderUnavailable when a data tool has no provider.
    [[nodiscard]] ToolResult call(const ToolQuery& q) const;
    [[nodiscard]] const DataProvider& provider(ToolKind kind) const;
    [[nodiscard]] bool has_provider(ToolKind kind) const;

  private:
    std::map<ToolKind, std::shared_ptr<const DataProvider>> providers_;
};

} // namespace travel::tools
