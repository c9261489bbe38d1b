#include "travel/toolkit/geo_distance.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace travel::tools {

double distance_km(const GeoPoint& a, const GeoPoint& b) {
    constexpr double to_rad = std::numbers::pi / 180.0;
    const double lat1 = a.lat() * to_rad;
    const double lat2 = b.lat() * to_rad;
    const double sin_dlat = std::sin((lat2 - lat1) / 2.0);
    const double sin_dlon = std::sin((b.lon() - a.lon()) * to_rad / 2.0);
    const double h = sin_dlat * sin_dlat + std::cos(lat1) * std::cos(lat2) * sin_dlon * sin_dlon;
    return 2.0 * kEarthRadiusKm * std::asin(std::sqrt(std::clamp(h, 0.0, 1.0)));
}

} // namespace travel::tools
