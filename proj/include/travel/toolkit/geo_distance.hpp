#pragma once

#include "travel/domain/geo.hpp"

namespace travel::tools {

// Mean Earth radius (IUGG).
inline constexpr double kEarthRadiusKm = 6371.0088;

// Great-circle distance by the haversine formula.
double distance_km(const GeoPoint& a, const GeoPoint& b);

} // namespace travel::tools
