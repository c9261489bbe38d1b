#include "travel/domain/geo.hpp"

#include "travel/core/error.hpp"

#include <cmath>
#include <string>

namespace travel {

GeoPoint::GeoPoint(double lat, double lon) : lat_(lat), lon_(lon) {
    if (!std::isfinite(lat) || !std::isfinite(lon) || lat < -90.0 || lat > 90.0 || lon < -180.0 || lon > 180.0) {
        throw Error(ErrorCode::InvalidValue, "coordinate out of range: (" + std::to_string(lat) + ", " + std::to_string(lon) + ")");
    }
}

} // namespace travel
