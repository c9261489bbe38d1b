#pragma once

namespace travel {

// Latitude/longitude in degrees. Construction rejects non-finite or
// out-of-range coordinates.
class GeoPoint {
  public:
    GeoPoint() = default;
    GeoPoint(double lat, double lon);

    [[nodiscard]] double lat() const noexcept { return lat_; }
    [[nodiscard]] double lon() const noexcept { return lon_; }

    bool operator==(const GeoPoint&) const = default;

  private:
    double lat_ = 0.0;
    double lon_ = 0.0;
};

} // namespace travel
