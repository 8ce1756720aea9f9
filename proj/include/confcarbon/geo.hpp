#pragma once

namespace confcarbon {

// Mean Earth radius used for every great-circle distance.
inline constexpr double kEarthRadiusKm = 6371.0;

/// A position on the sphere in degrees.
///
/// Latitude must lie in [-90, 90]; out-of-range latitudes throw InvalidCoordinate.
/// Longitude is wrapped into (-180, 180]. At either pole the longitude is
/// collapsed to 0 so that all representations of a pole compare equal.
class GeoPoint
{
public:
    GeoPoint() = default;
    GeoPoint(double latDeg, double lonDeg);

    double lat() const noexcept { return _lat; }
    double lon() const noexcept { return _lon; }

    friend bool operator==(const GeoPoint&, const GeoPoint&) = default;

private:
    double _lat = 0.0;
    double _lon = 0.0;
};

/// Wraps any finite longitude into (-180, 180].
double normalize_longitude(double lonDeg);

/// Great-circle distance in km using the haversine formula.
/// The result is exactly symmetric in its arguments and bounded by pi * radius.
double haversine_distance(const GeoPoint& a, const GeoPoint& b, double radiusKm = kEarthRadiusKm) noexcept;

}
