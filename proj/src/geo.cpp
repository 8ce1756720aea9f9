#include "confcarbon/geo.hpp"
#include "confcarbon/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace confcarbon {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

}

double normalize_longitude(double lonDeg)
{
    double lon = std::fmod(lonDeg, 360.0);
    if (lon <= -180.0) {
        lon += 360.0;
    } else if (lon > 180.0) {
        lon -= 360.0;
    }
    return lon;
}

GeoPoint::GeoPoint(double latDeg, double lonDeg)
{
    if (!std::isfinite(latDeg) || latDeg < -90.0 || latDeg > 90.0) {
        throw InvalidCoordinate("latitude out of range [-90, 90]: " + std::to_string(latDeg));
    }
    if (!std::isfinite(lonDeg)) {
        throw InvalidCoordinate("longitude is not finite");
    }

    _lat = latDeg;
    _lon = std::fabs(latDeg) == 90.0 ? 0.0 : normalize_longitude(lonDeg);
}

double haversine_distance(const GeoPoint& a, const GeoPoint& b, double radiusKm) noexcept
{
    // Absolute differences and a commutative product keep the result bit-identical
    // when the arguments are swapped.
    const double dLat = std::fabs(b.lat() - a.lat()) * kDegToRad;
    const double dLon = std::fabs(b.lon() - a.lon()) * kDegToRad;

    const double sinLat = std::sin(dLat / 2.0);
    const double sinLon = std::sin(dLon / 2.0);
    const double cosProduct = std::cos(a.lat() * kDegToRad) * std::cos(b.lat() * kDegToRad);

    const double h = std::clamp(sinLat * sinLat + cosProduct * sinLon * sinLon, 0.0, 1.0);
    return 2.0 * radiusKm * std::asin(std::sqrt(h));
}

}
