#pragma once

#include "confcarbon/geodata.hpp"
#include "confcarbon/records.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace confcarbon::test {

inline std::filesystem::path fixture_dir()
{
    return std::filesystem::path(CONFCARBON_TEST_DIR) / "fixtures";
}

inline GeoDataPaths e2e_geodata()
{
    const auto dir = fixture_dir() / "e2e";
    return {dir / "airports.csv", dir / "capitals.csv", dir / "cities.csv"};
}

// Scratch directory removed on destruction.
class TempDir
{
public:
    TempDir()
    {
        static std::random_device rd;
        _path = std::filesystem::temp_directory_path() / ("confcarbon-test-" + std::to_string(rd()) + std::to_string(rd()));
        std::filesystem::create_directories(_path);
    }
    ~TempDir()
    {
        std::error_code ec;
        std::filesystem::remove_all(_path, ec);
    }
    TempDir(const TempDir&)            = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const noexcept { return _path; }

    std::filesystem::path write(const std::string& name, std::string_view content) const
    {
        auto p = _path / name;
        std::filesystem::create_directories(p.parent_path());
        std::ofstream(p, std::ios::binary) << content;
        return p;
    }

private:
    std::filesystem::path _path;
};

inline std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline Airport make_airport(std::string iata, std::string country, double lat, double lon, bool international = true)
{
    return Airport{iata, iata + " airport", iata + " city", std::move(country), GeoPoint(lat, lon), international};
}

inline ResolvedTraveler make_traveler(std::string id, GeoPoint origin, Airport airport)
{
    return ResolvedTraveler{std::move(id), origin, std::move(airport), ResolutionQuality::Exact};
}

// Distance via the chord of the unit sphere; an independent route to the
// great-circle distance used as a test oracle.
inline double chord_distance_km(const GeoPoint& a, const GeoPoint& b, double radiusKm = 6371.0)
{
    constexpr double k = 3.14159265358979323846 / 180.0;
    auto vec = [](const GeoPoint& p) {
        return std::array<double, 3>{std::cos(p.lat() * k) * std::cos(p.lon() * k), std::cos(p.lat() * k) * std::sin(p.lon() * k),
                                     std::sin(p.lat() * k)};
    };
    const auto u = vec(a);
    const auto v = vec(b);
    const double c = std::sqrt((u[0] - v[0]) * (u[0] - v[0]) + (u[1] - v[1]) * (u[1] - v[1]) + (u[2] - v[2]) * (u[2] - v[2]));
    return 2.0 * radiusKm * std::asin(std::min(1.0, c / 2.0));
}

inline GeoPoint random_point(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> z(-1.0, 1.0);
    std::uniform_real_distribution<double> lon(-180.0, 180.0);
    return GeoPoint(std::asin(z(rng)) * 180.0 / 3.14159265358979323846, lon(rng));
}

}
