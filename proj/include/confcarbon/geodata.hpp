#pragma once

#include "confcarbon/geo.hpp"

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace confcarbon {

struct Airport
{
    std::string iata; // [A-Z]{3}
    std::string name;
    std::string city;
    std::string country_code; // ISO-3166 alpha-2
    GeoPoint location;
    bool international = true;

    friend bool operator==(const Airport&, const Airport&) = default;
};

struct CapitalRecord
{
    std::string country_code;
    std::string capital_city;
    GeoPoint capital_location;
    std::string designated_airport_iata;

    friend bool operator==(const CapitalRecord&, const CapitalRecord&) = default;
};

struct CityRecord
{
    std::string city; // case-folded, trimmed
    std::string country_code;
    GeoPoint location;

    friend bool operator==(const CityRecord&, const CityRecord&) = default;
};

enum class ResolutionQuality
{
    Exact,
    CapitalFallback,
};

std::string_view to_string(ResolutionQuality quality) noexcept;

enum class AirportScope
{
    InternationalOnly,
    All,
};

bool is_iata_code(std::string_view code) noexcept;
bool is_country_code(std::string_view code) noexcept;

// ASCII lower-casing plus whitespace trimming; non-ASCII bytes pass through.
std::string fold_city_name(std::string_view city);

/// Immutable, validated collection of airports, capitals and gazetteer cities.
///
/// All three tables are kept sorted by their key, so two datasets built from
/// the same rows in a different order compare equal.
class GeoDataset
{
public:
    GeoDataset() = default;

    // Validates the dataset invariants and throws IntegrityError on violation.
    static GeoDataset build(std::vector<Airport> airports, std::vector<CapitalRecord> capitals, std::vector<CityRecord> cities);

    std::span<const Airport> airports() const noexcept { return _airports; }
    std::span<const CapitalRecord> capitals() const noexcept { return _capitals; }
    std::span<const CityRecord> cities() const noexcept { return _cities; }

    const Airport* find_airport(std::string_view iata) const noexcept;
    const CapitalRecord* find_capital(std::string_view countryCode) const noexcept;
    const CityRecord* find_city(std::string_view city, std::string_view countryCode) const;

    friend bool operator==(const GeoDataset&, const GeoDataset&) = default;

private:
    std::vector<Airport> _airports;
    std::vector<CapitalRecord> _capitals;
    std::vector<CityRecord> _cities;
};

struct GeoDataPaths
{
    std::filesystem::path airports;
    std::filesystem::path capitals;
    std::filesystem::path cities;
};

// Throws IoError, ParseError (with file and line) or IntegrityError.
GeoDataset load_geodata(const GeoDataPaths& paths);

// In-memory variants of the three file readers; sourceName is used in messages.
std::vector<Airport> parse_airports_csv(std::string_view text, std::string_view sourceName);
std::vector<CapitalRecord> parse_capitals_csv(std::string_view text, std::string_view sourceName);
std::vector<CityRecord> parse_cities_csv(std::string_view text, std::string_view sourceName);

struct CityResolution
{
    GeoPoint location;
    ResolutionQuality quality = ResolutionQuality::Exact;
};

// Exact case-folded gazetteer hit, else the capital of the country.
// Throws UnknownCountry when the country has no capital record.
CityResolution resolve_city(const GeoDataset& dataset, std::string_view city, std::string_view countryCode);

// Airport closest to the point; ties go to the smallest IATA code.
// Throws EmptyDataset when no airport is in scope.
const Airport& nearest_airport(const GeoDataset& dataset, const GeoPoint& point, AirportScope scope = AirportScope::InternationalOnly);

struct CapitalAirport
{
    CapitalRecord capital;
    Airport airport;
};

CapitalAirport capital_airport(const GeoDataset& dataset, std::string_view countryCode);

std::string read_text_file(const std::filesystem::path& path);

}
