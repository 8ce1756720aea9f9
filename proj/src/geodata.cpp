#include "confcarbon/geodata.hpp"
#include "confcarbon/csv.hpp"
#include "confcarbon/error.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>
#include <tuple>

namespace confcarbon {

namespace {

std::string location_of(std::string_view source, std::size_t line)
{
    return std::string(source) + ":" + std::to_string(line);
}

// Checks the header row and returns the data rows.
std::vector<csv::Row> data_rows(std::string_view text, std::string_view source, const std::vector<std::string>& header)
{
    auto rows = csv::parse(text, source);
    if (rows.empty()) {
        throw ParseError(std::string(source) + ": missing header row");
    }

    std::vector<std::string> actual;
    for (const auto& f : rows.front().fields) {
        actual.emplace_back(csv::trim(f));
    }
    if (actual != header) {
        throw ParseError(location_of(source, rows.front().line) + ": expected header '" + csv::join(header) + "'");
    }

    rows.erase(rows.begin());
    for (const auto& row : rows) {
        if (row.fields.size() != header.size()) {
            throw ParseError(location_of(source, row.line) + ": expected " + std::to_string(header.size()) + " fields, found " +
                             std::to_string(row.fields.size()));
        }
    }
    return rows;
}

double parse_coordinate(std::string_view field, std::string_view what, std::string_view source, std::size_t line)
{
    auto value = csv::to_double(field);
    if (!value) {
        throw ParseError(location_of(source, line) + ": invalid " + std::string(what) + " '" + std::string(field) + "'");
    }
    return *value;
}

GeoPoint parse_point(std::string_view lat, std::string_view lon, std::string_view source, std::size_t line)
{
    const double latDeg = parse_coordinate(lat, "latitude", source, line);
    const double lonDeg = parse_coordinate(lon, "longitude", source, line);
    try {
        return GeoPoint(latDeg, lonDeg);
    } catch (const InvalidCoordinate& e) {
        throw ParseError(location_of(source, line) + ": " + e.what());
    }
}

std::string parse_iata(std::string_view field, std::string_view source, std::size_t line)
{
    auto code = csv::trim(field);
    if (!is_iata_code(code)) {
        throw ParseError(location_of(source, line) + ": invalid IATA code '" + std::string(field) + "'");
    }
    return std::string(code);
}

std::string parse_country(std::string_view field, std::string_view source, std::size_t line)
{
    auto code = csv::trim(field);
    if (!is_country_code(code)) {
        throw ParseError(location_of(source, line) + ": invalid country code '" + std::string(field) + "'");
    }
    return std::string(code);
}

template <typename Key>
void reject_duplicate(std::map<Key, std::size_t>& seen, const Key& key, std::string_view what, std::string_view display,
                      std::string_view source, std::size_t line)
{
    auto [it, inserted] = seen.emplace(key, line);
    if (!inserted) {
        throw IntegrityError(std::string(source) + ": duplicate " + std::string(what) + " '" + std::string(display) + "' on lines " +
                             std::to_string(it->second) + " and " + std::to_string(line));
    }
}

}

std::string_view to_string(ResolutionQuality quality) noexcept
{
    switch (quality) {
    case ResolutionQuality::Exact:
        return "exact";
    case ResolutionQuality::CapitalFallback:
        return "capital_fallback";
    }
    return "unknown";
}

bool is_iata_code(std::string_view code) noexcept
{
    return code.size() == 3 && std::all_of(code.begin(), code.end(), [](char c) { return c >= 'A' && c <= 'Z'; });
}

bool is_country_code(std::string_view code) noexcept
{
    return code.size() == 2 && std::all_of(code.begin(), code.end(), [](char c) { return c >= 'A' && c <= 'Z'; });
}

std::string fold_city_name(std::string_view city)
{
    std::string out(csv::trim(city));
    for (auto& c : out) {
        if (c >= 'A' && c <= 'Z') {
            c = static_cast<char>(c - 'A' + 'a');
        }
    }
    return out;
}

GeoDataset GeoDataset::build(std::vector<Airport> airports, std::vector<CapitalRecord> capitals, std::vector<CityRecord> cities)
{
    GeoDataset ds;

    std::sort(airports.begin(), airports.end(), [](const Airport& a, const Airport& b) { return a.iata < b.iata; });
    for (std::size_t i = 0; i < airports.size(); ++i) {
        if (!is_iata_code(airports[i].iata)) {
            throw IntegrityError("invalid IATA code '" + airports[i].iata + "'");
        }
        if (i > 0 && airports[i].iata == airports[i - 1].iata) {
            throw IntegrityError("duplicate IATA '" + airports[i].iata + "'");
        }
    }
    ds._airports = std::move(airports);

    std::sort(capitals.begin(), capitals.end(), [](const CapitalRecord& a, const CapitalRecord& b) { return a.country_code < b.country_code; });
    for (std::size_t i = 0; i < capitals.size(); ++i) {
        const auto& cap = capitals[i];
        if (i > 0 && cap.country_code == capitals[i - 1].country_code) {
            throw IntegrityError("duplicate capital record for country '" + cap.country_code + "'");
        }
        const Airport* airport = ds.find_airport(cap.designated_airport_iata);
        if (airport == nullptr) {
            throw IntegrityError("capital of '" + cap.country_code + "' references unknown airport '" + cap.designated_airport_iata + "'");
        }
        if (!airport->international) {
            throw IntegrityError("capital of '" + cap.country_code + "' references non-international airport '" + cap.designated_airport_iata + "'");
        }
    }
    ds._capitals = std::move(capitals);

    for (auto& city : cities) {
        city.city = fold_city_name(city.city);
    }
    std::sort(cities.begin(), cities.end(), [](const CityRecord& a, const CityRecord& b) {
        return std::tie(a.city, a.country_code) < std::tie(b.city, b.country_code);
    });
    for (std::size_t i = 1; i < cities.size(); ++i) {
        if (cities[i].city == cities[i - 1].city && cities[i].country_code == cities[i - 1].country_code) {
            throw IntegrityError("duplicate city '" + cities[i].city + "' in '" + cities[i].country_code + "'");
        }
    }
    ds._cities = std::move(cities);

    return ds;
}

const Airport* GeoDataset::find_airport(std::string_view iata) const noexcept
{
    auto it = std::lower_bound(_airports.begin(), _airports.end(), iata, [](const Airport& a, std::string_view key) { return a.iata < key; });
    return (it != _airports.end() && it->iata == iata) ? &*it : nullptr;
}

const CapitalRecord* GeoDataset::find_capital(std::string_view countryCode) const noexcept
{
    auto it = std::lower_bound(_capitals.begin(), _capitals.end(), countryCode,
                               [](const CapitalRecord& c, std::string_view key) { return c.country_code < key; });
    return (it != _capitals.end() && it->country_code == countryCode) ? &*it : nullptr;
}

const CityRecord* GeoDataset::find_city(std::string_view city, std::string_view countryCode) const
{
    const std::string folded = fold_city_name(city);
    const std::pair<std::string_view, std::string_view> key(folded, countryCode);
    auto it = std::lower_bound(_cities.begin(), _cities.end(), key, [](const CityRecord& c, const auto& k) {
        return std::pair<std::string_view, std::string_view>(c.city, c.country_code) < k;
    });
    return (it != _cities.end() && it->city == folded && it->country_code == countryCode) ? &*it : nullptr;
}

std::vector<Airport> parse_airports_csv(std::string_view text, std::string_view source)
{
    static const std::vector<std::string> header{"iata", "name", "city", "country_code", "lat", "lon", "international"};

    std::vector<Airport> airports;
    std::map<std::string, std::size_t> seen;
    for (const auto& row : data_rows(text, source, header)) {
        const auto& f = row.fields;
        Airport airport;
        airport.iata         = parse_iata(f[0], source, row.line);
        airport.name         = std::string(csv::trim(f[1]));
        airport.city         = std::string(csv::trim(f[2]));
        airport.country_code = parse_country(f[3], source, row.line);
        airport.location     = parse_point(f[4], f[5], source, row.line);

        const auto flag = csv::trim(f[6]);
        if (flag == "true") {
            airport.international = true;
        } else if (flag == "false") {
            airport.international = false;
        } else {
            throw ParseError(location_of(source, row.line) + ": international must be 'true' or 'false', found '" + std::string(flag) + "'");
        }

        reject_duplicate(seen, airport.iata, "IATA", airport.iata, source, row.line);
        airports.push_back(std::move(airport));
    }
    return airports;
}

std::vector<CapitalRecord> parse_capitals_csv(std::string_view text, std::string_view source)
{
    static const std::vector<std::string> header{"country_code", "capital_city", "lat", "lon", "designated_airport_iata"};

    std::vector<CapitalRecord> capitals;
    std::map<std::string, std::size_t> seen;
    for (const auto& row : data_rows(text, source, header)) {
        const auto& f = row.fields;
        CapitalRecord cap;
        cap.country_code            = parse_country(f[0], source, row.line);
        cap.capital_city            = std::string(csv::trim(f[1]));
        cap.capital_location        = parse_point(f[2], f[3], source, row.line);
        cap.designated_airport_iata = parse_iata(f[4], source, row.line);

        reject_duplicate(seen, cap.country_code, "country", cap.country_code, source, row.line);
        capitals.push_back(std::move(cap));
    }
    return capitals;
}

std::vector<CityRecord> parse_cities_csv(std::string_view text, std::string_view source)
{
    static const std::vector<std::string> header{"city", "country_code", "lat", "lon"};

    std::vector<CityRecord> cities;
    std::map<std::pair<std::string, std::string>, std::size_t> seen;
    for (const auto& row : data_rows(text, source, header)) {
        const auto& f = row.fields;
        CityRecord city;
        city.city         = fold_city_name(f[0]);
        city.country_code = parse_country(f[1], source, row.line);
        city.location     = parse_point(f[2], f[3], source, row.line);
        if (city.city.empty()) {
            throw ParseError(location_of(source, row.line) + ": empty city name");
        }

        reject_duplicate(seen, std::pair(city.city, city.country_code), "city", city.city + "/" + city.country_code, source, row.line);
        cities.push_back(std::move(city));
    }
    return cities;
}

std::string read_text_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) {
        throw IoError("failed reading '" + path.string() + "'");
    }
    return ss.str();
}

GeoDataset load_geodata(const GeoDataPaths& paths)
{
    auto airports = parse_airports_csv(read_text_file(paths.airports), paths.airports.string());
    auto capitals = parse_capitals_csv(read_text_file(paths.capitals), paths.capitals.string());
    auto cities   = parse_cities_csv(read_text_file(paths.cities), paths.cities.string());

    try {
        return GeoDataset::build(std::move(airports), std::move(capitals), std::move(cities));
    } catch (const IntegrityError& e) {
        throw IntegrityError(paths.capitals.string() + ": " + e.what());
    }
}

CityResolution resolve_city(const GeoDataset& dataset, std::string_view city, std::string_view countryCode)
{
    const CapitalRecord* capital = dataset.find_capital(countryCode);
    if (capital == nullptr) {
        throw UnknownCountry(std::string(countryCode));
    }

    if (const CityRecord* hit = dataset.find_city(city, countryCode)) {
        return {hit->location, ResolutionQuality::Exact};
    }
    return {capital->capital_location, ResolutionQuality::CapitalFallback};
}

const Airport& nearest_airport(const GeoDataset& dataset, const GeoPoint& point, AirportScope scope)
{
    const Airport* best = nullptr;
    double bestDistance = std::numeric_limits<double>::infinity();

    // Airports are sorted by IATA, so a strict comparison keeps the smallest code on ties.
    for (const auto& airport : dataset.airports()) {
        if (scope == AirportScope::InternationalOnly && !airport.international) {
            continue;
        }
        const double d = haversine_distance(point, airport.location);
        if (d < bestDistance) {
            bestDistance = d;
            best         = &airport;
        }
    }

    if (best == nullptr) {
        throw EmptyDataset("no airport available for nearest-airport search");
    }
    return *best;
}

CapitalAirport capital_airport(const GeoDataset& dataset, std::string_view countryCode)
{
    const CapitalRecord* capital = dataset.find_capital(countryCode);
    if (capital == nullptr) {
        throw UnknownCountry(std::string(countryCode));
    }
    // Presence is a dataset invariant checked in build().
    return {*capital, *dataset.find_airport(capital->designated_airport_iata)};
}

}
