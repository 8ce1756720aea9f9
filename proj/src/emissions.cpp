#include "confcarbon/emissions.hpp"
#include "confcarbon/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cassert>
#include <cmath>

namespace confcarbon {

using json = nlohmann::json;

EmissionModel::EmissionModel(double detourKm, std::vector<double> bandEdgesKm, std::vector<double> bandFactorsKgPerKm, double cabinMultiplier)
: _detourKm(detourKm)
, _bandEdgesKm(std::move(bandEdgesKm))
, _bandFactorsKgPerKm(std::move(bandFactorsKgPerKm))
, _cabinMultiplier(cabinMultiplier)
{
    std::vector<std::string> issues;
    if (!std::isfinite(_detourKm) || _detourKm < 0.0) {
        issues.push_back("detour_km must be a non-negative number");
    }
    if (!std::isfinite(_cabinMultiplier) || _cabinMultiplier <= 0.0) {
        issues.push_back("cabin_multiplier must be positive");
    }
    for (std::size_t i = 0; i < _bandEdgesKm.size(); ++i) {
        if (!std::isfinite(_bandEdgesKm[i]) || _bandEdgesKm[i] <= 0.0) {
            issues.push_back("band_edges_km[" + std::to_string(i) + "] must be positive");
        }
        if (i > 0 && !(_bandEdgesKm[i] > _bandEdgesKm[i - 1])) {
            issues.push_back("band_edges_km must be strictly ascending (index " + std::to_string(i) + ")");
        }
    }
    if (_bandFactorsKgPerKm.size() != _bandEdgesKm.size() + 1) {
        issues.push_back("band_factors_kg_per_km needs " + std::to_string(_bandEdgesKm.size() + 1) + " entries, found " +
                         std::to_string(_bandFactorsKgPerKm.size()));
    }
    for (std::size_t i = 0; i < _bandFactorsKgPerKm.size(); ++i) {
        if (!std::isfinite(_bandFactorsKgPerKm[i]) || _bandFactorsKgPerKm[i] <= 0.0) {
            issues.push_back("band_factors_kg_per_km[" + std::to_string(i) + "] must be positive");
        }
    }
    if (!issues.empty()) {
        throw ValidationError(std::move(issues));
    }
}

double EmissionModel::factor_for(double adjustedKm) const noexcept
{
    const auto band = std::upper_bound(_bandEdgesKm.begin(), _bandEdgesKm.end(), adjustedKm) - _bandEdgesKm.begin();
    return _bandFactorsKgPerKm[static_cast<std::size_t>(band)];
}

EmissionModel emission_model_from_json(std::string_view text, std::string_view sourceName)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string(sourceName) + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError(std::string(sourceName) + ": $: top-level value must be an object");
    }

    const EmissionModel defaults;
    std::vector<std::string> issues;
    const std::string prefix = std::string(sourceName) + ": $.";

    auto number = [&](const char* key, double fallback) {
        auto it = doc.find(key);
        if (it == doc.end()) {
            return fallback;
        }
        if (!it->is_number()) {
            issues.push_back(prefix + key + ": expected number");
            return fallback;
        }
        return it->get<double>();
    };
    auto numbers = [&](const char* key, const std::vector<double>& fallback) {
        auto it = doc.find(key);
        if (it == doc.end()) {
            return fallback;
        }
        if (!it->is_array() || !std::all_of(it->begin(), it->end(), [](const json& v) { return v.is_number(); })) {
            issues.push_back(prefix + key + ": expected array of numbers");
            return fallback;
        }
        return it->get<std::vector<double>>();
    };

    const double detour  = number("detour_km", defaults.detour_km());
    auto edges           = numbers("band_edges_km", defaults.band_edges_km());
    auto factors         = numbers("band_factors_kg_per_km", defaults.band_factors_kg_per_km());
    const double cabin   = number("cabin_multiplier", defaults.cabin_multiplier());
    if (!issues.empty()) {
        throw ValidationError(std::move(issues));
    }

    try {
        return EmissionModel(detour, std::move(edges), std::move(factors), cabin);
    } catch (const ValidationError& e) {
        auto list = e.issues();
        for (auto& issue : list) {
            issue = prefix + issue;
        }
        throw ValidationError(std::move(list));
    }
}

EmissionModel load_emission_model(const std::filesystem::path& path)
{
    return emission_model_from_json(read_text_file(path), path.string());
}

double segment_emissions(const EmissionModel& model, double oneWayKm)
{
    assert(oneWayKm >= 0.0);
    if (oneWayKm <= 0.0) {
        return 0.0;
    }
    const double adjusted = oneWayKm + model.detour_km();
    return adjusted * model.factor_for(adjusted) * model.cabin_multiplier();
}

double multi_segment_emissions(const EmissionModel& model, std::span<const double> legDistancesKm)
{
    double total = 0.0;
    for (double leg : legDistancesKm) {
        total += segment_emissions(model, leg);
    }
    return total;
}

Trip trip_for(const EmissionModel& model, const ResolvedTraveler& traveler, const Airport& venueAirport)
{
    Trip trip;
    trip.paper_id    = traveler.paper_id;
    trip.origin      = traveler.origin_airport;
    trip.destination = venueAirport;

    if (traveler.origin_airport.iata != venueAirport.iata) {
        trip.one_way_km        = haversine_distance(traveler.origin_airport.location, venueAirport.location);
        trip.round_trip_co2_kg = 2.0 * segment_emissions(model, trip.one_way_km);
    }
    return trip;
}

}
