#pragma once

#include "confcarbon/records.hpp"

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace confcarbon {

/// Piecewise per-kilometre flight emission model.
///
/// Each flight segment is lengthened by a fixed detour, then charged at the
/// factor of the distance band the lengthened distance falls into. Band i
/// covers [edge(i-1), edge(i)); a distance exactly on an edge belongs to the
/// higher band. Defaults approximate published economy-class factors.
class EmissionModel
{
public:
    EmissionModel() = default;

    // Throws ValidationError listing every violated parameter constraint.
    EmissionModel(double detourKm, std::vector<double> bandEdgesKm, std::vector<double> bandFactorsKgPerKm, double cabinMultiplier);

    double detour_km() const noexcept { return _detourKm; }
    const std::vector<double>& band_edges_km() const noexcept { return _bandEdgesKm; }
    const std::vector<double>& band_factors_kg_per_km() const noexcept { return _bandFactorsKgPerKm; }
    double cabin_multiplier() const noexcept { return _cabinMultiplier; }

    // Factor for an already detour-adjusted distance.
    double factor_for(double adjustedKm) const noexcept;

    friend bool operator==(const EmissionModel&, const EmissionModel&) = default;

private:
    double _detourKm = 95.0;
    std::vector<double> _bandEdgesKm{1500.0, 4000.0};
    std::vector<double> _bandFactorsKgPerKm{0.251, 0.195, 0.151};
    double _cabinMultiplier = 1.0;
};

// Keys: detour_km, band_edges_km, band_factors_kg_per_km, cabin_multiplier.
// Absent keys keep their default value.
EmissionModel emission_model_from_json(std::string_view text, std::string_view sourceName);
EmissionModel load_emission_model(const std::filesystem::path& path);

// One-way CO2 in kg for a single segment; zero distance emits nothing.
double segment_emissions(const EmissionModel& model, double oneWayKm);

// Every leg is charged as its own flight.
double multi_segment_emissions(const EmissionModel& model, std::span<const double> legDistancesKm);

struct Trip
{
    std::string paper_id;
    Airport origin;
    Airport destination;
    double one_way_km = 0.0;
    double round_trip_co2_kg = 0.0;
};

Trip trip_for(const EmissionModel& model, const ResolvedTraveler& traveler, const Airport& venueAirport);

}
