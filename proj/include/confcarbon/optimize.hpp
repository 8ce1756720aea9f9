#pragma once

#include "confcarbon/emissions.hpp"
#include "confcarbon/geodata.hpp"
#include "confcarbon/records.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace confcarbon {

enum class ScenarioLabel
{
    Actual, // the announced venue
    BOC,    // capital minimising the summed distance to all affiliations
    BPS,    // capital of the country with the most papers
};

std::string_view to_string(ScenarioLabel label) noexcept;

struct SavingsRange
{
    double low_pct = 0.0;
    double high_pct = 100.0;
};

struct VenueScenario
{
    ScenarioLabel label = ScenarioLabel::Actual;
    std::string country_code;
    std::string city;
    Airport airport;
    double total_co2_kg = 0.0;
    // Relative to Actual. Empty when Actual emits nothing but this scenario does.
    std::optional<double> savings_pct;
    // Hybrid editions only: savings lie between the computed value and 100%.
    std::optional<SavingsRange> hybrid_range;
};

// Neumaier-compensated sum over the travelers in paper_id order, so the result
// does not depend on the order of the input.
double total_emissions(const EmissionModel& model, std::span<const ResolvedTraveler> travelers, const Airport& venueAirport);

// Signed savings in percent: 100 * (actual - alternative) / actual.
// Returns 0 when both are zero; throws UndefinedSavings when only actual is zero.
double savings_pct(double actualKg, double alternativeKg);

struct BocOptions
{
    // Restricts the candidate countries; empty means every capital in the dataset.
    std::vector<std::string> candidates;
    double radius_km = kEarthRadiusKm;
    unsigned threads = 1;
};

struct BocSelection
{
    CapitalRecord capital;
    Airport airport;
    double distance_sum_km = 0.0;
};

/// Discrete 1-median over country capitals.
///
/// Sums the great-circle distance from each candidate capital to every
/// traveler's affiliation point and picks the smallest sum, breaking ties by
/// country code. Throws EmptyTravelers or EmptyCapitals.
BocSelection optimal_location_boc(const GeoDataset& dataset, std::span<const ResolvedTraveler> travelers, const BocOptions& options = {});

struct BpsSelection
{
    CapitalRecord capital;
    Airport airport;
    std::size_t paper_count = 0;
    double distance_sum_km = 0.0;
};

/// Capital of the country contributing the most papers.
///
/// Ties on the paper count go to the smaller capital distance sum, then to the
/// smaller country code. Throws EmptyRecords, or UnknownCountry when a
/// top-count country has no capital record.
BpsSelection optimal_location_bps(const GeoDataset& dataset, std::span<const PaperRecord> records, std::span<const ResolvedTraveler> travelers);

struct EvaluationOptions
{
    AirportScope scope = AirportScope::InternationalOnly;
    std::vector<std::string> candidates;
    unsigned threads = 1;
};

struct EditionEvaluation
{
    ConferenceEdition edition;
    std::vector<VenueScenario> scenarios; // Actual, BOC, BPS
    std::size_t traveler_count = 0;
    std::size_t fallback_count = 0;
    std::vector<ResolutionWarning> warnings;
    // 100 for virtual editions: nobody travelled, the totals are counterfactual.
    std::optional<double> realized_savings_pct;
    std::string annotation;
    BocSelection boc;
    BpsSelection bps;
};

// Resolves the venue airport (explicit IATA, else nearest airport to the venue
// city), resolves every traveler and evaluates the three scenarios.
EditionEvaluation evaluate_edition(const GeoDataset& dataset, const EmissionModel& model, const ConferenceEdition& edition,
                                   std::span<const PaperRecord> records, const EvaluationOptions& options = {});

}
