#include "confcarbon/optimize.hpp"
#include "confcarbon/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <thread>
#include <tuple>

namespace confcarbon {

namespace {

class CompensatedSum
{
public:
    void add(double value) noexcept
    {
        const double t = _sum + value;
        if (std::fabs(_sum) >= std::fabs(value)) {
            _compensation += (_sum - t) + value;
        } else {
            _compensation += (value - t) + _sum;
        }
        _sum = t;
    }

    double value() const noexcept { return _sum + _compensation; }

private:
    double _sum          = 0.0;
    double _compensation = 0.0;
};

// Canonical traveler order used by every reduction.
std::vector<const ResolvedTraveler*> sorted_travelers(std::span<const ResolvedTraveler> travelers)
{
    std::vector<const ResolvedTraveler*> order;
    order.reserve(travelers.size());
    for (const auto& t : travelers) {
        order.push_back(&t);
    }
    std::sort(order.begin(), order.end(), [](const ResolvedTraveler* a, const ResolvedTraveler* b) {
        return std::make_tuple(std::cref(a->paper_id), std::cref(a->origin_airport.iata), a->origin_point.lat(), a->origin_point.lon()) <
               std::make_tuple(std::cref(b->paper_id), std::cref(b->origin_airport.iata), b->origin_point.lat(), b->origin_point.lon());
    });
    return order;
}

std::vector<GeoPoint> sorted_origin_points(std::span<const ResolvedTraveler> travelers)
{
    std::vector<GeoPoint> points;
    points.reserve(travelers.size());
    for (const auto* t : sorted_travelers(travelers)) {
        points.push_back(t->origin_point);
    }
    return points;
}

double distance_sum(const GeoPoint& site, std::span<const GeoPoint> points, double radiusKm)
{
    CompensatedSum sum;
    for (const auto& p : points) {
        sum.add(haversine_distance(site, p, radiusKm));
    }
    return sum.value();
}

std::vector<const CapitalRecord*> boc_candidates(const GeoDataset& dataset, const std::vector<std::string>& allowlist)
{
    std::vector<const CapitalRecord*> result;
    if (allowlist.empty()) {
        for (const auto& cap : dataset.capitals()) {
            result.push_back(&cap);
        }
        return result;
    }

    for (const auto& code : allowlist) {
        const CapitalRecord* cap = dataset.find_capital(code);
        if (cap == nullptr) {
            throw UnknownCountry(code, "candidate list");
        }
        result.push_back(cap);
    }
    std::sort(result.begin(), result.end(), [](auto* a, auto* b) { return a->country_code < b->country_code; });
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

}

std::string_view to_string(ScenarioLabel label) noexcept
{
    switch (label) {
    case ScenarioLabel::Actual:
        return "Actual";
    case ScenarioLabel::BOC:
        return "BOC";
    case ScenarioLabel::BPS:
        return "BPS";
    }
    return "unknown";
}

double total_emissions(const EmissionModel& model, std::span<const ResolvedTraveler> travelers, const Airport& venueAirport)
{
    CompensatedSum sum;
    for (const auto* traveler : sorted_travelers(travelers)) {
        sum.add(trip_for(model, *traveler, venueAirport).round_trip_co2_kg);
    }
    return sum.value();
}

double savings_pct(double actualKg, double alternativeKg)
{
    if (actualKg == 0.0) {
        if (alternativeKg == 0.0) {
            return 0.0;
        }
        throw UndefinedSavings("savings undefined: actual total is zero but the alternative emits " + std::to_string(alternativeKg) + " kg");
    }
    return 100.0 * (actualKg - alternativeKg) / actualKg;
}

BocSelection optimal_location_boc(const GeoDataset& dataset, std::span<const ResolvedTraveler> travelers, const BocOptions& options)
{
    if (travelers.empty()) {
        throw EmptyTravelers("location search needs at least one traveler");
    }
    const auto candidates = boc_candidates(dataset, options.candidates);
    if (candidates.empty()) {
        throw EmptyCapitals("location search needs at least one candidate capital");
    }

    const auto points = sorted_origin_points(travelers);
    std::vector<double> sums(candidates.size());

    auto evaluate = [&](std::size_t first, std::size_t last) {
        for (std::size_t i = first; i < last; ++i) {
            sums[i] = distance_sum(candidates[i]->capital_location, points, options.radius_km);
        }
    };

    const std::size_t workers = std::clamp<std::size_t>(options.threads, 1, candidates.size());
    if (workers == 1) {
        evaluate(0, candidates.size());
    } else {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (candidates.size() + workers - 1) / workers;
        for (std::size_t first = 0; first < candidates.size(); first += chunk) {
            pool.emplace_back(evaluate, first, std::min(first + chunk, candidates.size()));
        }
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i < candidates.size(); ++i) {
        if (std::tie(sums[i], candidates[i]->country_code) < std::tie(sums[best], candidates[best]->country_code)) {
            best = i;
        }
    }

    auto [capital, airport] = capital_airport(dataset, candidates[best]->country_code);
    return {std::move(capital), std::move(airport), sums[best]};
}

BpsSelection optimal_location_bps(const GeoDataset& dataset, std::span<const PaperRecord> records, std::span<const ResolvedTraveler> travelers)
{
    if (records.empty()) {
        throw EmptyRecords("submission count needs at least one paper record");
    }

    std::map<std::string, std::size_t> counts;
    for (const auto& record : records) {
        ++counts[record.affiliation_country];
    }

    std::size_t top = 0;
    for (const auto& [code, count] : counts) {
        top = std::max(top, count);
    }

    const auto points = sorted_origin_points(travelers);
    const CapitalRecord* winner = nullptr;
    double winnerSum            = 0.0;
    // counts is ordered by country code, so a strict comparison keeps the smaller code on ties.
    for (const auto& [code, count] : counts) {
        if (count != top) {
            continue;
        }
        const CapitalRecord* cap = dataset.find_capital(code);
        if (cap == nullptr) {
            throw UnknownCountry(code, "most-submissions country has no capital record");
        }
        const double sum = distance_sum(cap->capital_location, points, kEarthRadiusKm);
        if (winner == nullptr || sum < winnerSum) {
            winner    = cap;
            winnerSum = sum;
        }
    }

    auto [capital, airport] = capital_airport(dataset, winner->country_code);
    return {std::move(capital), std::move(airport), top, winnerSum};
}

EditionEvaluation evaluate_edition(const GeoDataset& dataset, const EmissionModel& model, const ConferenceEdition& edition,
                                   std::span<const PaperRecord> records, const EvaluationOptions& options)
{
    Airport venueAirport;
    if (edition.venue_airport_iata) {
        const Airport* airport = dataset.find_airport(*edition.venue_airport_iata);
        if (airport == nullptr) {
            throw UnknownAirport("venue airport '" + *edition.venue_airport_iata + "' of " + edition.conference + " " +
                                 std::to_string(edition.year) + " is not in the airport dataset");
        }
        venueAirport = *airport;
    } else {
        const auto venue = resolve_city(dataset, edition.venue_city, edition.venue_country);
        venueAirport     = nearest_airport(dataset, venue.location, options.scope);
    }

    auto resolution = resolve_travelers(dataset, records, options.scope);
    const auto& travelers = resolution.travelers;

    EditionEvaluation result;
    result.edition        = edition;
    result.traveler_count = travelers.size();
    result.fallback_count = static_cast<std::size_t>(std::count_if(travelers.begin(), travelers.end(), [](const ResolvedTraveler& t) {
        return t.resolution == ResolutionQuality::CapitalFallback;
    }));

    result.boc = optimal_location_boc(dataset, travelers, {options.candidates, kEarthRadiusKm, options.threads});
    result.bps = optimal_location_bps(dataset, records, travelers);

    VenueScenario actual;
    actual.label        = ScenarioLabel::Actual;
    actual.country_code = edition.venue_country;
    actual.city         = edition.venue_city;
    actual.airport      = venueAirport;
    actual.total_co2_kg = total_emissions(model, travelers, venueAirport);
    actual.savings_pct  = 0.0;

    auto alternative = [&](ScenarioLabel label, const CapitalRecord& capital, const Airport& airport) {
        VenueScenario s;
        s.label        = label;
        s.country_code = capital.country_code;
        s.city         = capital.capital_city;
        s.airport      = airport;
        s.total_co2_kg = total_emissions(model, travelers, airport);
        try {
            s.savings_pct = savings_pct(actual.total_co2_kg, s.total_co2_kg);
        } catch (const UndefinedSavings&) {
            s.savings_pct.reset();
        }
        return s;
    };

    result.scenarios.push_back(actual);
    result.scenarios.push_back(alternative(ScenarioLabel::BOC, result.boc.capital, result.boc.airport));
    result.scenarios.push_back(alternative(ScenarioLabel::BPS, result.bps.capital, result.bps.airport));

    switch (edition.mode) {
    case EditionMode::InPerson:
        break;
    case EditionMode::Virtual:
        result.realized_savings_pct = 100.0;
        result.annotation           = "virtual: realized savings 100%; scenario totals are the in-person counterfactual at the announced venue";
        break;
    case EditionMode::Hybrid:
        for (auto& s : result.scenarios) {
            if (s.savings_pct) {
                s.hybrid_range = SavingsRange{*s.savings_pct, 100.0};
            }
        }
        result.annotation = "hybrid: savings range between the computed value and 100%";
        break;
    }

    result.warnings = std::move(resolution.warnings);
    return result;
}

}
