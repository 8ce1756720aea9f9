#pragma once

#include "confcarbon/geodata.hpp"

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace confcarbon {

enum class EditionMode
{
    InPerson,
    Virtual,
    Hybrid,
};

// Wire names: "in_person", "virtual", "hybrid".
std::string_view to_string(EditionMode mode) noexcept;
std::optional<EditionMode> parse_edition_mode(std::string_view text) noexcept;

// Virtual and hybrid editions keep their pre-announced venue so that the
// in-person counterfactual can still be computed.
struct ConferenceEdition
{
    std::string conference;
    int year = 0;
    EditionMode mode = EditionMode::InPerson;
    std::string venue_city;
    std::string venue_country;
    std::optional<std::string> venue_airport_iata;

    friend bool operator==(const ConferenceEdition&, const ConferenceEdition&) = default;
};

// One accepted paper; it stands for exactly one traveler, the first author.
struct PaperRecord
{
    std::string paper_id;
    std::string affiliation_city;
    std::string affiliation_country;
    std::optional<std::string> origin_airport_override;

    friend bool operator==(const PaperRecord&, const PaperRecord&) = default;
};

struct EditionInput
{
    ConferenceEdition edition;
    std::vector<PaperRecord> papers;
};

/// Reads an edition document.
///
/// Malformed JSON raises ParseError with the byte offset. Every schema problem
/// (missing or mistyped field, bad code, year out of range, duplicate paper_id)
/// is collected and raised together as one ValidationError; each issue starts
/// with its JSON path, and paper issues also name the paper_id when known.
EditionInput parse_edition(const std::filesystem::path& path);
EditionInput parse_edition_json(std::string_view text, std::string_view sourceName);

struct ResolvedTraveler
{
    std::string paper_id;
    GeoPoint origin_point;
    Airport origin_airport;
    ResolutionQuality resolution = ResolutionQuality::Exact;
};

enum class WarningKind
{
    CapitalFallback,
    AirportOverride,
};

std::string_view to_string(WarningKind kind) noexcept;

struct ResolutionWarning
{
    std::string paper_id;
    WarningKind kind = WarningKind::CapitalFallback;
    std::string detail;

    friend bool operator==(const ResolutionWarning&, const ResolutionWarning&) = default;
};

struct TravelerResolution
{
    std::vector<ResolvedTraveler> travelers; // same order as the input records
    std::vector<ResolutionWarning> warnings;
};

// Throws UnknownCountry or UnknownAirportOverride naming the offending paper_id.
TravelerResolution resolve_travelers(const GeoDataset& dataset, std::span<const PaperRecord> records,
                                     AirportScope scope = AirportScope::InternationalOnly);

}
