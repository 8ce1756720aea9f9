#include "confcarbon/records.hpp"
#include "confcarbon/error.hpp"

#include <json.hpp>

#include <set>

namespace confcarbon {

using json = nlohmann::json;

namespace {

constexpr int kMinYear = 1950;
constexpr int kMaxYear = 2100;

class IssueCollector
{
public:
    void add(std::string path, std::string message) { _issues.push_back(std::move(path) + ": " + std::move(message)); }

    bool empty() const noexcept { return _issues.empty(); }
    std::vector<std::string> take() { return std::move(_issues); }

    std::optional<std::string> string_field(const json& obj, const std::string& parent, const char* key, bool required = true)
    {
        const std::string path = parent + "." + key;
        auto it = obj.find(key);
        if (it == obj.end() || it->is_null()) {
            if (required) {
                add(path, "missing required string");
            }
            return std::nullopt;
        }
        if (!it->is_string()) {
            add(path, std::string("expected string, found ") + it->type_name());
            return std::nullopt;
        }
        return it->get<std::string>();
    }

private:
    std::vector<std::string> _issues;
};

std::optional<std::string> checked_country(IssueCollector& issues, const json& obj, const std::string& parent, const std::string& label = {})
{
    auto code = issues.string_field(obj, parent, "country_code");
    if (code && !is_country_code(*code)) {
        issues.add(parent + ".country_code", "invalid country code '" + *code + "'" + label);
        return std::nullopt;
    }
    return code;
}

std::optional<std::string> checked_iata(IssueCollector& issues, const json& obj, const std::string& parent, const char* key,
                                        const std::string& label = {})
{
    auto code = issues.string_field(obj, parent, key, false);
    if (code && !is_iata_code(*code)) {
        issues.add(parent + "." + key, "invalid IATA code '" + *code + "'" + label);
        return std::nullopt;
    }
    return code;
}

}

std::string_view to_string(EditionMode mode) noexcept
{
    switch (mode) {
    case EditionMode::InPerson:
        return "in_person";
    case EditionMode::Virtual:
        return "virtual";
    case EditionMode::Hybrid:
        return "hybrid";
    }
    return "unknown";
}

std::optional<EditionMode> parse_edition_mode(std::string_view text) noexcept
{
    if (text == "in_person") {
        return EditionMode::InPerson;
    }
    if (text == "virtual") {
        return EditionMode::Virtual;
    }
    if (text == "hybrid") {
        return EditionMode::Hybrid;
    }
    return std::nullopt;
}

std::string_view to_string(WarningKind kind) noexcept
{
    switch (kind) {
    case WarningKind::CapitalFallback:
        return "capital_fallback";
    case WarningKind::AirportOverride:
        return "airport_override";
    }
    return "unknown";
}

EditionInput parse_edition_json(std::string_view text, std::string_view sourceName)
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

    IssueCollector issues;
    EditionInput result;
    auto& edition = result.edition;

    if (auto v = issues.string_field(doc, "$", "conference")) {
        if (v->empty()) {
            issues.add("$.conference", "must not be empty");
        }
        edition.conference = *v;
    }

    if (auto it = doc.find("year"); it == doc.end() || it->is_null()) {
        issues.add("$.year", "missing required integer");
    } else if (!it->is_number_integer()) {
        issues.add("$.year", std::string("expected integer, found ") + it->type_name());
    } else {
        const auto year = it->get<long long>();
        if (year < kMinYear || year > kMaxYear) {
            issues.add("$.year", "year " + std::to_string(year) + " outside [" + std::to_string(kMinYear) + ", " + std::to_string(kMaxYear) + "]");
        } else {
            edition.year = static_cast<int>(year);
        }
    }

    if (auto v = issues.string_field(doc, "$", "mode")) {
        if (auto mode = parse_edition_mode(*v)) {
            edition.mode = *mode;
        } else {
            issues.add("$.mode", "expected one of in_person, virtual, hybrid; found '" + *v + "'");
        }
    }

    if (auto it = doc.find("venue"); it == doc.end() || !it->is_object()) {
        issues.add("$.venue", it == doc.end() ? "missing required object" : std::string("expected object, found ") + it->type_name());
    } else {
        const json& venue = *it;
        if (auto city = issues.string_field(venue, "$.venue", "city")) {
            edition.venue_city = *city;
        }
        if (auto code = checked_country(issues, venue, "$.venue")) {
            edition.venue_country = *code;
        }
        edition.venue_airport_iata = checked_iata(issues, venue, "$.venue", "airport_iata");
    }

    if (auto it = doc.find("papers"); it == doc.end() || !it->is_array()) {
        issues.add("$.papers", it == doc.end() ? "missing required array" : std::string("expected array, found ") + it->type_name());
    } else {
        std::set<std::string> seen;
        std::size_t index = 0;
        for (const json& entry : *it) {
            const std::string path = "$.papers[" + std::to_string(index++) + "]";
            if (!entry.is_object()) {
                issues.add(path, std::string("expected object, found ") + entry.type_name());
                continue;
            }

            PaperRecord paper;
            std::string label;
            if (auto id = issues.string_field(entry, path, "paper_id")) {
                if (id->empty()) {
                    issues.add(path + ".paper_id", "must not be empty");
                } else if (!seen.insert(*id).second) {
                    issues.add(path + ".paper_id", "duplicate paper_id '" + *id + "'");
                }
                paper.paper_id = *id;
                label          = " (paper_id '" + *id + "')";
            }
            if (auto city = issues.string_field(entry, path, "city")) {
                paper.affiliation_city = *city;
            }
            if (auto code = checked_country(issues, entry, path, label)) {
                paper.affiliation_country = *code;
            }
            paper.origin_airport_override = checked_iata(issues, entry, path, "origin_airport_iata", label);
            result.papers.push_back(std::move(paper));
        }
    }

    if (!issues.empty()) {
        auto list = issues.take();
        for (auto& issue : list) {
            issue = std::string(sourceName) + ": " + issue;
        }
        throw ValidationError(std::move(list));
    }
    return result;
}

EditionInput parse_edition(const std::filesystem::path& path)
{
    return parse_edition_json(read_text_file(path), path.string());
}

TravelerResolution resolve_travelers(const GeoDataset& dataset, std::span<const PaperRecord> records, AirportScope scope)
{
    TravelerResolution result;
    result.travelers.reserve(records.size());

    for (const auto& record : records) {
        CityResolution where;
        try {
            where = resolve_city(dataset, record.affiliation_city, record.affiliation_country);
        } catch (const UnknownCountry& e) {
            throw UnknownCountry(e.country_code(), "paper_id '" + record.paper_id + "'");
        }

        ResolvedTraveler traveler;
        traveler.paper_id     = record.paper_id;
        traveler.origin_point = where.location;
        traveler.resolution   = where.quality;

        if (where.quality == ResolutionQuality::CapitalFallback) {
            result.warnings.push_back({record.paper_id, WarningKind::CapitalFallback,
                                       "city '" + record.affiliation_city + "' not in gazetteer; using capital of " + record.affiliation_country});
        }

        if (record.origin_airport_override) {
            const Airport* airport = dataset.find_airport(*record.origin_airport_override);
            if (airport == nullptr) {
                throw UnknownAirportOverride("unknown origin airport '" + *record.origin_airport_override + "' (paper_id '" + record.paper_id + "')");
            }
            traveler.origin_airport = *airport;
            result.warnings.push_back({record.paper_id, WarningKind::AirportOverride, "origin airport overridden to " + airport->iata});
        } else {
            traveler.origin_airport = nearest_airport(dataset, traveler.origin_point, scope);
        }

        result.travelers.push_back(std::move(traveler));
    }
    return result;
}

}
