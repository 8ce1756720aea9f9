#pragma once

#include "confcarbon/optimize.hpp"

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace confcarbon {

struct EditionReport
{
    std::string conference;
    int year = 0;
    EditionMode mode = EditionMode::InPerson;
    std::vector<VenueScenario> scenarios;
    std::size_t traveler_count = 0;
    std::size_t fallback_count = 0;
    std::string annotation;
};

EditionReport make_report(const EditionEvaluation& evaluation);

struct TableRow
{
    std::string conference;
    int year = 0;
    EditionMode mode = EditionMode::InPerson;
    ScenarioLabel scenario = ScenarioLabel::Actual;
    std::string country;
    std::string city;
    std::string airport;
    double total_tonnes = 0.0;
    std::optional<double> savings_pct; // empty when undefined
    std::size_t traveler_count = 0;
    std::size_t fallback_count = 0;

    friend bool operator==(const TableRow&, const TableRow&) = default;
};

// One row per edition and scenario, sorted by (year, conference, scenario).
std::vector<TableRow> build_table(std::span<const EditionReport> reports);

struct ConferenceSummary
{
    std::string conference;
    std::map<int, double> per_year_actual_tonnes; // years without an edition are absent
    double mean_actual_tonnes = 0.0;
};

// Actual-venue totals per conference and year, sorted by conference.
// Virtual and hybrid editions contribute their in-person counterfactual.
std::vector<ConferenceSummary> per_year_totals(std::span<const EditionReport> reports);

inline constexpr std::string_view kResultsCsvHeader =
    "conference,year,mode,scenario,country,city,airport,total_tonnes,savings_pct,traveler_count,fallback_count";

// Full round-trip precision; an undefined saving is an empty field.
std::string render_csv(std::span<const TableRow> rows);

// Pipe table with one line per edition (Actual, BOC, BPS side by side), tonnes
// with two decimals and savings with one, followed by per-conference means.
std::string render_markdown(std::span<const TableRow> rows);

// Tidy plot data: conference,year,scenario,tonnes.
std::string render_plot_csv(std::span<const TableRow> rows);

// Parses a results.csv produced by render_csv.
std::vector<TableRow> parse_results_csv(std::string_view text, std::string_view sourceName);

std::string format_savings(std::optional<double> pct);
std::string format_tonnes(double tonnes);

// Throw IoError when the file cannot be written.
void write_text_file(const std::filesystem::path& path, std::string_view content);
void emit_csv(std::span<const TableRow> rows, const std::filesystem::path& path);
void emit_markdown(std::span<const TableRow> rows, const std::filesystem::path& path);

}
