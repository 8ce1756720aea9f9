#include "confcarbon/report.hpp"
#include "confcarbon/csv.hpp"
#include "confcarbon/error.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <tuple>

namespace confcarbon {

namespace {

constexpr double kKgPerTonne = 1000.0;

auto sort_key(const TableRow& r)
{
    return std::make_tuple(r.year, std::cref(r.conference), r.scenario, r.mode, std::cref(r.country), std::cref(r.city),
                           std::cref(r.airport), r.total_tonnes, r.savings_pct, r.traveler_count, r.fallback_count);
}

std::optional<ScenarioLabel> parse_scenario(std::string_view text)
{
    for (auto label : {ScenarioLabel::Actual, ScenarioLabel::BOC, ScenarioLabel::BPS}) {
        if (to_string(label) == text) {
            return label;
        }
    }
    return std::nullopt;
}

std::string markdown_cell(std::string_view text)
{
    std::string out;
    for (char c : text) {
        if (c == '|') {
            out += "\\|";
        } else if (c == '\n' || c == '\r') {
            out.push_back(' ');
        } else {
            out.push_back(c);
        }
    }
    return out;
}

std::string location_text(const TableRow& row)
{
    return row.country + " (" + row.city + ", " + row.airport + ")";
}

std::vector<ConferenceSummary> summarize(std::span<const TableRow> rows)
{
    std::map<std::string, std::map<int, double>> grouped;
    for (const auto& row : rows) {
        if (row.scenario == ScenarioLabel::Actual) {
            grouped[row.conference][row.year] += row.total_tonnes;
        }
    }

    std::vector<ConferenceSummary> result;
    for (auto& [conference, years] : grouped) {
        ConferenceSummary summary;
        summary.conference             = conference;
        summary.per_year_actual_tonnes = std::move(years);
        double sum = 0.0;
        for (const auto& [year, tonnes] : summary.per_year_actual_tonnes) {
            sum += tonnes;
        }
        summary.mean_actual_tonnes = sum / static_cast<double>(summary.per_year_actual_tonnes.size());
        result.push_back(std::move(summary));
    }
    return result;
}

}

EditionReport make_report(const EditionEvaluation& evaluation)
{
    EditionReport report;
    report.conference     = evaluation.edition.conference;
    report.year           = evaluation.edition.year;
    report.mode           = evaluation.edition.mode;
    report.scenarios      = evaluation.scenarios;
    report.traveler_count = evaluation.traveler_count;
    report.fallback_count = evaluation.fallback_count;
    report.annotation     = evaluation.annotation;
    return report;
}

std::vector<TableRow> build_table(std::span<const EditionReport> reports)
{
    std::vector<TableRow> rows;
    for (const auto& report : reports) {
        for (const auto& scenario : report.scenarios) {
            TableRow row;
            row.conference     = report.conference;
            row.year           = report.year;
            row.mode           = report.mode;
            row.scenario       = scenario.label;
            row.country        = scenario.country_code;
            row.city           = scenario.city;
            row.airport        = scenario.airport.iata;
            row.total_tonnes   = scenario.total_co2_kg / kKgPerTonne;
            row.savings_pct    = scenario.savings_pct;
            row.traveler_count = report.traveler_count;
            row.fallback_count = report.fallback_count;
            rows.push_back(std::move(row));
        }
    }
    std::sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) { return sort_key(a) < sort_key(b); });
    return rows;
}

std::vector<ConferenceSummary> per_year_totals(std::span<const EditionReport> reports)
{
    return summarize(build_table(reports));
}

std::string format_savings(std::optional<double> pct)
{
    return pct ? csv::format_fixed(*pct, 1) + "%" : std::string("undefined");
}

std::string format_tonnes(double tonnes)
{
    return csv::format_fixed(tonnes, 2);
}

std::string render_csv(std::span<const TableRow> rows)
{
    std::string out(kResultsCsvHeader);
    out += '\n';
    for (const auto& r : rows) {
        out += csv::join({r.conference, std::to_string(r.year), std::string(to_string(r.mode)), std::string(to_string(r.scenario)), r.country,
                          r.city, r.airport, csv::format_double(r.total_tonnes), r.savings_pct ? csv::format_double(*r.savings_pct) : std::string(),
                          std::to_string(r.traveler_count), std::to_string(r.fallback_count)});
        out += '\n';
    }
    return out;
}

std::string render_markdown(std::span<const TableRow> rows)
{
    std::string out = "| Year | Conf. Name | Actual location | Actual total (t) | Optimal location BOC | Savings in CO2 - location BOC | "
                      "Optimal location BPS | Savings in CO2 - location BPS |\n"
                      "|---|---|---|---|---|---|---|---|\n";

    bool anyVirtual = false;
    bool anyHybrid  = false;
    for (std::size_t i = 0; i < rows.size();) {
        // Rows of one edition are adjacent and start with the Actual scenario.
        std::size_t end = i + 1;
        while (end < rows.size() && rows[end].scenario != ScenarioLabel::Actual) {
            ++end;
        }

        const TableRow* actual = nullptr;
        const TableRow* boc    = nullptr;
        const TableRow* bps    = nullptr;
        for (std::size_t j = i; j < end; ++j) {
            switch (rows[j].scenario) {
            case ScenarioLabel::Actual:
                actual = &rows[j];
                break;
            case ScenarioLabel::BOC:
                boc = &rows[j];
                break;
            case ScenarioLabel::BPS:
                bps = &rows[j];
                break;
            }
        }
        const TableRow& first = rows[i];
        i = end;

        auto savings = [&](const TableRow* r) -> std::string {
            if (r == nullptr) {
                return "";
            }
            std::string text = format_savings(r->savings_pct);
            if (r->mode == EditionMode::Hybrid && r->savings_pct) {
                text += " (hybrid: " + format_savings(r->savings_pct) + " to 100.0%)";
            }
            return text;
        };

        std::string actualLocation;
        if (actual != nullptr) {
            actualLocation = location_text(*actual);
            if (actual->mode == EditionMode::Virtual) {
                actualLocation += " - Virtual";
                anyVirtual = true;
            } else if (actual->mode == EditionMode::Hybrid) {
                actualLocation += " - Hybrid";
                anyHybrid = true;
            }
        }

        out += "| " + std::to_string(first.year) + " | " + markdown_cell(first.conference) + " | " + markdown_cell(actualLocation) + " | " +
               (actual ? format_tonnes(actual->total_tonnes) : std::string()) + " | " + (boc ? markdown_cell(location_text(*boc)) : std::string()) +
               " | " + savings(boc) + " | " + (bps ? markdown_cell(location_text(*bps)) : std::string()) + " | " + savings(bps) + " |\n";
    }

    if (anyVirtual || anyHybrid) {
        out += "\n";
        if (anyVirtual) {
            out += "Virtual editions: realized savings 100.0%; totals are the in-person counterfactual at the announced venue.\n";
        }
        if (anyHybrid) {
            out += "Hybrid editions: savings lie between the computed value and 100.0%.\n";
        }
    }

    const auto summaries = summarize(rows);
    if (!summaries.empty()) {
        out += "\n| Conference | Editions | Mean actual total (t) |\n|---|---|---|\n";
        for (const auto& s : summaries) {
            out += "| " + markdown_cell(s.conference) + " | " + std::to_string(s.per_year_actual_tonnes.size()) + " | " +
                   format_tonnes(s.mean_actual_tonnes) + " |\n";
        }
    }
    return out;
}

std::string render_plot_csv(std::span<const TableRow> rows)
{
    std::string out = "conference,year,scenario,tonnes\n";
    for (const auto& r : rows) {
        out += csv::join({r.conference, std::to_string(r.year), std::string(to_string(r.scenario)), csv::format_double(r.total_tonnes)});
        out += '\n';
    }
    return out;
}

std::vector<TableRow> parse_results_csv(std::string_view text, std::string_view sourceName)
{
    auto records = csv::parse(text, sourceName);
    if (records.empty() || csv::join(records.front().fields) != kResultsCsvHeader) {
        throw ParseError(std::string(sourceName) + ": missing or unexpected results header");
    }

    std::vector<TableRow> rows;
    for (std::size_t i = 1; i < records.size(); ++i) {
        const auto& rec = records[i];
        const std::string where = std::string(sourceName) + ":" + std::to_string(rec.line);
        if (rec.fields.size() != 11) {
            throw ParseError(where + ": expected 11 fields");
        }
        const auto& f = rec.fields;

        TableRow row;
        row.conference = f[0];
        auto year      = csv::to_integer(f[1]);
        auto mode      = parse_edition_mode(f[2]);
        auto scenario  = parse_scenario(f[3]);
        auto total     = csv::to_double(f[7]);
        auto travelers = csv::to_integer(f[9]);
        auto fallbacks = csv::to_integer(f[10]);
        if (!year || !mode || !scenario || !total || !travelers || !fallbacks || *travelers < 0 || *fallbacks < 0) {
            throw ParseError(where + ": malformed results row");
        }
        row.year         = static_cast<int>(*year);
        row.mode         = *mode;
        row.scenario     = *scenario;
        row.country      = f[4];
        row.city         = f[5];
        row.airport      = f[6];
        row.total_tonnes = *total;
        if (!f[8].empty()) {
            row.savings_pct = csv::to_double(f[8]);
            if (!row.savings_pct) {
                throw ParseError(where + ": malformed savings_pct");
            }
        }
        row.traveler_count = static_cast<std::size_t>(*travelers);
        row.fallback_count = static_cast<std::size_t>(*fallbacks);
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_text_file(const std::filesystem::path& path, std::string_view content)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.close();
    if (!out) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

void emit_csv(std::span<const TableRow> rows, const std::filesystem::path& path)
{
    write_text_file(path, render_csv(rows));
}

void emit_markdown(std::span<const TableRow> rows, const std::filesystem::path& path)
{
    write_text_file(path, render_markdown(rows));
}

}
