#include "confcarbon/cli.hpp"
#include "confcarbon/csv.hpp"
#include "confcarbon/error.hpp"
#include "confcarbon/optimize.hpp"
#include "confcarbon/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <exception>
#include <functional>
#include <iostream>
#include <thread>

#ifndef CONFCARBON_DATA_DIR
#define CONFCARBON_DATA_DIR "data"
#endif

namespace confcarbon::cli {

namespace fs = std::filesystem;

namespace {

constexpr const char* kVersion = "0.1.0";

int guarded(std::ostream& err, const std::function<int()>& body)
{
    try {
        return body();
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return IoFail;
    } catch (const fs::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return IoFail;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return ValidationFail;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return ValidationFail;
    }
}

struct Inputs
{
    GeoDataset dataset;
    EmissionModel model;
    std::vector<EditionInput> editions;
};

Inputs load_inputs(const RunConfig& config)
{
    if (config.editions.empty()) {
        throw ValidationError({"at least one edition file is required"});
    }

    Inputs inputs;
    inputs.dataset = load_geodata(config.geodata);
    if (config.model) {
        inputs.model = load_emission_model(*config.model);
    }
    for (const auto& path : config.editions) {
        inputs.editions.push_back(parse_edition(path));
    }
    return inputs;
}

AirportScope scope_of(const RunConfig& config)
{
    return config.include_all_airports ? AirportScope::All : AirportScope::InternationalOnly;
}

std::string edition_name(const ConferenceEdition& e)
{
    return e.conference + " " + std::to_string(e.year);
}

std::string location(const CapitalRecord& capital, const Airport& airport)
{
    return capital.country_code + " (" + capital.capital_city + ", " + airport.iata + ")";
}

// Evaluates every edition, optionally on several threads; results keep input order.
std::vector<EditionEvaluation> evaluate_all(const Inputs& inputs, const RunConfig& config)
{
    const std::size_t count = inputs.editions.size();
    std::vector<std::optional<EditionEvaluation>> results(count);
    std::vector<std::exception_ptr> failures(count);

    const EvaluationOptions options{scope_of(config), config.candidates, 1};
    auto work = [&](std::size_t i) {
        try {
            const auto& input = inputs.editions[i];
            results[i]        = evaluate_edition(inputs.dataset, inputs.model, input.edition, input.papers, options);
        } catch (...) {
            failures[i] = std::current_exception();
        }
    };

    const std::size_t workers = std::clamp<std::size_t>(config.jobs, 1, std::max<std::size_t>(count, 1));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) {
            work(i);
        }
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < count; i += workers) {
                    work(i);
                }
            });
        }
    }

    std::vector<EditionEvaluation> evaluations;
    for (std::size_t i = 0; i < count; ++i) {
        if (failures[i]) {
            std::rethrow_exception(failures[i]);
        }
        evaluations.push_back(std::move(*results[i]));
    }
    return evaluations;
}

std::string render_warnings(std::vector<const EditionEvaluation*> evaluations)
{
    std::stable_sort(evaluations.begin(), evaluations.end(), [](auto* a, auto* b) {
        return std::tie(a->edition.year, a->edition.conference) < std::tie(b->edition.year, b->edition.conference);
    });

    std::string out;
    std::size_t fallbacks = 0;
    std::size_t overrides = 0;
    for (const auto* ev : evaluations) {
        for (const auto& w : ev->warnings) {
            (w.kind == WarningKind::CapitalFallback ? fallbacks : overrides)++;
            out += edition_name(ev->edition) + "\t" + w.paper_id + "\t" + std::string(to_string(w.kind)) + "\t" + w.detail + "\n";
        }
    }
    return "# capital_fallback=" + std::to_string(fallbacks) + " airport_override=" + std::to_string(overrides) + "\n" + out;
}

void add_common_options(CLI::App& cmd, RunConfig& config)
{
    cmd.add_option("editions", config.editions, "Edition JSON files")->required();
    cmd.add_option("--airports", config.geodata.airports, "Airports CSV")->capture_default_str();
    cmd.add_option("--capitals", config.geodata.capitals, "Capitals CSV")->capture_default_str();
    cmd.add_option("--cities", config.geodata.cities, "City gazetteer CSV")->capture_default_str();
    cmd.add_option("--model", config.model, "Emission model JSON (defaults when absent)");
    cmd.add_flag("--include-all-airports", config.include_all_airports, "Consider non-international airports in nearest-airport search");
    cmd.add_option("--candidates", config.candidates, "Comma-separated country codes eligible as minimum-distance venue")->delimiter(',');
}

}

fs::path bundled_data_dir()
{
    return fs::path(CONFCARBON_DATA_DIR);
}

GeoDataPaths bundled_geodata()
{
    const auto dir = bundled_data_dir();
    return {dir / "airports.csv", dir / "capitals.csv", dir / "cities.csv"};
}

int cmd_footprint(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const Inputs inputs = load_inputs(config);
        const auto evaluations = evaluate_all(inputs, config);

        std::vector<EditionReport> reports;
        std::vector<const EditionEvaluation*> evaluationPtrs;
        for (const auto& ev : evaluations) {
            reports.push_back(make_report(ev));
            evaluationPtrs.push_back(&ev);
        }
        const auto rows = build_table(reports);

        fs::create_directories(config.out_dir);
        emit_csv(rows, config.out_dir / "results.csv");
        emit_markdown(rows, config.out_dir / "results.md");
        write_text_file(config.out_dir / "plot_data.csv", render_plot_csv(rows));
        write_text_file(config.out_dir / "warnings.txt", render_warnings(evaluationPtrs));

        out << "editions: " << evaluations.size() << ", rows: " << rows.size() << '\n';
        return static_cast<int>(Success);
    });
}

int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const Inputs inputs = load_inputs(config);
        const auto& ds      = inputs.dataset;

        std::vector<std::string> issues;
        for (const auto& code : config.candidates) {
            if (ds.find_capital(code) == nullptr) {
                issues.push_back("--candidates: unknown country '" + code + "'");
            }
        }

        std::size_t paperCount = 0;
        for (std::size_t i = 0; i < inputs.editions.size(); ++i) {
            const auto& [edition, papers] = inputs.editions[i];
            const std::string source      = config.editions[i].string();
            paperCount += papers.size();

            if (papers.empty()) {
                issues.push_back(source + ": $.papers: edition has no papers");
            }
            if (ds.find_capital(edition.venue_country) == nullptr) {
                issues.push_back(source + ": $.venue.country_code: unknown country '" + edition.venue_country + "'");
            }
            if (edition.venue_airport_iata && ds.find_airport(*edition.venue_airport_iata) == nullptr) {
                issues.push_back(source + ": $.venue.airport_iata: unknown airport '" + *edition.venue_airport_iata + "'");
            }
            for (std::size_t j = 0; j < papers.size(); ++j) {
                const auto& p          = papers[j];
                const std::string path = source + ": $.papers[" + std::to_string(j) + "]";
                if (ds.find_capital(p.affiliation_country) == nullptr) {
                    issues.push_back(path + ".country_code: unknown country '" + p.affiliation_country + "' (paper_id '" + p.paper_id + "')");
                }
                if (p.origin_airport_override && ds.find_airport(*p.origin_airport_override) == nullptr) {
                    issues.push_back(path + ".origin_airport_iata: unknown airport '" + *p.origin_airport_override + "' (paper_id '" + p.paper_id + "')");
                }
            }
        }

        if (!issues.empty()) {
            throw ValidationError(std::move(issues));
        }

        out << "ok: " << ds.airports().size() << " airports, " << ds.capitals().size() << " capitals, " << ds.cities().size() << " cities, "
            << inputs.editions.size() << " editions, " << paperCount << " papers\n";
        return static_cast<int>(Success);
    });
}

int cmd_optimize(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const Inputs inputs = load_inputs(config);

        std::string text;
        for (const auto& [edition, papers] : inputs.editions) {
            const auto resolved = resolve_travelers(inputs.dataset, papers, scope_of(config));
            const auto boc      = optimal_location_boc(inputs.dataset, resolved.travelers, {config.candidates, kEarthRadiusKm, config.jobs});
            const auto bps      = optimal_location_bps(inputs.dataset, papers, resolved.travelers);

            text += edition_name(edition) + " (" + std::to_string(papers.size()) + " papers)\n";
            text += "BOC: " + location(boc.capital, boc.airport) + " distance_sum_km=" + csv::format_fixed(boc.distance_sum_km, 3) + "\n";
            text += "BPS: " + location(bps.capital, bps.airport) + " papers=" + std::to_string(bps.paper_count) + "/" +
                    std::to_string(papers.size()) + " distance_sum_km=" + csv::format_fixed(bps.distance_sum_km, 3) + "\n";
        }
        out << text;
        return static_cast<int>(Success);
    });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Conference air-travel CO2 footprint and venue optimisation"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    RunConfig config;
    config.geodata = bundled_geodata();

    auto* footprint = app.add_subcommand("footprint", "Compute emissions and savings tables for editions");
    add_common_options(*footprint, config);
    footprint->add_option("--out", config.out_dir, "Output directory")->capture_default_str();
    footprint->add_option("--jobs", config.jobs, "Editions evaluated in parallel")->check(CLI::Range(1u, 256u))->capture_default_str();

    auto* optimize = app.add_subcommand("optimize", "Print the minimum-distance and most-submissions venue choices");
    add_common_options(*optimize, config);

    auto* validate = app.add_subcommand("validate", "Validate geodata, model and edition files");
    add_common_options(*validate, config);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        return ValidationFail;
    }

    if (footprint->parsed()) {
        return cmd_footprint(config, out, err);
    }
    if (optimize->parsed()) {
        return cmd_optimize(config, out, err);
    }
    return cmd_validate(config, out, err);
}

}
