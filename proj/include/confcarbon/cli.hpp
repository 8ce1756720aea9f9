#pragma once

#include "confcarbon/geodata.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace confcarbon::cli {

enum ExitCode : int
{
    Success         = 0,
    ValidationFail  = 1,
    IoFail          = 2,
};

struct RunConfig
{
    GeoDataPaths geodata;
    std::optional<std::filesystem::path> model;
    std::vector<std::filesystem::path> editions;
    std::filesystem::path out_dir = "out";
    bool include_all_airports = false;
    std::vector<std::string> candidates; // empty: every country in the capitals file
    unsigned jobs = 1;
};

// Directory holding the bundled airports/capitals/cities files.
std::filesystem::path bundled_data_dir();
GeoDataPaths bundled_geodata();

// Writes results.csv, results.md, plot_data.csv and warnings.txt into out_dir.
int cmd_footprint(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses and cross-checks every input without computing anything.
int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& err);

// Prints the two alternative venue selections for each edition.
int cmd_optimize(const RunConfig& config, std::ostream& out, std::ostream& err);

// Full command line entry point; diagnostics go to err only.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}
