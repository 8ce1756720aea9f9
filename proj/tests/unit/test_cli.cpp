#include "confcarbon/cli.hpp"
#include "confcarbon/report.hpp"
#include "support.hpp"

#include <doctest.h>

#include <sstream>

using namespace confcarbon;

namespace {

struct Result
{
    int code = 0;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "confcarbon");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> e2e_geo_args()
{
    const auto p = test::e2e_geodata();
    return {"--airports", p.airports.string(), "--capitals", p.capitals.string(), "--cities", p.cities.string()};
}

std::vector<std::string> e2e_editions()
{
    std::vector<std::string> files;
    for (const auto& entry : std::filesystem::directory_iterator(test::fixture_dir() / "e2e" / "editions")) {
        files.push_back(entry.path().string());
    }
    std::sort(files.begin(), files.end());
    return files;
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

constexpr std::string_view kThreePapers = R"({
  "conference": "TEST", "year": 2021, "mode": "in_person",
  "venue": {"city": "Munich", "country_code": "DE"},
  "papers": [
    {"paper_id": "1", "city": "Beijing", "country_code": "CN"},
    {"paper_id": "2", "city": "Shanghai", "country_code": "CN"},
    {"paper_id": "3", "city": "Munich", "country_code": "DE"}
  ]
})";

}

TEST_CASE("footprint writes every output file")
{
    test::TempDir dir;
    const auto r = run_cli(concat(concat({"footprint", "--out", dir.path().string()}, e2e_geo_args()), e2e_editions()));
    REQUIRE(r.code == 0);
    CHECK(r.out == "editions: 6, rows: 18\n");
    CHECK(r.err.empty());

    const auto csv = test::slurp(dir.path() / "results.csv");
    CHECK(csv == test::slurp(std::filesystem::path(CONFCARBON_TEST_DIR) / "golden" / "results.csv"));
    CHECK(parse_results_csv(csv, "results.csv").size() == 18);
    CHECK(std::filesystem::exists(dir.path() / "results.md"));
    CHECK(test::slurp(dir.path() / "plot_data.csv").rfind("conference,year,scenario,tonnes\n", 0) == 0);

    const auto warnings = test::slurp(dir.path() / "warnings.txt");
    CHECK(warnings.rfind("# capital_fallback=1 airport_override=1\n", 0) == 0);
    CHECK(warnings.find("CONFA 2020\ta20-5\tcapital_fallback") != std::string::npos);
}

TEST_CASE("footprint output is byte-identical across runs and job counts")
{
    test::TempDir a;
    test::TempDir b;
    const auto base = concat(e2e_geo_args(), e2e_editions());
    REQUIRE(run_cli(concat({"footprint", "--out", a.path().string()}, base)).code == 0);
    REQUIRE(run_cli(concat({"footprint", "--jobs", "4", "--out", b.path().string()}, base)).code == 0);
    for (const char* name : {"results.csv", "results.md", "plot_data.csv", "warnings.txt"}) {
        CHECK(test::slurp(a.path() / name) == test::slurp(b.path() / name));
    }
}

TEST_CASE("missing input file exits with 2")
{
    test::TempDir dir;
    const auto r = run_cli(concat({"footprint", "--out", dir.path().string(), (dir.path() / "nope.json").string()}, e2e_geo_args()));
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("nope.json") != std::string::npos);

    CHECK(run_cli({"validate", "--airports", (dir.path() / "none.csv").string(), e2e_editions().front()}).code == 2);
}

TEST_CASE("invalid country code exits with 1 and names the paper")
{
    test::TempDir dir;
    const auto bad = dir.write("bad.json", R"({"conference":"X","year":2020,"mode":"in_person",
        "venue":{"city":"Alpha","country_code":"AA"},
        "papers":[{"paper_id":"p-17","city":"Alpha", "country_code":"usa"}]})");
    const auto f = run_cli(concat({"footprint", "--out", dir.path().string(), bad.string()}, e2e_geo_args()));
    CHECK(f.code == 1);
    CHECK(f.out.empty());
    CHECK(f.err.find("p-17") != std::string::npos);
    const auto r = run_cli(concat({"validate", bad.string()}, e2e_geo_args()));
    CHECK(r.code == 1);
    CHECK(r.err.find("p-17") != std::string::npos);
    CHECK(r.out.empty());
}

TEST_CASE("validate")
{
    SUBCASE("clean inputs")
    {
        const auto r = run_cli(concat(concat({"validate"}, e2e_geo_args()), e2e_editions()));
        CHECK(r.code == 0);
        CHECK(r.out.rfind("ok: 7 airports, 4 capitals, 7 cities, 6 editions", 0) == 0);
        CHECK(r.err.empty());
    }

    SUBCASE("duplicate airport reports both lines")
    {
        test::TempDir dir;
        auto airports = test::slurp(test::e2e_geodata().airports);
        airports += "ALF,Second Alpha,Alpha,AA,1,1,true\n";
        const auto path = dir.write("airports.csv", airports);
        auto args       = e2e_geo_args();
        args[1]         = path.string();
        const auto r    = run_cli(concat(concat({"validate"}, args), {e2e_editions().front()}));
        CHECK(r.code == 1);
        CHECK(r.err.find("duplicate IATA 'ALF' on lines 2 and 9") != std::string::npos);
        CHECK(r.out.empty());
    }

    SUBCASE("capital pointing at an unknown airport")
    {
        test::TempDir dir;
        auto capitals = test::slurp(test::e2e_geodata().capitals);
        capitals.replace(capitals.find("BRV"), 3, "ZZZ");
        const auto path = dir.write("capitals.csv", capitals);
        auto args       = e2e_geo_args();
        args[3]         = path.string();
        const auto r    = run_cli(concat(concat({"validate"}, args), {e2e_editions().front()}));
        CHECK(r.code == 1);
        CHECK(r.err.find("ZZZ") != std::string::npos);
    }

    SUBCASE("unknown candidate")
    {
        const auto r = run_cli(concat(concat({"validate", "--candidates", "AA,QQ"}, e2e_geo_args()), {e2e_editions().front()}));
        CHECK(r.code == 1);
        CHECK(r.err.find("'QQ'") != std::string::npos);
    }
}

TEST_CASE("optimize prints both selections")
{
    test::TempDir dir;
    const auto edition = dir.write("test.json", kThreePapers);
    const auto r       = run_cli({"optimize", edition.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("TEST 2021 (3 papers)\n") == 0);
    CHECK(r.out.find("BPS: CN (Beijing, PEK) papers=2/3") != std::string::npos);
    CHECK(r.out.find("BOC: ") != std::string::npos);
    CHECK(r.err.empty());

    const auto restricted = run_cli({"optimize", "--candidates", "DE,FR", edition.string()});
    REQUIRE(restricted.code == 0);
    CHECK(restricted.out.find("BOC: DE (Berlin, BER)") != std::string::npos);
}

TEST_CASE("command line errors")
{
    CHECK(run_cli({}).code == 1);
    CHECK(run_cli({"footprint"}).code == 1);
    CHECK(run_cli({"bogus"}).code == 1);
    const auto v = run_cli({"--version"});
    CHECK(v.code == 0);
    CHECK(v.out.find("0.1.0") != std::string::npos);
}
