#include "confcarbon/emissions.hpp"
#include "confcarbon/error.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace confcarbon;

TEST_CASE("segment_emissions with default parameters")
{
    const EmissionModel model;
    CHECK(segment_emissions(model, 0.0) == 0.0);
    CHECK(segment_emissions(model, 1000.0) == doctest::Approx(274.845).epsilon(1e-12));
    CHECK(segment_emissions(model, 5000.0) == doctest::Approx(769.345).epsilon(1e-12));
    CHECK(segment_emissions(model, 2000.0) == doctest::Approx(408.525).epsilon(1e-12));
}

TEST_CASE("band edges belong to the higher band")
{
    const EmissionModel model;
    CHECK(model.factor_for(1499.999) == 0.251);
    CHECK(model.factor_for(1500.0) == 0.195);
    CHECK(model.factor_for(4000.0) == 0.151);
    CHECK(segment_emissions(model, 1405.0) == doctest::Approx(1500.0 * 0.195));
    CHECK(segment_emissions(model, 3905.0) == doctest::Approx(4000.0 * 0.151));
}

TEST_CASE("multi_segment_emissions charges every leg as a flight")
{
    const EmissionModel model;
    CHECK(multi_segment_emissions(model, {}) == 0.0);
    const std::vector<double> one{1000.0};
    CHECK(multi_segment_emissions(model, one) == doctest::Approx(274.845));
    const std::vector<double> two{1000.0, 1000.0};
    CHECK(multi_segment_emissions(model, two) == doctest::Approx(549.69));
    CHECK(multi_segment_emissions(model, two) >= segment_emissions(model, 2000.0));
}

TEST_CASE("trip_for")
{
    const EmissionModel model;
    const auto jfk = test::make_airport("JFK", "US", 40.6413, -73.7781);
    const auto lhr = test::make_airport("LHR", "GB", 51.4700, -0.4543);
    const auto traveler = test::make_traveler("p1", jfk.location, jfk);

    const auto same = trip_for(model, traveler, jfk);
    CHECK(same.one_way_km == 0.0);
    CHECK(same.round_trip_co2_kg == 0.0);

    const auto transatlantic = trip_for(model, traveler, lhr);
    CHECK(transatlantic.paper_id == "p1");
    CHECK(transatlantic.origin.iata == "JFK");
    CHECK(transatlantic.destination.iata == "LHR");
    // 2 * (5540.011317976541 + 95) * 0.151 from the oracle distance.
    CHECK(transatlantic.round_trip_co2_kg == doctest::Approx(1701.7734180289153).epsilon(1e-12));

    // 1000 km apart along the equator.
    const double lon = 1000.0 / 6371.0 * 180.0 / 3.14159265358979323846;
    const auto a = test::make_airport("AAA", "AA", 0, 0);
    const auto b = test::make_airport("BBB", "AA", 0, lon);
    CHECK(trip_for(model, test::make_traveler("x", a.location, a), b).round_trip_co2_kg == doctest::Approx(549.69).epsilon(1e-9));
}

TEST_CASE("emission model properties")
{
    const EmissionModel model;
    const EmissionModel doubled(95.0, {1500.0, 4000.0}, {0.251, 0.195, 0.151}, 2.0);
    const EmissionModel noDetour(0.0, {1500.0, 4000.0}, {0.251, 0.195, 0.151}, 3.5);

    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> dist(0.0, 20000.0);
    for (int i = 0; i < 5000; ++i) {
        const double d = dist(rng);
        const double e = segment_emissions(model, d);
        REQUIRE(e > 0.0);
        REQUIRE(segment_emissions(doubled, d) == 2.0 * e);

        // Strictly increasing inside the band that d + detour falls into.
        const double next = d + 1.0;
        if (model.factor_for(d + model.detour_km()) == model.factor_for(next + model.detour_km())) {
            REQUIRE(segment_emissions(model, next) > e);
        }
    }
    CHECK(segment_emissions(doubled, 0.0) == 0.0);
    CHECK(segment_emissions(noDetour, 0.0) == 0.0);
}

TEST_CASE("emission model validation")
{
    CHECK_THROWS_AS(EmissionModel(-1.0, {1500.0}, {0.2, 0.1}, 1.0), ValidationError);
    CHECK_THROWS_AS(EmissionModel(95.0, {1500.0, 1500.0}, {0.3, 0.2, 0.1}, 1.0), ValidationError);
    CHECK_THROWS_AS(EmissionModel(95.0, {1500.0}, {0.2}, 1.0), ValidationError);
    CHECK_THROWS_AS(EmissionModel(95.0, {1500.0}, {0.2, 0.0}, 1.0), ValidationError);
    CHECK_THROWS_AS(EmissionModel(95.0, {1500.0}, {0.2, 0.1}, 0.0), ValidationError);
    CHECK_NOTHROW(EmissionModel(0.0, {}, {0.12}, 1.0));

    try {
        EmissionModel(-1.0, {4000.0, 1500.0}, {0.2}, -2.0);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.issues().size() == 4);
    }
}

TEST_CASE("emission model from JSON")
{
    CHECK(emission_model_from_json("{}", "m.json") == EmissionModel());

    const auto partial = emission_model_from_json(R"({"cabin_multiplier": 2.5, "detour_km": 50})", "m.json");
    CHECK(partial.cabin_multiplier() == 2.5);
    CHECK(partial.detour_km() == 50.0);
    CHECK(partial.band_edges_km() == EmissionModel().band_edges_km());

    const auto full = emission_model_from_json(
        R"({"detour_km": 0, "band_edges_km": [1000], "band_factors_kg_per_km": [0.3, 0.1], "cabin_multiplier": 1})", "m.json");
    CHECK(segment_emissions(full, 999.0) == doctest::Approx(999.0 * 0.3));
    CHECK(segment_emissions(full, 1000.0) == doctest::Approx(100.0));

    CHECK_THROWS_AS(emission_model_from_json("{", "m.json"), ParseError);
    CHECK_THROWS_AS(emission_model_from_json(R"({"detour_km": "far"})", "m.json"), ValidationError);
    CHECK_THROWS_AS(emission_model_from_json(R"({"band_edges_km": [2000]})", "m.json"), ValidationError);

    test::TempDir dir;
    CHECK(load_emission_model(dir.write("m.json", R"({"detour_km": 10})")).detour_km() == 10.0);
    CHECK_THROWS_AS(load_emission_model(dir.path() / "nope.json"), IoError);
}
