#include <cmath>
#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "zenofront/io.hpp"
#include "zenofront/openflight.hpp"

using namespace zenofront;

namespace {

// Independent great-circle reference: spherical law of cosines.
double reference_km(double lat1, double lon1, double lat2, double lon2) {
    const double rad = 3.14159265358979323846 / 180.0;
    double central = std::acos(std::sin(lat1 * rad) * std::sin(lat2 * rad) +
                               std::cos(lat1 * rad) * std::cos(lat2 * rad) *
                                   std::cos((lon2 - lon1) * rad));
    return 6371.0 * central;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

}  // namespace

TEST_CASE("haversine basics") {
    CHECK(haversine_km(33.64, -84.43, 33.64, -84.43) == doctest::Approx(0));
    // Antipodal poles: half the Earth circumference.
    CHECK(haversine_km(90, 0, -90, 0) == doctest::Approx(3.14159265358979 * 6371.0).epsilon(1e-9));
}

TEST_CASE("haversine agrees with an independent great-circle formula") {
    // ATL and PEK fixture coordinates.
    const double atl_lat = 33.6367, atl_lon = -84.4281;
    const double pek_lat = 40.0801, pek_lon = 116.5846;
    const double ours = haversine_km(atl_lat, atl_lon, pek_lat, pek_lon);
    const double ref = reference_km(atl_lat, atl_lon, pek_lat, pek_lon);
    CHECK(std::fabs(ours - ref) < 0.1);
    CHECK(ours > 11000);
    CHECK(ours < 12000);
}

TEST_CASE("csv ingestion and instance construction") {
    const std::string dir = "of_test_data";
    std::remove((dir + "_airports.csv").c_str());
    write_file("of_air.csv",
               "rank,iata,lat,lon,name\n"
               "1,AAA,0,0,Alpha Field\n"
               "2,BBB,0,9,\"Bravo, Intl\"\n"
               "3,CCC,3,4.5,Charlie\n"
               "4,DDD,60,60,Filtered Out\n");
    write_file("of_routes.csv",
               "src,dst\nAAA,BBB\nBBB,AAA\nAAA,CCC\nCCC,BBB\nAAA,DDD\nAAA,ZZZ\n");
    auto airports = load_airports("of_air.csv");
    REQUIRE(airports.size() == 4);
    CHECK(airports[1].name == "\"Bravo, Intl\"");
    auto routes = load_routes("of_routes.csv");
    REQUIRE(routes.size() == 6);

    PipelineOptions opts;
    opts.src = "AAA";
    opts.dst = "BBB";
    opts.top_n = 3;
    opts.cost_scale = 1.0;
    auto g = build_instance(airports, routes, opts);
    CHECK(g.vertices.size() == 3);         // DDD filtered out
    CHECK(g.edges.size() == 4);            // routes to DDD/ZZZ dropped
    const int ccc = g.vertex_index("CCC");
    REQUIRE(ccc >= 0);
    const double da = haversine_km(0, 0, 3, 4.5);
    const double db = haversine_km(3, 4.5, 0, 9);
    CHECK(g.vertices[ccc].cost == doctest::Approx(2.0 / (da + db)));
    CHECK(g.vertices[g.initial].cost == doctest::Approx(0));
    CHECK(g.vertices[g.goal].cost == doctest::Approx(0));

    // Determinism: same inputs, identical serialized instance.
    auto h = build_instance(airports, routes, opts);
    CHECK(general_to_json(g) == general_to_json(h));

    opts.src = "ZZZ";
    CHECK_THROWS_AS(build_instance(airports, routes, opts), ZenoError);
    std::remove("of_air.csv");
    std::remove("of_routes.csv");
}

TEST_CASE("equidistant airport cost formula") {
    std::vector<Airport> airports = {
        {"SRC", "s", 0, 0, 1}, {"MID", "m", 0, 500.0 / 111.19, 2}, {"DST", "d", 0, 1000.0 / 111.19, 3}};
    // Place MID so both legs are ~500 km; the raw cost is 2/(d1+d2).
    std::vector<std::pair<std::string, std::string>> routes = {
        {"SRC", "MID"}, {"MID", "DST"}, {"SRC", "DST"}};
    PipelineOptions opts;
    opts.src = "SRC";
    opts.dst = "DST";
    opts.top_n = 3;
    opts.cost_scale = 1.0;
    auto g = build_instance(airports, routes, opts);
    const int mid = g.vertex_index("MID");
    const double d1 = haversine_km(airports[0], airports[1]);
    const double d2 = haversine_km(airports[1], airports[2]);
    CHECK(g.vertices[mid].cost == doctest::Approx(2.0 / (d1 + d2)));
}
