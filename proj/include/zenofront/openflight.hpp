#ifndef ZENOFRONT_OPENFLIGHT_HPP
#define ZENOFRONT_OPENFLIGHT_HPP

#include <string>
#include <vector>

#include "zenofront/model.hpp"

namespace zenofront {

struct Airport {
    std::string iata;
    std::string name;
    double lat = 0.0;
    double lon = 0.0;
    int rank = 0;  // 1 = busiest
};

// Great-circle distance in kilometers, Earth radius 6371.0 km.
double haversine_km(double lat1, double lon1, double lat2, double lon2);
double haversine_km(const Airport& a, const Airport& b);

// airports.csv: "rank,iata,lat,lon,name" (name may contain commas).
std::vector<Airport> load_airports(const std::string& path);
// routes.csv: "src,dst" directed IATA pairs.
std::vector<std::pair<std::string, std::string>> load_routes(const std::string& path);

struct PipelineOptions {
    std::string src = "ATL";
    std::string dst = "PEK";
    int top_n = 50;
    int max_path_cities = 4;  // flights per traveler route
    int t = 6;
    int p = 2;
    double cost_scale = 1e6;  // landing costs are tiny inverses of km sums
};

// Vertices are the top-ranked airports, edges the surviving routes weighted
// by great-circle distance, landing cost the scaled inverse average distance
// to the two endpoints.
GeneralInstance build_instance(const std::vector<Airport>& airports,
                               const std::vector<std::pair<std::string, std::string>>& routes,
                               const PipelineOptions& opts);

}  // namespace zenofront

#endif
