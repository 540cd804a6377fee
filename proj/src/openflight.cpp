#include "zenofront/openflight.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace zenofront {

double haversine_km(double lat1, double lon1, double lat2, double lon2) {
    constexpr double kEarthRadiusKm = 6371.0;
    constexpr double kDegToRad = 3.14159265358979323846 / 180.0;
    const double phi1 = lat1 * kDegToRad;
    const double phi2 = lat2 * kDegToRad;
    const double dphi = (lat2 - lat1) * kDegToRad;
    const double dlam = (lon2 - lon1) * kDegToRad;
    const double a = std::sin(dphi / 2) * std::sin(dphi / 2) +
                     std::cos(phi1) * std::cos(phi2) * std::sin(dlam / 2) * std::sin(dlam / 2);
    return 2.0 * kEarthRadiusKm * std::atan2(std::sqrt(a), std::sqrt(1.0 - a));
}

double haversine_km(const Airport& a, const Airport& b) {
    return haversine_km(a.lat, a.lon, b.lat, b.lon);
}

namespace {

std::vector<std::string> split_n(const std::string& line, std::size_t fields) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    for (std::size_t f = 0; f + 1 < fields; ++f) {
        auto comma = line.find(',', pos);
        if (comma == std::string::npos) throw ZenoError("malformed CSV line: " + line);
        out.push_back(line.substr(pos, comma - pos));
        pos = comma + 1;
    }
    out.push_back(line.substr(pos));
    return out;
}

bool skippable(const std::string& line) {
    return line.empty() || line[0] == '#';
}

}  // namespace

std::vector<Airport> load_airports(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ZenoError("cannot open airports file: " + path);
    std::vector<Airport> out;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (skippable(line)) continue;
        if (first && line.rfind("rank,", 0) == 0) {
            first = false;
            continue;  // header
        }
        first = false;
        auto f = split_n(line, 5);
        Airport ap;
        ap.rank = std::stoi(f[0]);
        ap.iata = f[1];
        ap.lat = std::stod(f[2]);
        ap.lon = std::stod(f[3]);
        ap.name = f[4];
        if (std::fabs(ap.lat) > 90.0 || std::fabs(ap.lon) > 180.0)
            throw ZenoError("airport with out-of-range coordinates: " + ap.iata);
        out.push_back(ap);
    }
    std::set<std::string> seen;
    for (const auto& ap : out)
        if (!seen.insert(ap.iata).second) throw ZenoError("duplicate IATA code: " + ap.iata);
    return out;
}

std::vector<std::pair<std::string, std::string>> load_routes(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ZenoError("cannot open routes file: " + path);
    std::vector<std::pair<std::string, std::string>> out;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (skippable(line)) continue;
        if (first && line.rfind("src,", 0) == 0) {
            first = false;
            continue;
        }
        first = false;
        auto f = split_n(line, 2);
        out.push_back({f[0], f[1]});
    }
    return out;
}

GeneralInstance build_instance(const std::vector<Airport>& airports,
                               const std::vector<std::pair<std::string, std::string>>& routes,
                               const PipelineOptions& opts) {
    std::map<std::string, Airport> surviving;
    for (const auto& ap : airports)
        if (ap.rank <= opts.top_n) surviving[ap.iata] = ap;
    if (!surviving.count(opts.src)) throw ZenoError("source airport filtered out: " + opts.src);
    if (!surviving.count(opts.dst)) throw ZenoError("target airport filtered out: " + opts.dst);

    // Airports left without any surviving route cannot appear in a plan.
    std::set<std::string> routed = {opts.src, opts.dst};
    for (const auto& [from, to] : routes) {
        if (surviving.count(from) && surviving.count(to)) {
            routed.insert(from);
            routed.insert(to);
        }
    }
    for (auto it = surviving.begin(); it != surviving.end();)
        it = routed.count(it->first) ? std::next(it) : surviving.erase(it);

    const Airport& src = surviving.at(opts.src);
    const Airport& dst = surviving.at(opts.dst);

    GeneralInstance g;
    g.t = opts.t;
    g.p = opts.p;
    std::map<std::string, int> index;
    for (const auto& [iata, ap] : surviving) {
        index[iata] = static_cast<int>(g.vertices.size());
        double cost = 0.0;
        if (iata != opts.src && iata != opts.dst) {
            const double avg_sum = haversine_km(src, ap) + haversine_km(ap, dst);
            cost = opts.cost_scale * 2.0 / avg_sum;
        }
        g.vertices.push_back({iata, cost});
    }
    g.initial = index.at(opts.src);
    g.goal = index.at(opts.dst);

    std::set<std::pair<int, int>> seen;
    for (const auto& [from, to] : routes) {
        auto fi = index.find(from);
        auto ti = index.find(to);
        if (fi == index.end() || ti == index.end() || fi->second == ti->second) continue;
        if (!seen.insert({fi->second, ti->second}).second) continue;
        const double dist = haversine_km(surviving.at(from), surviving.at(to));
        g.edges.push_back({fi->second, ti->second, dist});
    }
    validate_general(g);
    return g;
}

}  // namespace zenofront
