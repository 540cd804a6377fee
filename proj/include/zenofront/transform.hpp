#ifndef ZENOFRONT_TRANSFORM_HPP
#define ZENOFRONT_TRANSFORM_HPP

#include <string>
#include <vector>

#include "zenofront/schedule.hpp"

namespace zenofront {

// Ordered pair of cities for which no BB̄-pairing city dominates: i is
// strictly cheaper westbound, j strictly cheaper eastbound.
struct BabPair {
    int i = -1;
    int j = -1;
    bool operator==(const BabPair&) const = default;
};

// All pairs (i, j) of non-virtual cities with d_i < d_j and dbar_j < dbar_i.
std::vector<BabPair> detect_bab(const Instance& inst);

// Pairs from detect_bab not yet covered by a virtual city.
std::vector<BabPair> unresolved_bab(const Instance& inst);

// Appends one virtual city per unresolved pair, with per-pattern durations
// and costs that realize the three-plane passenger relay as a regular
// pairing. Identity when nothing is unresolved.
Instance transform_bab(const Instance& inst);

// An I -> G path over a general instance with its duration and landing cost.
struct PathRecord {
    std::vector<int> vertices;  // includes I and G
    double duration = 0.0;      // phi: sum of edge weights
    double cost = 0.0;          // omega: landing costs, first vertex excluded
};

std::pair<double, double> path_metrics(const std::vector<int>& vertices,
                                       const GeneralInstance& g);

// All simple I -> G paths with at most `max_intermediate` intermediate
// vertices, in deterministic order.
std::vector<PathRecord> enumerate_paths(const GeneralInstance& g, int max_intermediate);

// Pareto filter on (duration, cost); ties kept.
std::vector<PathRecord> nondominated_paths(const std::vector<PathRecord>& paths);

// How a reduced city expands back onto the original graph.
struct ReducedCity {
    std::vector<int> path;  // original vertex indices, I..G
    int split = 0;          // index into `path` of the split vertex
};

// Relay city recipe: travelers are dropped at the end of `drop_route`,
// picked up from the start of `pick_route`, and one plane carries the
// exchange along `carrier_route` (a full I..G walk).
struct VirtualRecipe {
    int city = -1;                   // index in the reduced instance
    std::vector<int> drop_route;     // I .. drop vertex
    std::vector<int> pick_route;     // pick vertex .. G
    std::vector<int> carrier_route;  // I .. G via both exchange vertices
};

struct ReduceMapping {
    std::vector<ReducedCity> cities;      // aligned with the raw reduction
    std::vector<int> merged;              // raw city -> validated city
    std::vector<VirtualRecipe> virtuals;  // relay cities, if any
    std::vector<std::string> vertex_ids;  // original vertex names
    GeneralInstance graph;
};

struct ReduceResult {
    Instance instance;
    ReduceMapping mapping;
};

// One clique city per split position of each non-dominated path; duplicate
// cities merge during validation. Inter-central distances get the infinite
// sentinel. With relay synthesis on, exchange opportunities between split
// vertices (one plane dropping a traveler on one route and delivering
// another along a second route, or both at a shared vertex) become virtual
// cities with exact per-pattern durations and costs; only candidates no
// plain city dominates are kept. Synthesis is exhaustive and can add many
// cities, so by default it runs only for small graphs; the plain reduction
// used for larger pipelines may miss cross-route exchange plans.
enum class RelayMode { Auto, On, Off };
ReduceResult reduce_to_clique(const GeneralInstance& g, int max_intermediate,
                              RelayMode relays = RelayMode::Auto);

// Non-virtual city count of a reduced instance.
int real_city_count(const Instance& inst);

// Replaces reduced-city legs by the underlying path legs; cost and makespan
// are preserved exactly.
Schedule expand_plan(const Schedule& s, const ReduceResult& red);

// Pathological generators.
GeneralInstance gen_hansen(int n, int t = 2, int p = 1);
GeneralInstance gen_layered(int n, int t = 2, int p = 1);

}  // namespace zenofront

#endif
