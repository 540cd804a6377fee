#ifndef ZENOFRONT_ORACLE_HPP
#define ZENOFRONT_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "zenofront/model.hpp"
#include "zenofront/schedule.hpp"

namespace zenofront {

// Flight network the oracle searches over: locations, symmetric edges and
// landing costs. No pattern knowledge.
struct FlightNet {
    int locations = 0;
    int initial = -1;
    int goal = -1;
    std::vector<std::vector<std::pair<int, double>>> adjacency;
    std::vector<double> landing_cost;
    std::vector<std::string> names;
};

FlightNet net_from_instance(const Instance& inst);
FlightNet net_from_general(const GeneralInstance& g);

struct OracleLimits {
    int total_legs = 0;  // 0: derive 2*(2t-p)+2 from the problem
};

struct OraclePoint {
    double cost = 0.0;
    double makespan = 0.0;
    // One witness plan: (plane, from, to, carried passenger or -1).
    struct Move {
        int plane, from, to, passenger;
    };
    std::vector<Move> plan;
};

// Exhaustive timed search over plane/passenger states. Guarded to toy
// sizes; throws "oracle scale exceeded" beyond them.
std::vector<OraclePoint> brute_force_front(const FlightNet& net, int t, int p,
                                           OracleLimits limits = {});

std::vector<OraclePoint> brute_force_front(const Instance& inst, OracleLimits limits = {});
std::vector<OraclePoint> brute_force_front(const GeneralInstance& g, OracleLimits limits = {});

}  // namespace zenofront

#endif
