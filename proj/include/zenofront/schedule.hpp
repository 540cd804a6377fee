#ifndef ZENOFRONT_SCHEDULE_HPP
#define ZENOFRONT_SCHEDULE_HPP

#include <string>
#include <vector>

#include "zenofront/model.hpp"

namespace zenofront {

// A location in a clique instance. Expanded general-graph schedules reuse
// the same shape with `name` carrying the original vertex id.
struct Loc {
    enum Kind { Initial, Goal, Central } kind = Initial;
    int city = -1;          // central index, -1 otherwise
    std::string name;       // display name; filled by renderers/expansion

    static Loc initial() { return {Initial, -1, {}}; }
    static Loc goal() { return {Goal, -1, {}}; }
    static Loc central(int i) { return {Central, i, {}}; }

    bool operator==(const Loc& o) const { return kind == o.kind && city == o.city; }
};

struct Leg {
    Loc from, to;
    bool carries = false;
    int passenger = -1;      // id when carries
    double duration = 0.0;
    double start = 0.0;
    double end = 0.0;
    double landing_cost = 0.0;
};

struct Schedule {
    std::vector<std::vector<Leg>> plane_legs;  // one track per plane
    std::vector<double> handoff;               // per passenger: arrival at the
                                               // intermediate city, -1 if none
    double makespan = 0.0;
    double cost = 0.0;
};

double ppp_cost(const Ppp& ppp, const Instance& inst);

struct MakespanBounds {
    double sequential;  // M_S: one plane does everything
    double shared;      // M_L = M_S / p: perfect work sharing
};
MakespanBounds bounds(const Ppp& ppp, const Instance& inst);

// Optimal makespan of the PPP with a witness schedule. Four greedy steps:
// long halves of the paired round trips, the p largest A patterns, the
// remaining A/Abar chain elements in alternation, then the short halves with
// the pickup waiting rule. Small PPPs get an exact branch-and-bound
// refinement on top of the greedy. The caller must have resolved any
// B-Abar-Bbar situation beforehand (see transform_bab).
std::pair<double, Schedule> lowest_makespan(const Ppp& ppp, const Instance& inst);

// Solver-side variant: cities without per-pattern overrides may swap freely
// between the A and Abar roles (equal duration and cost), so this evaluates
// the best labeling of the chain multiset rather than the one given.
std::pair<double, Schedule> lowest_makespan_unlabeled(const Ppp& ppp, const Instance& inst);

// Makespan-only versions; bit-identical to the witness-building ones.
double lowest_makespan_value(const Ppp& ppp, const Instance& inst);
double lowest_makespan_unlabeled_value(const Ppp& ppp, const Instance& inst);

struct ScheduleReport {
    bool ok = true;
    std::vector<std::string> violations;
    double recomputed_makespan = 0.0;
    double recomputed_cost = 0.0;
};

ScheduleReport validate_schedule(const Schedule& s, const Instance& inst);

// One line per plane in arrow notation: "I -> C1 -> G -> ...".
// `names` optionally maps central indices to display names.
std::string render_arrows(const Schedule& s, const std::vector<std::string>& names = {});

std::string loc_name(const Loc& loc, const std::vector<std::string>& names = {});

}  // namespace zenofront

#endif
