#ifndef ZENOFRONT_SOLVER_HPP
#define ZENOFRONT_SOLVER_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "zenofront/schedule.hpp"

namespace zenofront {

struct FrontPoint {
    double cost = 0.0;
    double makespan = 0.0;
    Ppp ppp;
    Schedule witness;
};

// Pruning/result store S: quantized cost -> best makespan and the skeleton
// achieving it. Witness schedules are rebuilt for the surviving points only.
class FrontStore {
  public:
    struct Entry {
        double cost = 0.0;
        double makespan = 0.0;
        Ppp ppp;
    };

    void insert_evaluated(double cost, double makespan, const Ppp& ppp);
    bool would_accept(double cost, double makespan, const Ppp& ppp) const;

    // True when some stored entry with cost <= `cost` already guarantees a
    // makespan no worse than the candidate's perfect-sharing lower bound.
    // Same-cost ties defer to the deterministic witness tie-break so the
    // final front never depends on enumeration partitioning.
    bool dominates(double cost, double shared_lower_bound, const Ppp& candidate) const;
    bool dominates_unseen(double cost, double shared_lower_bound) const;

    void merge(const FrontStore& other);
    std::size_t size() const { return entries_.size(); }
    const std::map<std::int64_t, Entry>& entries() const { return entries_; }

  private:
    // Prefix-minimum staircase over makespans for O(log) domination checks.
    void stair_insert(std::int64_t key, double makespan);
    double stair_min_below(std::int64_t key) const;  // min mk at keys < key

    std::map<std::int64_t, Entry> entries_;
    std::map<std::int64_t, double> stair_;
};

// Drops dominated entries; result sorted by ascending cost with strictly
// descending makespan. Witness schedules in the result are left empty.
std::vector<FrontPoint> finalize_front(const FrontStore& store);

bool psi_dominates(const Ppp& p1, const Ppp& p2, const Instance& inst);

enum class Algo { Classic, NoDuplicate };

struct SolveOptions {
    Algo algo = Algo::Classic;
    bool prune = true;
    int workers = 1;
};

struct Stats {
    std::uint64_t iterations = 0;          // outer enumeration steps
    std::uint64_t makespan_calls = 0;      // lowest_makespan invocations
    std::uint64_t pruned = 0;              // dominance-check hits; one hit may
                                           // cover a whole pair or outer step
    std::uint64_t bound_violations = 0;    // makespan outside [M_L, M_S]
    std::size_t store_size = 0;
    std::size_t front_size = 0;
    bool prune_effective = false;
    int workers = 1;
    double elapsed_ms = 0.0;
};

struct SolveResult {
    std::vector<FrontPoint> front;
    Stats stats;
};

SolveResult solve(const Instance& inst, const SolveOptions& opts);

inline SolveResult solve_classic(const Instance& inst, bool prune = true, int workers = 1) {
    return solve(inst, {Algo::Classic, prune, workers});
}
inline SolveResult solve_noduplicate(const Instance& inst, bool prune = true, int workers = 1) {
    return solve(inst, {Algo::NoDuplicate, prune, workers});
}

// (cost, makespan) rows of two fronts agree within tolerance.
bool fronts_equal(const std::vector<FrontPoint>& a, const std::vector<FrontPoint>& b);

}  // namespace zenofront

#endif
