#include "zenofront/solver.hpp"

#include <algorithm>
#include <limits>
#include <chrono>
#include <cmath>
#include <thread>

#include "zenofront/combinatorics.hpp"
#include "zenofront/transform.hpp"

namespace zenofront {

void FrontStore::stair_insert(std::int64_t key, double makespan) {
    // Keep only (key, mk) pairs forming a strictly decreasing staircase.
    auto at = stair_.lower_bound(key);
    if (at != stair_.begin()) {
        auto prev = std::prev(at);
        if (prev->second <= makespan) return;  // nothing new to the right
    }
    auto [it, inserted] = stair_.insert_or_assign(key, makespan);
    for (auto next = std::next(it); next != stair_.end() && next->second >= makespan;)
        next = stair_.erase(next);
    (void)inserted;
}

double FrontStore::stair_min_below(std::int64_t key) const {
    auto it = stair_.lower_bound(key);
    if (it == stair_.begin()) return std::numeric_limits<double>::infinity();
    return std::prev(it)->second;
}

bool FrontStore::would_accept(double cost, double makespan, const Ppp& ppp) const {
    const auto it = entries_.find(cost_key(cost));
    if (it == entries_.end()) return true;
    const Entry& e = it->second;
    return makespan < e.makespan || (makespan == e.makespan && ppp < e.ppp);
}

void FrontStore::insert_evaluated(double cost, double makespan, const Ppp& ppp) {
    const auto key = cost_key(cost);
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        entries_.emplace(key, Entry{cost, makespan, ppp});
        stair_insert(key, makespan);
        return;
    }
    Entry& e = it->second;
    if (makespan < e.makespan || (makespan == e.makespan && ppp < e.ppp)) {
        e = Entry{cost, makespan, ppp};
        stair_insert(key, makespan);
    }
}

// Strict version usable before the candidate's tie-break key exists.
bool FrontStore::dominates_unseen(double cost, double shared_lower_bound) const {
    const auto key = cost_key(cost);
    if (approx_le(stair_min_below(key), shared_lower_bound)) return true;
    const auto it = entries_.find(key);
    return it != entries_.end() && approx_lt(it->second.makespan, shared_lower_bound);
}

bool FrontStore::dominates(double cost, double shared_lower_bound, const Ppp& candidate) const {
    const auto key = cost_key(cost);
    if (approx_le(stair_min_below(key), shared_lower_bound)) return true;
    const auto it = entries_.find(key);
    if (it == entries_.end()) return false;
    const Entry& e = it->second;
    if (!approx_le(e.makespan, shared_lower_bound)) return false;
    // Same bucket: a candidate that could tie the stored makespan is still
    // evaluated unless the stored entry wins the tie-break anyway.
    return approx_lt(e.makespan, shared_lower_bound) || e.ppp < candidate;
}

void FrontStore::merge(const FrontStore& other) {
    for (const auto& [key, e] : other.entries_) {
        (void)key;
        insert_evaluated(e.cost, e.makespan, e.ppp);
    }
}

std::vector<FrontPoint> finalize_front(const FrontStore& store) {
    std::vector<FrontPoint> out;
    for (const auto& [key, e] : store.entries()) {
        (void)key;
        if (!out.empty() && !approx_lt(e.makespan, out.back().makespan)) continue;
        out.push_back({e.cost, e.makespan, e.ppp, {}});
    }
    return out;
}

bool psi_dominates(const Ppp& p1, const Ppp& p2, const Instance& inst) {
    const auto b1 = bounds(p1, inst);
    const auto b2 = bounds(p2, inst);
    return approx_le(b1.sequential, b2.shared) &&
           approx_le(ppp_cost(p1, inst), ppp_cost(p2, inst));
}

bool fronts_equal(const std::vector<FrontPoint>& a, const std::vector<FrontPoint>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!approx_eq(a[i].cost, b[i].cost) || !approx_eq(a[i].makespan, b[i].makespan))
            return false;
    return true;
}

namespace {

struct Worker {
    const Instance& inst;
    bool prune;
    FrontStore store;
    Stats stats;

    void consider(Ppp ppp) {
        // Cost and bounds are order-free; sorting waits until we know the
        // candidate survives pruning.
        const double cost = ppp_cost(ppp, inst);
        const auto mb = bounds(ppp, inst);
        if (prune && store.dominates_unseen(cost, mb.shared)) {
            ++stats.pruned;
            return;
        }
        ppp.normalize(inst);
        if (prune && store.dominates(cost, mb.shared, ppp)) {
            ++stats.pruned;
            return;
        }
        const double mk = lowest_makespan_unlabeled_value(ppp, inst);
        ++stats.makespan_calls;
        if (mk < mb.shared - eps() || mk > mb.sequential + eps()) ++stats.bound_violations;
        store.insert_evaluated(cost, mk, ppp);
    }
};

// A pairing at a virtual city with distinct exchange endpoints needs one
// relay carrier: an A or Abar execution of the same city in the skeleton.
bool beta_fits_virtuals(const Instance& inst, const std::vector<int>& beta,
                        const std::vector<int>& a, const std::vector<int>& abar) {
    for (std::size_t i = 0; i < beta.size();) {
        std::size_t j = i;
        while (j < beta.size() && beta[j] == beta[i]) ++j;
        if (inst.needs_relay_carrier(beta[i])) {
            const int need = static_cast<int>(j - i);
            if (multiset_count(a, beta[i]) + multiset_count(abar, beta[i]) < need)
                return false;
        }
        i = j;
    }
    return true;
}

bool contains_override(const Instance& inst, const std::vector<int>& cities) {
    return std::any_of(cities.begin(), cities.end(),
                       [&](int c) { return inst.has_override(c); });
}

std::vector<int> cost_order(const Instance& inst) {
    std::vector<int> order(static_cast<std::size_t>(inst.n));
    for (int i = 0; i < inst.n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (inst.c[x] != inst.c[y]) return inst.c[x] < inst.c[y];
        if (inst.d[x] != inst.d[y]) return inst.d[x] < inst.d[y];
        return x < y;
    });
    return order;
}

void run_classic(const Instance& inst, bool prune, int worker, int workers, Worker& w) {
    const std::vector<int> order = cost_order(inst);
    auto to_ids = [&](const std::vector<int>& ranks) {
        std::vector<int> ids;
        ids.reserve(ranks.size());
        for (int r : ranks) ids.push_back(order[r]);
        return ids;
    };

    // Per-rank landing cost and full A-pattern duration. Without overrides
    // both plan cost and the sequential bound depend on e and w only, so a
    // dominated pair skips its whole pairing powerset unevaluated.
    const bool uniform = inst.overrides.empty();
    std::vector<double> rank_cost(order.size()), rank_dur(order.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
        rank_cost[r] = inst.c[order[r]];
        rank_dur[r] = inst.d[order[r]] + inst.dbar[order[r]];
    }
    auto sum_over = [&](const std::vector<int>& ranks, const std::vector<double>& val) {
        double s = 0.0;
        for (int r : ranks) s += val[r];
        return s;
    };

    std::uint64_t ordinal = 0;
    MulticombinationStream outer(inst.n, inst.t);
    std::vector<int> e, wv, beta;
    while (outer.next(e)) {
        const double e_cost = sum_over(e, rank_cost);
        const double e_dur = sum_over(e, rank_dur);
        MulticombinationStream inner(inst.n, inst.t - inst.p);
        while (inner.next(wv)) {
            if (static_cast<int>(ordinal++ % workers) != worker) continue;
            ++w.stats.iterations;
            if (uniform && prune) {
                const double cost = e_cost + sum_over(wv, rank_cost);
                const double shared = (e_dur + sum_over(wv, rank_dur)) / inst.p;
                if (w.store.dominates_unseen(cost, shared)) {
                    ++w.stats.pruned;
                    continue;
                }
            }
            SubMultisetStream betas(multiset_intersection(e, wv));
            while (betas.next(beta)) {
                std::vector<int> a = multiset_difference(e, beta);
                std::vector<int> abar = multiset_difference(wv, beta);
                if (!beta_fits_virtuals(inst, to_ids(beta), to_ids(a), to_ids(abar)))
                    continue;
                w.consider({to_ids(a), to_ids(abar), to_ids(beta)});
            }
        }
    }
}

void run_noduplicate(const Instance& inst, bool prune, int worker, int workers, Worker& w) {
    const std::vector<int> order = cost_order(inst);
    auto to_ids = [&](const std::vector<int>& ranks) {
        std::vector<int> ids;
        ids.reserve(ranks.size());
        for (int r : ranks) ids.push_back(order[r]);
        return ids;
    };

    // Paired cities occupy two slots of u, so without overrides both the
    // plan cost and the sequential bound are functions of u alone and a
    // dominated u skips its entire inner enumeration.
    const bool uniform = inst.overrides.empty();
    std::vector<double> rank_cost(order.size()), rank_dur(order.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
        rank_cost[r] = inst.c[order[r]];
        rank_dur[r] = inst.d[order[r]] + inst.dbar[order[r]];
    }

    const int slots = 2 * inst.t - inst.p;
    std::uint64_t ordinal = 0;
    MulticombinationStream outer(inst.n, slots);
    std::vector<int> u, m, beta, split;
    while (outer.next(u)) {
        if (static_cast<int>(ordinal++ % workers) != worker) continue;
        ++w.stats.iterations;
        if (uniform && prune) {
            double cost = 0.0, dur = 0.0;
            for (int r : u) {
                cost += rank_cost[r];
                dur += rank_dur[r];
            }
            if (w.store.dominates_unseen(cost, dur / inst.p)) {
                ++w.stats.pruned;
                continue;
            }
        }
        KSubMultisetStream bases(u, inst.p);
        while (bases.next(m)) {
            std::vector<int> v = multiset_difference(u, m);
            // Cities available for BB̄-pairing occupy two slots each.
            std::vector<int> pairable;
            for (std::size_t i = 0; i < v.size();) {
                std::size_t j = i;
                while (j < v.size() && v[j] == v[i]) ++j;
                const int half = static_cast<int>(j - i) / 2;
                pairable.insert(pairable.end(), static_cast<std::size_t>(half), v[i]);
                i = j;
            }
            SubMultisetStream betas(pairable);
            while (betas.next(beta)) {
                std::vector<int> twice = beta;
                twice.insert(twice.end(), beta.begin(), beta.end());
                std::sort(twice.begin(), twice.end());
                std::vector<int> rest = multiset_difference(v, twice);
                const int q = static_cast<int>(rest.size()) / 2;
                if (contains_override(inst, to_ids(rest)) ||
                    contains_override(inst, to_ids(beta))) {
                    // Kind-specific durations: enumerate the distinct splits.
                    KSubMultisetStream splits(rest, q);
                    while (splits.next(split)) {
                        std::vector<int> abar = multiset_difference(rest, split);
                        std::vector<int> a = m;
                        a.insert(a.end(), split.begin(), split.end());
                        std::sort(a.begin(), a.end());
                        if (!beta_fits_virtuals(inst, to_ids(beta), to_ids(a),
                                                to_ids(abar)))
                            continue;
                        w.consider({to_ids(a), to_ids(abar), to_ids(beta)});
                    }
                } else {
                    // Default durations make the split irrelevant.
                    std::vector<int> a = m;
                    a.insert(a.end(), rest.begin(), rest.begin() + q);
                    std::sort(a.begin(), a.end());
                    std::vector<int> abar(rest.begin() + q, rest.end());
                    w.consider({to_ids(a), to_ids(abar), to_ids(beta)});
                }
            }
        }
    }
}

}  // namespace

SolveResult solve(const Instance& inst, const SolveOptions& opts) {
    if (!inst.validated) throw ZenoError("solve requires a validated instance");
    if (opts.workers < 1) throw ZenoError("worker count must be positive");
    if (!unresolved_bab(inst).empty())
        throw ZenoError("instance has unresolved B-Abar-Bbar situations; run transform_bab first");

    // Psi-domination needs trustworthy bounds: any instance without
    // per-pattern overrides qualifies, because the sequential plan has no
    // waits (M* <= M_S) and total work still splits p ways (M_L <= M*).
    // Virtual relay cities break the first property, so they disable it.
    const bool prune_effective = opts.prune && inst.overrides.empty();

    const auto t0 = std::chrono::steady_clock::now();
    std::vector<Worker> workers;
    workers.reserve(static_cast<std::size_t>(opts.workers));
    for (int i = 0; i < opts.workers; ++i) workers.push_back(Worker{inst, prune_effective, {}, {}});

    auto body = [&](int idx) {
        if (opts.algo == Algo::Classic)
            run_classic(inst, prune_effective, idx, opts.workers, workers[idx]);
        else
            run_noduplicate(inst, prune_effective, idx, opts.workers, workers[idx]);
    };
    if (opts.workers == 1) {
        body(0);
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < opts.workers; ++i) pool.emplace_back(body, i);
        for (auto& th : pool) th.join();
    }

    FrontStore store;
    Stats stats;
    for (auto& w : workers) {
        store.merge(w.store);
        stats.iterations += w.stats.iterations;
        stats.makespan_calls += w.stats.makespan_calls;
        stats.pruned += w.stats.pruned;
        stats.bound_violations += w.stats.bound_violations;
    }
    stats.store_size = store.size();
    stats.prune_effective = prune_effective;
    stats.workers = opts.workers;

    SolveResult result;
    result.front = finalize_front(store);
    for (FrontPoint& fp : result.front) {
        auto [mk, sched] = lowest_makespan_unlabeled(fp.ppp, inst);
        if (mk != fp.makespan)
            throw ZenoError("internal: witness reconstruction diverged");
        fp.witness = std::move(sched);
    }
    stats.front_size = result.front.size();
    stats.elapsed_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
    result.stats = stats;
    return result;
}

}  // namespace zenofront
