#include "zenofront/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>

namespace zenofront {

FlightNet net_from_instance(const Instance& inst) {
    if (!inst.overrides.empty())
        throw ZenoError("the oracle works on plain instances, not transformed ones");
    FlightNet net;
    net.locations = inst.n + 2;
    net.initial = 0;
    net.goal = inst.n + 1;
    net.adjacency.resize(static_cast<std::size_t>(net.locations));
    net.landing_cost.assign(static_cast<std::size_t>(net.locations), 0.0);
    net.names.resize(static_cast<std::size_t>(net.locations));
    net.names[0] = "I";
    net.names[static_cast<std::size_t>(net.goal)] = "G";
    for (int i = 0; i < inst.n; ++i) {
        const int loc = i + 1;
        net.names[loc] = "C" + std::to_string(i + 1);
        net.landing_cost[loc] = inst.c[i];
        net.adjacency[0].push_back({loc, inst.d[i]});
        net.adjacency[loc].push_back({0, inst.d[i]});
        net.adjacency[loc].push_back({net.goal, inst.dbar[i]});
        net.adjacency[net.goal].push_back({loc, inst.dbar[i]});
    }
    if (inst.central) {
        for (int i = 0; i < inst.n; ++i)
            for (int j = 0; j < inst.n; ++j) {
                if (i == j) continue;
                const double w = (*inst.central)[i][j];
                if (w >= kInfiniteDuration / 2) continue;
                net.adjacency[i + 1].push_back({j + 1, w});
            }
    }
    for (auto& lst : net.adjacency) std::sort(lst.begin(), lst.end());
    return net;
}

FlightNet net_from_general(const GeneralInstance& g) {
    validate_general(g);
    FlightNet net;
    net.locations = static_cast<int>(g.vertices.size());
    net.initial = g.initial;
    net.goal = g.goal;
    net.adjacency.resize(g.vertices.size());
    net.landing_cost.resize(g.vertices.size());
    net.names.resize(g.vertices.size());
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        net.landing_cost[i] = g.vertices[i].cost;
        net.names[i] = g.vertices[i].id;
    }
    for (const auto& e : g.edges) net.adjacency[e.from].push_back({e.to, e.duration});
    for (auto& lst : net.adjacency) {
        std::sort(lst.begin(), lst.end());
        lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
    }
    return net;
}

namespace {

struct State {
    std::vector<int> plane_loc;
    std::vector<double> plane_time;
    std::vector<int> pax_loc;
    std::vector<double> pax_time;
    double cost = 0.0;
    int legs = 0;
};

// Node-weighted / edge-weighted shortest distances to the goal, used as
// admissible completion bounds.
std::vector<double> dijkstra_to_goal(const FlightNet& net, bool use_landing_cost) {
    std::vector<double> dist(static_cast<std::size_t>(net.locations),
                             std::numeric_limits<double>::infinity());
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[static_cast<std::size_t>(net.goal)] = 0.0;
    heap.push({0.0, net.goal});
    while (!heap.empty()) {
        auto [dv, v] = heap.top();
        heap.pop();
        if (dv > dist[static_cast<std::size_t>(v)]) continue;
        for (const auto& [w, dur] : net.adjacency[v]) {
            // Traveling w -> v costs the landing at v (or the edge time).
            double step = use_landing_cost ? net.landing_cost[v] : dur;
            if (dv + step < dist[static_cast<std::size_t>(w)]) {
                dist[static_cast<std::size_t>(w)] = dv + step;
                heap.push({dv + step, w});
            }
        }
    }
    return dist;
}

struct Search {
    const FlightNet& net;
    int max_legs;
    std::vector<double> cost_to_goal;
    std::vector<double> time_to_goal;
    std::vector<OraclePoint> front;
    std::vector<OraclePoint::Move> trail;
    // Per location signature: Pareto list of (cost, plane times, pax times).
    std::map<std::string, std::vector<std::vector<double>>> best;

    bool front_dominates(double cost, double mk) const {
        for (const auto& fp : front)
            if (approx_le(fp.cost, cost) && approx_le(fp.makespan, mk)) return true;
        return false;
    }

    void offer(const State& st) {
        double mk = 0.0;
        for (double tv : st.plane_time) mk = std::max(mk, tv);
        if (front_dominates(st.cost, mk)) return;
        front.erase(std::remove_if(front.begin(), front.end(),
                                   [&](const OraclePoint& fp) {
                                       return approx_le(st.cost, fp.cost) &&
                                              approx_le(mk, fp.makespan);
                                   }),
                    front.end());
        front.push_back({st.cost, mk, trail});
    }

    static void canonical(const State& st, std::string& sig, std::vector<double>& vec) {
        std::vector<std::pair<int, double>> planes, pax;
        for (std::size_t i = 0; i < st.plane_loc.size(); ++i)
            planes.push_back({st.plane_loc[i], st.plane_time[i]});
        for (std::size_t i = 0; i < st.pax_loc.size(); ++i)
            pax.push_back({st.pax_loc[i], st.pax_time[i]});
        std::sort(planes.begin(), planes.end());
        std::sort(pax.begin(), pax.end());
        sig.clear();
        vec.clear();
        vec.push_back(st.cost);
        for (auto& [loc, tv] : planes) {
            sig.push_back(static_cast<char>('A' + loc));
            vec.push_back(tv);
        }
        sig.push_back('|');
        for (auto& [loc, tv] : pax) {
            sig.push_back(static_cast<char>('A' + loc));
            vec.push_back(tv);
        }
    }

    // True if the state is (weakly) dominated by a remembered one.
    bool remember(const State& st) {
        std::string sig;
        std::vector<double> vec;
        canonical(st, sig, vec);
        auto& list = best[sig];
        for (const auto& old : list) {
            bool le = true;
            for (std::size_t i = 0; i < vec.size(); ++i)
                if (old[i] > vec[i] + eps()) {
                    le = false;
                    break;
                }
            if (le) return true;
        }
        list.erase(std::remove_if(list.begin(), list.end(),
                                  [&](const std::vector<double>& old) {
                                      for (std::size_t i = 0; i < vec.size(); ++i)
                                          if (vec[i] > old[i] + eps()) return false;
                                      return true;
                                  }),
                   list.end());
        if (list.size() < 256) list.push_back(vec);
        return false;
    }

    void dfs(State& st) {
        if (std::all_of(st.pax_loc.begin(), st.pax_loc.end(),
                        [&](int l) { return l == net.goal; }))
            offer(st);
        if (st.legs >= max_legs) return;

        // Admissible completion bounds against the incumbent front.
        double mk_lb = 0.0;
        for (double tv : st.plane_time) mk_lb = std::max(mk_lb, tv);
        double cost_lb = st.cost;
        for (std::size_t px = 0; px < st.pax_loc.size(); ++px) {
            if (st.pax_loc[px] == net.goal) continue;
            cost_lb += cost_to_goal[static_cast<std::size_t>(st.pax_loc[px])];
            mk_lb = std::max(mk_lb, st.pax_time[px] +
                                        time_to_goal[static_cast<std::size_t>(st.pax_loc[px])]);
        }
        if (front_dominates(cost_lb, mk_lb)) return;
        if (remember(st)) return;

        const int p = static_cast<int>(st.plane_loc.size());
        for (int pl = 0; pl < p; ++pl) {
            if (st.plane_time[pl] == 0.0 && st.plane_loc[pl] == net.initial) {
                // Interchangeable planes: only the first idle one may start.
                bool earlier_idle = false;
                for (int q = 0; q < pl && !earlier_idle; ++q)
                    earlier_idle = st.plane_time[q] == 0.0 && st.plane_loc[q] == net.initial;
                if (earlier_idle) continue;
            }
            const int from = st.plane_loc[pl];
            int best_pax = -1;
            if (from != net.goal) {
                for (std::size_t px = 0; px < st.pax_loc.size(); ++px) {
                    if (st.pax_loc[px] != from) continue;
                    if (best_pax < 0 || st.pax_time[px] < st.pax_time[best_pax])
                        best_pax = static_cast<int>(px);
                }
            }
            for (const auto& [to, dur] : net.adjacency[from]) {
                for (int carry = (best_pax >= 0 ? 1 : 0); carry >= 0; --carry) {
                    State next = st;
                    double depart = next.plane_time[pl];
                    if (carry) depart = std::max(depart, next.pax_time[best_pax]);
                    const double arrive = depart + dur;
                    next.plane_loc[pl] = to;
                    next.plane_time[pl] = arrive;
                    if (carry) {
                        next.pax_loc[best_pax] = to;
                        next.pax_time[best_pax] = arrive;
                    }
                    next.cost += net.landing_cost[to];
                    next.legs = st.legs + 1;
                    trail.push_back({pl, from, to, carry ? best_pax : -1});
                    dfs(next);
                    trail.pop_back();
                }
            }
        }
    }
};

}  // namespace

std::vector<OraclePoint> brute_force_front(const FlightNet& net, int t, int p,
                                           OracleLimits limits) {
    if (t > 4 || p > 3 || net.locations > 7) throw ZenoError("oracle scale exceeded");
    const int max_legs = limits.total_legs > 0 ? limits.total_legs : 2 * (2 * t - p) + 2;

    Search search{net,
                  max_legs,
                  dijkstra_to_goal(net, true),
                  dijkstra_to_goal(net, false),
                  {},
                  {},
                  {}};
    State st;
    st.plane_loc.assign(static_cast<std::size_t>(p), net.initial);
    st.plane_time.assign(static_cast<std::size_t>(p), 0.0);
    st.pax_loc.assign(static_cast<std::size_t>(t), net.initial);
    st.pax_time.assign(static_cast<std::size_t>(t), 0.0);
    search.dfs(st);

    std::sort(search.front.begin(), search.front.end(),
              [](const OraclePoint& a, const OraclePoint& b) {
                  if (a.cost != b.cost) return a.cost < b.cost;
                  return a.makespan < b.makespan;
              });
    return search.front;
}

std::vector<OraclePoint> brute_force_front(const Instance& inst, OracleLimits limits) {
    if (inst.n > 4) throw ZenoError("oracle scale exceeded");
    return brute_force_front(net_from_instance(inst), inst.t, inst.p, limits);
}

std::vector<OraclePoint> brute_force_front(const GeneralInstance& g, OracleLimits limits) {
    if (limits.total_legs == 0) {
        // Patterns traverse multi-edge routes on a graph, so the clique leg
        // budget is scaled by the longest simple route.
        const int route_edges = std::max(1, static_cast<int>(g.vertices.size()) - 1);
        limits.total_legs = 2 * (2 * g.t - g.p) * route_edges + 2;
    }
    return brute_force_front(net_from_general(g), g.t, g.p, limits);
}

}  // namespace zenofront
