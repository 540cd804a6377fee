#include "zenofront/transform.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

namespace zenofront {

std::vector<BabPair> detect_bab(const Instance& inst) {
    if (!inst.central) throw ZenoError("detect_bab requires the central matrix");
    std::vector<BabPair> out;
    for (int i = 0; i < inst.n; ++i) {
        if (inst.is_virtual(i)) continue;
        for (int j = 0; j < inst.n; ++j) {
            if (j == i || inst.is_virtual(j)) continue;
            // The relay needs a usable central flight; sentinel entries mean
            // the cities were split from paths and cannot be bridged.
            if ((*inst.central)[i][j] >= kInfiniteDuration / 2) continue;
            if (approx_lt(inst.d[i], inst.d[j]) && approx_lt(inst.dbar[j], inst.dbar[i]))
                out.push_back({i, j});
        }
    }
    return out;
}

std::vector<BabPair> unresolved_bab(const Instance& inst) {
    if (!inst.central) return {};  // no central flights, no relay possible
    std::vector<BabPair> out;
    for (const BabPair& pr : detect_bab(inst)) {
        bool covered = false;
        for (const auto& v : inst.virtual_sources)
            if (v.i == pr.i && v.j == pr.j) {
                covered = true;
                break;
            }
        if (!covered) out.push_back(pr);
    }
    return out;
}

Instance transform_bab(const Instance& inst) {
    const auto pairs = unresolved_bab(inst);
    if (pairs.empty()) return inst;

    Instance out = inst;
    auto& matrix = *out.central;
    for (const BabPair& pr : pairs) {
        const int k = out.n;
        const double dij = (*inst.central)[pr.i][pr.j];
        out.d.push_back(inst.d[pr.i]);
        out.dbar.push_back(inst.dbar[pr.j]);
        out.c.push_back(inst.c[pr.i] + inst.c[pr.j]);
        // Both relay carriers pass through C_i and C_j once: the Abar flies
        // G -> C_i -> C_j -> I, the A flies I -> C_j -> C_i -> G dropping a
        // fresh traveler at C_j on the way. Same length, same landings.
        const double relay = inst.dbar[pr.i] + dij + inst.d[pr.j];
        CityOverrides ov;
        ov[PatternKind::B] = {2.0 * inst.d[pr.i], inst.c[pr.i]};
        ov[PatternKind::Bbar] = {2.0 * inst.dbar[pr.j], inst.c[pr.j]};
        ov[PatternKind::A] = {relay, inst.c[pr.i] + inst.c[pr.j]};
        ov[PatternKind::Abar] = {relay, inst.c[pr.i] + inst.c[pr.j]};
        out.overrides[k] = ov;
        out.virtual_sources.push_back({k, pr.i, pr.j});
        out.n = k + 1;
        // Virtual cities never host central-central flights.
        for (auto& row : matrix) row.push_back(kInfiniteDuration);
        matrix.push_back(std::vector<double>(static_cast<std::size_t>(out.n), kInfiniteDuration));
        matrix[k][k] = 0.0;
    }
    return validate(out);
}

std::pair<double, double> path_metrics(const std::vector<int>& vertices,
                                       const GeneralInstance& g) {
    if (vertices.size() < 2) throw ZenoError("path needs at least two vertices");
    std::map<std::pair<int, int>, double> weight;
    for (const auto& e : g.edges) {
        auto it = weight.find({e.from, e.to});
        if (it == weight.end() || e.duration < it->second) weight[{e.from, e.to}] = e.duration;
        auto rt = weight.find({e.to, e.from});
        if (rt == weight.end() || e.duration < rt->second) weight[{e.to, e.from}] = e.duration;
    }
    double phi = 0.0, omega = 0.0;
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
        auto it = weight.find({vertices[i], vertices[i + 1]});
        if (it == weight.end()) throw ZenoError("path uses a missing edge");
        phi += it->second;
    }
    for (std::size_t i = 1; i < vertices.size(); ++i) omega += g.vertices[vertices[i]].cost;
    return {phi, omega};
}

std::vector<PathRecord> enumerate_paths(const GeneralInstance& g, int max_intermediate) {
    if (max_intermediate < 0) throw ZenoError("max_intermediate must be nonnegative");
    validate_general(g);

    // Arcs are directed; undirected graphs list both directions.
    std::vector<std::vector<std::pair<int, double>>> adj(g.vertices.size());
    for (const auto& e : g.edges) adj[e.from].push_back({e.to, e.duration});
    for (auto& lst : adj) {
        std::sort(lst.begin(), lst.end());
        lst.erase(std::unique(lst.begin(), lst.end(),
                              [](auto& a, auto& b) { return a.first == b.first; }),
                  lst.end());
    }

    std::vector<PathRecord> out;
    std::vector<int> path = {g.initial};
    std::vector<bool> used(g.vertices.size(), false);
    used[g.initial] = true;

    std::function<void(double, double)> dfs = [&](double phi, double omega) {
        int here = path.back();
        for (const auto& [next, w] : adj[here]) {
            if (used[next]) continue;
            if (next == g.goal) {
                path.push_back(next);
                out.push_back({path, phi + w, omega + g.vertices[next].cost});
                path.pop_back();
                continue;
            }
            if (static_cast<int>(path.size()) - 1 >= max_intermediate) continue;
            used[next] = true;
            path.push_back(next);
            dfs(phi + w, omega + g.vertices[next].cost);
            path.pop_back();
            used[next] = false;
        }
    };
    dfs(0.0, 0.0);
    return out;
}

std::vector<PathRecord> nondominated_paths(const std::vector<PathRecord>& paths) {
    std::vector<PathRecord> out;
    for (const auto& cand : paths) {
        bool dominated = false;
        for (const auto& other : paths) {
            if (&other == &cand) continue;
            if (approx_le(other.duration, cand.duration) && approx_le(other.cost, cand.cost) &&
                (approx_lt(other.duration, cand.duration) || approx_lt(other.cost, cand.cost))) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(cand);
    }
    return out;
}

ReduceResult reduce_to_clique(const GeneralInstance& g, int max_intermediate,
                              RelayMode relays) {
    const auto paths = nondominated_paths(enumerate_paths(g, max_intermediate));
    if (paths.empty()) throw ZenoError("no path from the initial to the goal vertex");

    Instance raw;
    raw.t = g.t;
    raw.p = g.p;
    ReduceMapping mapping;
    mapping.graph = g;
    for (const auto& v : g.vertices) mapping.vertex_ids.push_back(v.id);

    for (const auto& pr : paths) {
        for (std::size_t split = 1; split + 1 < pr.vertices.size(); ++split) {
            std::vector<int> west(pr.vertices.begin(), pr.vertices.begin() + split + 1);
            std::vector<int> east(pr.vertices.begin() + split, pr.vertices.end());
            auto [wphi, womega] = path_metrics(west, g);
            auto [ephi, eomega] = path_metrics(east, g);
            raw.d.push_back(wphi);
            raw.dbar.push_back(ephi);
            // The split vertex's landing cost is counted once, in the west part.
            raw.c.push_back(womega + eomega);
            mapping.cities.push_back({pr.vertices, static_cast<int>(split)});
        }
    }
    const int split_cities = static_cast<int>(raw.d.size());
    const bool synthesize =
        relays == RelayMode::On ||
        (relays == RelayMode::Auto && g.vertices.size() <= 8);

    // Relay synthesis. Hosts come from every enumerated route (dominated
    // ones included: their splits can still host a useful exchange); a host
    // records the exact landings of its west and east halves.
    struct Host {
        std::vector<int> path;
        int split;
        double dw, de;  // half durations
        double ww, we;  // west landings (split included), east interior
        double cs;      // split vertex landing cost
    };
    std::vector<Host> hosts;
    const auto all_paths =
        synthesize ? enumerate_paths(g, max_intermediate) : std::vector<PathRecord>{};
    for (const auto& pr : all_paths) {
        for (std::size_t split = 1; split + 1 < pr.vertices.size(); ++split) {
            std::vector<int> west(pr.vertices.begin(), pr.vertices.begin() + split + 1);
            std::vector<int> east(pr.vertices.begin() + split, pr.vertices.end());
            auto [wphi, womega] = path_metrics(west, g);
            auto [ephi, eomega] = path_metrics(east, g);
            hosts.push_back({pr.vertices, static_cast<int>(split), wphi, ephi, womega,
                             eomega, g.vertices[pr.vertices[split]].cost});
        }
    }

    // Non-dominated transit walks between any two split vertices (duration,
    // landings past the start vertex). The empty transit covers exchanges at
    // a shared vertex.
    std::map<std::pair<int, int>, std::vector<PathRecord>> transits;
    {
        std::set<int> spots;
        for (const Host& h : hosts) spots.insert(h.path[h.split]);
        for (int from : spots)
            for (int to : spots) {
                std::vector<PathRecord> list;
                if (from == to) {
                    list.push_back({{from}, 0.0, 0.0});
                } else {
                    // Landings charge every vertex after the start, the
                    // exchange vertex included.
                    GeneralInstance probe = g;
                    probe.initial = from;
                    probe.goal = to;
                    list = nondominated_paths(enumerate_paths(probe, max_intermediate));
                }
                transits[{from, to}] = std::move(list);
            }
    }

    struct Candidate {
        double dur[4], cost[4];  // B, Bbar, A, Abar
        VirtualRecipe recipe;
    };
    std::vector<Candidate> cands;
    for (const Host& hi : hosts) {          // drop side
        for (const Host& hj : hosts) {      // pick side
            const int si = hi.path[hi.split];
            const int sj = hj.path[hj.split];
            for (const PathRecord& tr : transits[{sj, si}]) {
                Candidate c;
                c.dur[0] = 2.0 * hi.dw;
                c.cost[0] = 2.0 * hi.ww - hi.cs;
                c.dur[1] = 2.0 * hj.de;
                c.cost[1] = 2.0 * hj.we + hj.cs;
                c.dur[2] = c.dur[3] = hj.dw + tr.duration + hi.de;
                c.cost[2] = c.cost[3] = hj.ww + tr.cost + hi.we;
                c.recipe.drop_route.assign(hi.path.begin(), hi.path.begin() + hi.split + 1);
                c.recipe.pick_route.assign(hj.path.begin() + hj.split, hj.path.end());
                std::vector<int> carrier(hj.path.begin(), hj.path.begin() + hj.split + 1);
                carrier.insert(carrier.end(), tr.vertices.begin() + 1, tr.vertices.end());
                carrier.insert(carrier.end(), hi.path.begin() + hi.split + 1, hi.path.end());
                c.recipe.carrier_route = std::move(carrier);
                cands.push_back(std::move(c));
            }
        }
    }
    auto tuple_le = [&](const double* da, const double* ca, const double* db,
                        const double* cb) {
        for (int k = 0; k < 4; ++k)
            if (!approx_le(da[k], db[k]) || !approx_le(ca[k], cb[k])) return false;
        return true;
    };
    std::vector<Candidate> kept;
    for (const Candidate& c : cands) {
        bool dominated = false;
        // A plain split city covering every pattern makes the relay useless.
        for (int i = 0; i < split_cities && !dominated; ++i) {
            const double dur[4] = {2 * raw.d[i], 2 * raw.dbar[i], raw.d[i] + raw.dbar[i],
                                   raw.d[i] + raw.dbar[i]};
            const double cost[4] = {raw.c[i], raw.c[i], raw.c[i], raw.c[i]};
            dominated = tuple_le(dur, cost, c.dur, c.cost);
        }
        for (const Candidate& other : kept)
            if (!dominated) dominated = tuple_le(other.dur, other.cost, c.dur, c.cost);
        if (!dominated) kept.push_back(c);
    }

    for (Candidate& c : kept) {
        const int k = static_cast<int>(raw.d.size());
        raw.d.push_back(c.dur[0] / 2.0);
        raw.dbar.push_back(c.dur[1] / 2.0);
        raw.c.push_back(c.cost[2]);
        CityOverrides ov;
        ov[PatternKind::B] = {c.dur[0], c.cost[0]};
        ov[PatternKind::Bbar] = {c.dur[1], c.cost[1]};
        ov[PatternKind::A] = {c.dur[2], c.cost[2]};
        ov[PatternKind::Abar] = {c.dur[3], c.cost[3]};
        raw.overrides[k] = ov;
        raw.virtual_sources.push_back(
            {k, -(c.recipe.drop_route.back() + 2), -(c.recipe.pick_route.front() + 2)});
        c.recipe.city = k;
        mapping.virtuals.push_back(c.recipe);
    }

    raw.n = static_cast<int>(raw.d.size());
    raw.central.emplace(raw.n, std::vector<double>(static_cast<std::size_t>(raw.n),
                                                   kInfiniteDuration));
    for (int i = 0; i < raw.n; ++i) (*raw.central)[i][i] = 0.0;

    // Track how validation merges duplicate split cities.
    Instance merged = validate(raw);
    mapping.merged.assign(static_cast<std::size_t>(split_cities), -1);
    for (int i = 0; i < split_cities; ++i) {
        for (int j = 0; j < merged.n; ++j) {
            if (merged.has_override(j)) continue;
            if (approx_eq(raw.d[i], merged.d[j]) && approx_eq(raw.dbar[i], merged.dbar[j]) &&
                approx_eq(raw.c[i], merged.c[j])) {
                mapping.merged[i] = j;
                break;
            }
        }
    }
    // Virtual city indices after the merge.
    for (std::size_t v = 0; v < mapping.virtuals.size(); ++v)
        mapping.virtuals[v].city = merged.virtual_sources[v].city;
    return {merged, mapping};
}

int real_city_count(const Instance& inst) {
    return inst.n - static_cast<int>(inst.virtual_sources.size());
}

namespace {

// First raw reduced city realizing a merged city index.
int representative(const ReduceResult& red, int merged_city) {
    for (std::size_t i = 0; i < red.mapping.merged.size(); ++i)
        if (red.mapping.merged[i] == merged_city) return static_cast<int>(i);
    throw ZenoError("expand_plan: unknown reduced city");
}

}  // namespace

Schedule expand_plan(const Schedule& s, const ReduceResult& red) {
    const GeneralInstance& g = red.mapping.graph;
    std::map<std::pair<int, int>, double> weight;
    for (const auto& e : g.edges) {
        weight[{e.from, e.to}] = e.duration;
        weight[{e.to, e.from}] = e.duration;
    }
    auto leg_duration = [&](int from, int to) {
        auto it = weight.find({from, to});
        if (it == weight.end()) throw ZenoError("expand_plan: missing edge");
        return it->second;
    };
    auto vertex_loc = [&](int v) {
        Loc loc = Loc::central(v);
        loc.name = g.vertices[v].id;
        if (v == g.initial) loc.kind = Loc::Initial;
        if (v == g.goal) loc.kind = Loc::Goal;
        return loc;
    };
    auto recipe_for = [&](int city) -> const VirtualRecipe* {
        for (const auto& vr : red.mapping.virtuals)
            if (vr.city == city) return &vr;
        return nullptr;
    };

    Schedule out;
    out.handoff = s.handoff;
    out.makespan = s.makespan;
    out.cost = s.cost;
    out.plane_legs.resize(s.plane_legs.size());
    for (std::size_t pl = 0; pl < s.plane_legs.size(); ++pl) {
        const auto& legs = s.plane_legs[pl];
        auto emit_walk = [&](const std::vector<int>& route, double start, double end,
                             bool carries, int pax) {
            double t = start;
            for (std::size_t i = 0; i + 1 < route.size(); ++i) {
                Leg real;
                real.from = vertex_loc(route[i]);
                real.to = vertex_loc(route[i + 1]);
                real.carries = carries;
                real.passenger = carries ? pax : -1;
                real.duration = leg_duration(route[i], route[i + 1]);
                real.start = t;
                real.end = t + real.duration;
                real.landing_cost = g.vertices[route[i + 1]].cost;
                t = real.end;
                out.plane_legs[pl].push_back(real);
            }
            // Waits recorded on the clique leg stay at its end.
            if (!out.plane_legs[pl].empty() && end > t + eps())
                out.plane_legs[pl].back().end = end;
        };

        for (std::size_t li = 0; li < legs.size(); ++li) {
            const Leg& leg = legs[li];
            const bool outbound = leg.from.kind != Loc::Central;
            const int city = outbound ? leg.to.city : leg.from.city;
            if (city < 0) throw ZenoError("expand_plan: leg without a reduced city");

            if (const VirtualRecipe* vr = recipe_for(city)) {
                // Pattern halves of a relay city. The carrier expands both
                // halves at once; drop and pickup round trips reuse the host
                // route halves.
                std::vector<int> route;
                if (outbound && leg.from.kind == Loc::Initial) {
                    const bool carrier = li + 1 < legs.size() &&
                                         legs[li + 1].to.kind == Loc::Goal;
                    if (carrier) {
                        const Leg& second = legs[li + 1];
                        emit_walk(vr->carrier_route, leg.start, second.end, leg.carries,
                                  leg.passenger);
                        ++li;
                        continue;
                    }
                    route = vr->drop_route;  // B outbound
                } else if (outbound) {
                    route.assign(vr->pick_route.rbegin(), vr->pick_route.rend());
                    if (li + 1 < legs.size() && legs[li + 1].to.kind == Loc::Initial) {
                        // Abar carrier flown in reverse.
                        const Leg& second = legs[li + 1];
                        emit_walk({vr->carrier_route.rbegin(), vr->carrier_route.rend()},
                                  leg.start, second.end, leg.carries, leg.passenger);
                        ++li;
                        continue;
                    }
                } else if (leg.to.kind == Loc::Initial) {
                    route.assign(vr->drop_route.rbegin(), vr->drop_route.rend());
                } else {
                    route = vr->pick_route;  // Bbar return
                }
                emit_walk(route, leg.start, leg.end, leg.carries, leg.passenger);
                continue;
            }

            const ReducedCity& rc = red.mapping.cities[representative(red, city)];
            std::vector<int> seg;
            const bool west_half = (outbound ? leg.from.kind : leg.to.kind) == Loc::Initial;
            if (west_half)
                seg.assign(rc.path.begin(), rc.path.begin() + rc.split + 1);
            else
                seg.assign(rc.path.begin() + rc.split, rc.path.end());
            if ((west_half && outbound) || (!west_half && !outbound)) {
                // fly it in stored order (I->split or split->G)
            } else {
                std::reverse(seg.begin(), seg.end());
            }
            emit_walk(seg, leg.start, leg.end, leg.carries, leg.passenger);
        }
    }
    return out;
}

GeneralInstance gen_hansen(int n, int t, int p) {
    if (n < 3 || n % 2 == 0) throw ZenoError("gen_hansen needs odd n >= 3");
    const int m = (n - 1) / 2;  // upper spine cities with a bypass choice
    GeneralInstance g;
    g.t = t;
    g.p = p;
    const double spine = static_cast<double>(n) * n / 4.0 + 1.0;
    g.vertices.push_back({"I", 0.0});
    std::vector<int> upper, lower;
    for (int i = 1; i <= m; ++i) {
        // Taking the bypass through L_i saves (spine - 2i) duration and pays
        // the same amount in landing cost, so every route choice is an even
        // trade and all 2^m paths stay mutually non-dominated.
        lower.push_back(static_cast<int>(g.vertices.size()));
        g.vertices.push_back({"L" + std::to_string(i), spine - 2.0 * i});
        upper.push_back(static_cast<int>(g.vertices.size()));
        g.vertices.push_back({"U" + std::to_string(i), 1.0});
    }
    lower.push_back(static_cast<int>(g.vertices.size()));
    g.vertices.push_back({"L" + std::to_string(m + 1), 0.0});
    g.vertices.push_back({"G", 0.0});
    g.initial = 0;
    g.goal = static_cast<int>(g.vertices.size()) - 1;

    int prev = g.initial;
    for (int i = 0; i < m; ++i) {
        const double wb = static_cast<double>(i + 1);
        g.edges.push_back({prev, upper[i], spine});      // direct hop
        g.edges.push_back({prev, lower[i], wb});         // bypass, two edges
        g.edges.push_back({lower[i], upper[i], wb});
        prev = upper[i];
    }
    const double wl = static_cast<double>(m + 1);
    g.edges.push_back({prev, lower[m], wl});  // forced last stretch
    g.edges.push_back({lower[m], g.goal, wl});
    validate_general(g);
    return g;
}

GeneralInstance gen_layered(int n, int t, int p) {
    const int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
    if (n < 4 || side * side != n) throw ZenoError("gen_layered needs a perfect square n >= 4");
    GeneralInstance g;
    g.t = t;
    g.p = p;
    g.vertices.push_back({"s", 0.0});
    std::vector<std::vector<int>> layer(static_cast<std::size_t>(side));
    for (int l = 0; l < side; ++l)
        for (int i = 0; i < side; ++i) {
            layer[l].push_back(static_cast<int>(g.vertices.size()));
            g.vertices.push_back(
                {"v" + std::to_string(l + 1) + "_" + std::to_string(i + 1), 1.0});
        }
    g.vertices.push_back({"t", 0.0});
    g.initial = 0;
    g.goal = static_cast<int>(g.vertices.size()) - 1;

    const double endpoint = static_cast<double>(n) * n;
    for (int i = 0; i < side; ++i) g.edges.push_back({g.initial, layer[0][i], endpoint});
    for (int l = 0; l + 1 < side; ++l)
        for (int i = 0; i < side; ++i)
            for (int j = 0; j < side; ++j) g.edges.push_back({layer[l][i], layer[l + 1][j], 1.0});
    for (int i = 0; i < side; ++i) g.edges.push_back({layer[side - 1][i], g.goal, endpoint});
    validate_general(g);
    return g;
}

}  // namespace zenofront
