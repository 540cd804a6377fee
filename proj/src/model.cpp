#include "zenofront/model.hpp"

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdlib>
#include <sstream>

namespace zenofront {

double eps() {
    static const double value = [] {
        if (const char* s = std::getenv("ZENOFRONT_EPS")) {
            char* end = nullptr;
            double v = std::strtod(s, &end);
            if (end != s && std::isfinite(v) && v > 0) return v;
        }
        return 1e-9;
    }();
    return value;
}

const char* pattern_name(PatternKind k) {
    switch (k) {
        case PatternKind::A: return "A";
        case PatternKind::Abar: return "Abar";
        case PatternKind::B: return "B";
        case PatternKind::Bbar: return "Bbar";
    }
    return "?";
}

bool Instance::is_virtual(int city) const {
    for (const auto& v : virtual_sources)
        if (v.city == city) return true;
    return false;
}

bool Instance::needs_relay_carrier(int city) const {
    for (const auto& v : virtual_sources)
        if (v.city == city) return v.i != v.j;
    return false;
}

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw ValidationError(msg);
}

bool finite_nonneg(double v) { return std::isfinite(v) && v >= 0.0; }

bool same_city(const Instance& in, int i, int j) {
    if (!approx_eq(in.d[i], in.d[j]) || !approx_eq(in.dbar[i], in.dbar[j]) ||
        !approx_eq(in.c[i], in.c[j]))
        return false;
    // Cities carrying overrides or distinct central rows are kept apart.
    if (in.has_override(i) || in.has_override(j)) return false;
    if (in.central) {
        const auto& m = *in.central;
        for (int k = 0; k < in.n; ++k) {
            if (k == i || k == j) continue;
            if (!approx_eq(m[i][k], m[j][k])) return false;
        }
    }
    return true;
}

}  // namespace

Instance validate(const Instance& raw) {
    require(raw.n >= 1, "instance needs at least one central city");
    require(raw.p >= 1, "instance needs at least one plane");
    require(raw.t >= raw.p, "problem trivial/undefined: t < p");
    const auto n = static_cast<std::size_t>(raw.n);
    require(raw.d.size() == n && raw.dbar.size() == n && raw.c.size() == n,
            "d, dbar and c must all have length n");
    for (int i = 0; i < raw.n; ++i) {
        require(finite_nonneg(raw.d[i]), "negative or non-finite duration d");
        require(finite_nonneg(raw.dbar[i]), "negative or non-finite duration dbar");
        require(finite_nonneg(raw.c[i]), "negative or non-finite cost c");
    }
    if (raw.central) {
        require(raw.central->size() == n, "central matrix must be n x n");
        for (const auto& row : *raw.central) {
            require(row.size() == n, "central matrix must be n x n");
            for (double v : row) require(finite_nonneg(v), "negative or non-finite central entry");
        }
    }
    for (const auto& [city, kinds] : raw.overrides) {
        require(city >= 0 && city < raw.n, "override references unknown city");
        for (const auto& [kind, ov] : kinds) {
            (void)kind;
            require(finite_nonneg(ov.duration) && finite_nonneg(ov.cost),
                    "override with negative or non-finite value");
        }
    }

    // Merge duplicate (d, dbar, c) triples, keeping the first occurrence.
    Instance out = raw;
    std::vector<int> keep;
    std::vector<int> remap(n, -1);
    for (int i = 0; i < raw.n; ++i) {
        int found = -1;
        for (int k : keep) {
            if (same_city(raw, k, i)) {
                found = k;
                break;
            }
        }
        if (found >= 0) {
            remap[i] = remap[found];
        } else {
            remap[i] = static_cast<int>(keep.size());
            keep.push_back(i);
        }
    }
    if (keep.size() != n) {
        out.n = static_cast<int>(keep.size());
        out.d.clear();
        out.dbar.clear();
        out.c.clear();
        for (int k : keep) {
            out.d.push_back(raw.d[k]);
            out.dbar.push_back(raw.dbar[k]);
            out.c.push_back(raw.c[k]);
        }
        if (raw.central) {
            std::vector<std::vector<double>> m(keep.size(), std::vector<double>(keep.size(), 0.0));
            for (std::size_t a = 0; a < keep.size(); ++a)
                for (std::size_t b = 0; b < keep.size(); ++b)
                    m[a][b] = (*raw.central)[keep[a]][keep[b]];
            out.central = std::move(m);
        }
        out.overrides.clear();
        for (const auto& [city, kinds] : raw.overrides) out.overrides[remap[city]] = kinds;
        out.virtual_sources.clear();
        for (const auto& v : raw.virtual_sources) {
            auto remap_endpoint = [&](int x) { return x >= 0 ? remap[x] : x; };
            out.virtual_sources.push_back(
                {remap[v.city], remap_endpoint(v.i), remap_endpoint(v.j)});
        }
    }

    out.symmetric = true;
    for (int i = 0; i < out.n; ++i) {
        if (!approx_eq(out.d[i], out.dbar[i])) {
            out.symmetric = false;
            break;
        }
    }
    out.validated = true;
    return out;
}

std::vector<TriangleViolation> check_triangle(const Instance& inst) {
    if (!inst.central) throw ZenoError("check_triangle requires the central matrix");
    // Node encoding: -1 = I, -2 = G, 0.. = central city.
    std::vector<int> nodes = {-1, -2};
    for (int i = 0; i < inst.n; ++i) nodes.push_back(i);

    auto dist = [&](int x, int y) -> std::optional<double> {
        if (x == y) return 0.0;
        if (x > y) std::swap(x, y);
        if (x == -2 && y >= 0) return inst.dbar[y];  // G <-> city
        if (x == -1 && y >= 0) return inst.d[y];     // I <-> city
        if (x == -2 && y == -1) return std::nullopt; // no direct I <-> G edge
        double v = (*inst.central)[x][y];
        if (v >= kInfiniteDuration / 2) return std::nullopt;  // sentinel
        return v;
    };

    std::vector<TriangleViolation> out;
    for (int x : nodes)
        for (int y : nodes)
            for (int z : nodes) {
                if (x == y || y == z || x == z) continue;
                auto xy = dist(x, y), yz = dist(y, z), xz = dist(x, z);
                if (!xy || !yz || !xz) continue;
                if (*xy + *yz < *xz - eps()) out.push_back({x, y, z, *xy + *yz, *xz});
            }
    return out;
}

double pattern_duration(const Instance& inst, int city, PatternKind kind) {
    auto it = inst.overrides.find(city);
    if (it != inst.overrides.end()) {
        auto k = it->second.find(kind);
        if (k != it->second.end()) return k->second.duration;
    }
    switch (kind) {
        case PatternKind::A:
        case PatternKind::Abar: return inst.d[city] + inst.dbar[city];
        case PatternKind::B: return 2.0 * inst.d[city];
        case PatternKind::Bbar: return 2.0 * inst.dbar[city];
    }
    return 0.0;
}

double pattern_cost(const Instance& inst, int city, PatternKind kind) {
    auto it = inst.overrides.find(city);
    if (it != inst.overrides.end()) {
        auto k = it->second.find(kind);
        if (k != it->second.end()) return k->second.cost;
    }
    return inst.c[city];
}

std::pair<double, double> pattern_legs(const Instance& inst, int city, PatternKind kind) {
    auto it = inst.overrides.find(city);
    if (it != inst.overrides.end()) {
        auto k = it->second.find(kind);
        if (k != it->second.end()) {
            double half = k->second.duration / 2.0;
            return {half, half};
        }
    }
    switch (kind) {
        case PatternKind::A: return {inst.d[city], inst.dbar[city]};
        case PatternKind::Abar: return {inst.dbar[city], inst.d[city]};
        case PatternKind::B: return {inst.d[city], inst.d[city]};
        case PatternKind::Bbar: return {inst.dbar[city], inst.dbar[city]};
    }
    return {0.0, 0.0};
}

void Ppp::normalize(const Instance& inst) {
    auto order = [&](std::vector<int>& v) {
        std::sort(v.begin(), v.end(), [&](int x, int y) {
            if (inst.d[x] != inst.d[y]) return inst.d[x] > inst.d[y];
            return x < y;
        });
    };
    order(a);
    order(abar);
    order(b);
}

bool Ppp::well_formed(const Instance& inst) const {
    auto in_range = [&](const std::vector<int>& v) {
        return std::all_of(v.begin(), v.end(), [&](int x) { return x >= 0 && x < inst.n; });
    };
    if (!in_range(a) || !in_range(abar) || !in_range(b)) return false;
    int k = static_cast<int>(abar.size());
    if (static_cast<int>(a.size()) != k + inst.p) return false;
    if (static_cast<int>(b.size()) != inst.t - inst.p - k) return false;
    return inst.t - inst.p - k >= 0;
}

std::string ppp_to_string(const Ppp& ppp) {
    std::ostringstream os;
    os << '(';
    for (int x : ppp.a) os << x << ',';
    os << ")(";
    for (int x : ppp.abar) os << x << ',';
    os << "){";
    for (int x : ppp.b) os << x << ',';
    os << '}';
    return os.str();
}

int GeneralInstance::vertex_index(const std::string& id) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].id == id) return static_cast<int>(i);
    return -1;
}

void validate_general(const GeneralInstance& g) {
    const int n = static_cast<int>(g.vertices.size());
    require(g.initial >= 0 && g.initial < n, "unknown initial vertex");
    require(g.goal >= 0 && g.goal < n, "unknown goal vertex");
    require(g.initial != g.goal, "initial and goal vertices must differ");
    require(g.p >= 1, "instance needs at least one plane");
    require(g.t >= g.p, "problem trivial/undefined: t < p");
    for (const auto& v : g.vertices)
        require(finite_nonneg(v.cost), "negative or non-finite vertex cost");
    for (const auto& e : g.edges) {
        require(e.from >= 0 && e.from < n && e.to >= 0 && e.to < n, "edge references unknown vertex");
        require(finite_nonneg(e.duration), "negative or non-finite edge duration");
    }
    // Connectivity over the undirected closure.
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : g.edges) {
        adj[e.from].push_back(e.to);
        adj[e.to].push_back(e.from);
    }
    std::vector<bool> seen(n, false);
    std::vector<int> stack = {g.initial};
    seen[g.initial] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    require(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }),
            "graph is not connected");
}

}  // namespace zenofront
