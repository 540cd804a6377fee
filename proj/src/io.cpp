#include "zenofront/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace zenofront {

using nlohmann::json;

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

PatternKind kind_from_string(const std::string& s) {
    if (s == "A") return PatternKind::A;
    if (s == "Abar") return PatternKind::Abar;
    if (s == "B") return PatternKind::B;
    if (s == "Bbar") return PatternKind::Bbar;
    throw ZenoError("unknown pattern kind: " + s);
}

}  // namespace

std::string instance_to_json(const Instance& inst) {
    json j;
    j["n"] = inst.n;
    j["t"] = inst.t;
    j["p"] = inst.p;
    j["d"] = inst.d;
    j["dbar"] = inst.dbar;
    j["c"] = inst.c;
    if (inst.central) j["central"] = *inst.central;
    if (!inst.overrides.empty()) {
        json arr = json::array();
        for (const auto& [city, kinds] : inst.overrides) {
            json entry;
            entry["city"] = city;
            json pats;
            for (const auto& [kind, ov] : kinds)
                pats[pattern_name(kind)] = {{"duration", ov.duration}, {"cost", ov.cost}};
            entry["patterns"] = pats;
            for (const auto& v : inst.virtual_sources)
                if (v.city == city) entry["source"] = {{"i", v.i}, {"j", v.j}};
            arr.push_back(entry);
        }
        j["overrides"] = arr;
    }
    return j.dump(2) + "\n";
}

Instance instance_from_json(const std::string& text) {
    json j = json::parse(text);
    Instance inst;
    inst.n = j.at("n").get<int>();
    inst.t = j.at("t").get<int>();
    inst.p = j.at("p").get<int>();
    inst.d = j.at("d").get<std::vector<double>>();
    inst.dbar = j.at("dbar").get<std::vector<double>>();
    inst.c = j.at("c").get<std::vector<double>>();
    if (j.contains("central"))
        inst.central = j.at("central").get<std::vector<std::vector<double>>>();
    if (j.contains("overrides")) {
        for (const auto& entry : j.at("overrides")) {
            const int city = entry.at("city").get<int>();
            CityOverrides ov;
            for (auto it = entry.at("patterns").begin(); it != entry.at("patterns").end(); ++it)
                ov[kind_from_string(it.key())] = {it.value().at("duration").get<double>(),
                                                  it.value().at("cost").get<double>()};
            inst.overrides[city] = ov;
            if (entry.contains("source"))
                inst.virtual_sources.push_back({city, entry.at("source").at("i").get<int>(),
                                                entry.at("source").at("j").get<int>()});
        }
    }
    return validate(inst);
}

void write_instance(const Instance& inst, const std::string& path) {
    write_text(path, instance_to_json(inst));
}

Instance read_instance(const std::string& path) { return instance_from_json(read_text(path)); }

std::string general_to_json(const GeneralInstance& g) {
    json j;
    json verts = json::array();
    for (const auto& v : g.vertices) verts.push_back({{"id", v.id}, {"cost", v.cost}});
    json edges = json::array();
    for (const auto& e : g.edges)
        edges.push_back({{"from", g.vertices[e.from].id},
                         {"to", g.vertices[e.to].id},
                         {"duration", e.duration}});
    j["vertices"] = verts;
    j["edges"] = edges;
    j["I"] = g.vertices[g.initial].id;
    j["G"] = g.vertices[g.goal].id;
    j["t"] = g.t;
    j["p"] = g.p;
    return j.dump(2) + "\n";
}

GeneralInstance general_from_json(const std::string& text) {
    json j = json::parse(text);
    GeneralInstance g;
    for (const auto& v : j.at("vertices"))
        g.vertices.push_back({v.at("id").get<std::string>(), v.at("cost").get<double>()});
    for (const auto& e : j.at("edges")) {
        int from = g.vertex_index(e.at("from").get<std::string>());
        int to = g.vertex_index(e.at("to").get<std::string>());
        if (from < 0 || to < 0) throw ZenoError("edge references unknown vertex");
        g.edges.push_back({from, to, e.at("duration").get<double>()});
    }
    g.initial = g.vertex_index(j.at("I").get<std::string>());
    g.goal = g.vertex_index(j.at("G").get<std::string>());
    g.t = j.at("t").get<int>();
    g.p = j.at("p").get<int>();
    validate_general(g);
    return g;
}

void write_general(const GeneralInstance& g, const std::string& path) {
    write_text(path, general_to_json(g));
}

GeneralInstance read_general(const std::string& path) {
    return general_from_json(read_text(path));
}

std::string front_to_csv(const std::vector<FrontPoint>& front) {
    std::ostringstream os;
    os << "cost,makespan\n";
    for (const auto& fp : front) os << fmt_double(fp.cost) << ',' << fmt_double(fp.makespan) << '\n';
    return os.str();
}

std::string front_to_json(const std::vector<FrontPoint>& front,
                          const std::vector<std::string>& names) {
    json arr = json::array();
    for (const auto& fp : front) {
        json p;
        p["cost"] = fp.cost;
        p["makespan"] = fp.makespan;
        p["ppp"] = ppp_to_string(fp.ppp);
        json plan = json::array();
        std::istringstream lines(render_arrows(fp.witness, names));
        std::string line;
        while (std::getline(lines, line)) plan.push_back(line);
        p["plan"] = plan;
        arr.push_back(p);
    }
    json j;
    j["front"] = arr;
    return j.dump(2) + "\n";
}

std::string stats_to_json(const Stats& stats) {
    json j;
    j["iterations"] = stats.iterations;
    j["lowest_makespan_calls"] = stats.makespan_calls;
    j["pruned"] = stats.pruned;
    j["store_size"] = stats.store_size;
    j["front_size"] = stats.front_size;
    j["prune_effective"] = stats.prune_effective;
    j["workers"] = stats.workers;
    j["elapsed_ms"] = stats.elapsed_ms;
    return j.dump(2) + "\n";
}

std::string mapping_to_json(const ReduceResult& red) {
    json cities = json::array();
    for (std::size_t i = 0; i < red.mapping.cities.size(); ++i) {
        const auto& rc = red.mapping.cities[i];
        json c;
        c["city"] = red.mapping.merged[i];
        json path = json::array();
        for (int v : rc.path) path.push_back(red.mapping.vertex_ids[v]);
        c["path"] = path;
        c["split"] = rc.split;
        cities.push_back(c);
    }
    json j;
    j["cities"] = cities;
    return j.dump(2) + "\n";
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ZenoError("cannot write file: " + path);
    out << text;
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ZenoError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace zenofront
