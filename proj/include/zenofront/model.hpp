#ifndef ZENOFRONT_MODEL_HPP
#define ZENOFRONT_MODEL_HPP

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zenofront/tolerance.hpp"

namespace zenofront {

struct ZenoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : ZenoError {
    using ZenoError::ZenoError;
};

// The four one-city plane round-trip shapes. A carries a passenger from the
// initial city to the goal, Abar repositions a plane back, B ferries a
// passenger out to a central city, Bbar picks one up from a central city.
enum class PatternKind { A, Abar, B, Bbar };

inline constexpr std::array<PatternKind, 4> kAllPatternKinds = {
    PatternKind::A, PatternKind::Abar, PatternKind::B, PatternKind::Bbar};

const char* pattern_name(PatternKind k);

struct PatternOverride {
    double duration = 0.0;  // total pattern duration
    double cost = 0.0;      // total landing cost of the pattern
};

using CityOverrides = std::map<PatternKind, PatternOverride>;

// Provenance of a virtual city: the two exchange endpoints of its relay.
// The clique transform stores city indices; the graph reduction stores
// vertex ids encoded as -(vertex + 2) so city remapping leaves them alone.
struct VirtualSource {
    int city = -1;  // index of the virtual city
    int i = -1;     // drop endpoint
    int j = -1;     // pick endpoint
};

// A clique problem: n central cities all connected to the initial city I and
// the goal city G, t travelers and p planes starting at I.
struct Instance {
    int n = 0;
    int t = 0;
    int p = 0;
    std::vector<double> d;     // I  -> C_i flight duration
    std::vector<double> dbar;  // C_i -> G flight duration
    std::vector<double> c;     // landing cost of C_i
    std::optional<std::vector<std::vector<double>>> central;  // d_ij
    std::map<int, CityOverrides> overrides;  // per-pattern replacements
    std::vector<VirtualSource> virtual_sources;

    bool symmetric = false;  // set by validate()
    bool validated = false;

    bool has_override(int city) const { return overrides.count(city) != 0; }
    bool is_virtual(int city) const;
    // Pairings at a virtual city whose drop and pick endpoints differ only
    // work if a carrier pattern of the same city joins them.
    bool needs_relay_carrier(int city) const;
};

// Checks ranges, merges duplicate cities and computes the symmetry flag.
Instance validate(const Instance& raw);

struct TriangleViolation {
    // Locations encoded as -1 for I, -2 for G, otherwise a city index.
    int via_from, via_mid, via_to;
    double indirect, direct;
};

// Report-only triangle inequality audit over all point triples, including I
// and G endpoints. Sentinel (infinite) inter-central entries are skipped.
std::vector<TriangleViolation> check_triangle(const Instance& inst);

// Total duration / landing cost of one pattern execution at a city,
// honoring per-pattern overrides.
double pattern_duration(const Instance& inst, int city, PatternKind kind);
double pattern_cost(const Instance& inst, int city, PatternKind kind);
// Outbound and inbound leg durations of the pattern (halves for overrides).
std::pair<double, double> pattern_legs(const Instance& inst, int city, PatternKind kind);

// Candidate Pareto-optimal plan skeleton: multisets of central cities for
// the A patterns, the Abar patterns and the paired B/Bbar executions.
// All three are kept in nonincreasing order of d (ties by city index).
struct Ppp {
    std::vector<int> a;
    std::vector<int> abar;
    std::vector<int> b;

    int k() const { return static_cast<int>(abar.size()); }
    void normalize(const Instance& inst);
    bool well_formed(const Instance& inst) const;

    // Deterministic total order used for tie-breaking between equal fronts.
    std::strong_ordering operator<=>(const Ppp&) const = default;
};

std::string ppp_to_string(const Ppp& ppp);

// Weighted graph problem: arbitrary vertices with landing costs, designated
// initial and goal vertices, reducible to a clique Instance.
struct GeneralVertex {
    std::string id;
    double cost = 0.0;
};

struct GeneralEdge {
    int from = -1;
    int to = -1;
    double duration = 0.0;
};

struct GeneralInstance {
    std::vector<GeneralVertex> vertices;
    std::vector<GeneralEdge> edges;  // directed arcs
    int initial = -1;
    int goal = -1;
    int t = 0;
    int p = 0;

    int vertex_index(const std::string& id) const;
};

void validate_general(const GeneralInstance& g);

}  // namespace zenofront

#endif
