#ifndef ZENOFRONT_GENERATORS_HPP
#define ZENOFRONT_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "zenofront/model.hpp"

namespace zenofront {

// Closed set of value families for parametric benchmark instances.
enum class Family { Linear, Sqrt, Log1p, AffineMod };

Family family_from_name(const std::string& name);
const char* family_name(Family f);
double family_value(Family f, int i);  // i is 1-based

struct FamilySpec {
    Family family = Family::Linear;
    // Evaluate at n+1-i instead of i. Pairing an ascending cost family with
    // a reversed duration family produces the cost/speed tradeoff fronts.
    bool reversed = false;
};

struct GeneratorSpec {
    int n = 1;
    int t = 1;
    int p = 1;
    FamilySpec d;
    FamilySpec dbar;
    FamilySpec c;
    std::optional<std::uint64_t> seed;  // enables jitter
    double jitter = 0.05;               // relative amplitude
};

Instance generate(const GeneratorSpec& spec);

}  // namespace zenofront

#endif
