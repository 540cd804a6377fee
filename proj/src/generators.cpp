#include "zenofront/generators.hpp"

#include <cmath>
#include <random>

namespace zenofront {

Family family_from_name(const std::string& name) {
    if (name == "linear") return Family::Linear;
    if (name == "sqrt") return Family::Sqrt;
    if (name == "log1p") return Family::Log1p;
    if (name == "affine_mod") return Family::AffineMod;
    throw ZenoError("unknown family: " + name);
}

const char* family_name(Family f) {
    switch (f) {
        case Family::Linear: return "linear";
        case Family::Sqrt: return "sqrt";
        case Family::Log1p: return "log1p";
        case Family::AffineMod: return "affine_mod";
    }
    return "?";
}

double family_value(Family f, int i) {
    switch (f) {
        case Family::Linear: return static_cast<double>(i);
        case Family::Sqrt: return std::sqrt(static_cast<double>(i));
        case Family::Log1p: return std::log(static_cast<double>(i) + 1.0);
        case Family::AffineMod: return 5.0 / 3.0 * i + i % 2;
    }
    return 0.0;
}

Instance generate(const GeneratorSpec& spec) {
    if (spec.n < 1) throw ZenoError("generator needs n >= 1");
    Instance inst;
    inst.n = spec.n;
    inst.t = spec.t;
    inst.p = spec.p;

    std::mt19937_64 rng(spec.seed.value_or(0));
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    auto emit = [&](const FamilySpec& fs, int i) {
        const int at = fs.reversed ? spec.n + 1 - i : i;
        double v = family_value(fs.family, at);
        if (spec.seed) v *= 1.0 + spec.jitter * unit(rng);
        if (!(v > 0.0)) throw ZenoError("family produced a non-positive value");
        return v;
    };
    for (int i = 1; i <= spec.n; ++i) {
        inst.d.push_back(emit(spec.d, i));
        inst.dbar.push_back(emit(spec.dbar, i));
        inst.c.push_back(emit(spec.c, i));
    }
    return validate(inst);
}

}  // namespace zenofront
