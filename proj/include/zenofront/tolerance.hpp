#ifndef ZENOFRONT_TOLERANCE_HPP
#define ZENOFRONT_TOLERANCE_HPP

#include <cmath>
#include <cstdint>

namespace zenofront {

// Absolute comparison tolerance for durations, costs and objective values.
// Overridable through the ZENOFRONT_EPS environment variable; read once.
double eps();

// Sentinel used for "no flight possible" inter-central distances.
inline constexpr double kInfiniteDuration = 1e18;

// Cost keys in the pruning store are snapped to this fixed grid.
inline constexpr double kCostGrid = 1e-9;

inline bool approx_eq(double a, double b) { return std::fabs(a - b) <= eps(); }
inline bool approx_le(double a, double b) { return a <= b + eps(); }
inline bool approx_lt(double a, double b) { return a < b - eps(); }

inline std::int64_t cost_key(double cost) {
    return static_cast<std::int64_t>(std::llround(cost / kCostGrid));
}

}  // namespace zenofront

#endif
