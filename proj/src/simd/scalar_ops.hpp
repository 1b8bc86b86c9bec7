#pragma once

// Per-element reference operations. SIMD variants use these for loop tails
// and must reproduce them exactly in their vector bodies.

#include <algorithm>
#include <cstddef>
#include <cstdint>

namespace eprsim::simd::detail {

inline double project_one(double x, double y, double z, const double* d) { return d[0] * x + d[1] * y + d[2] * z; }

inline double clamp_unit(double c) { return std::min(std::max(c, -1.0), 1.0); }

inline double product_one(double x, double y, double z, const double* a, const double* b) {
    return clamp_unit(project_one(x, y, z, a) * project_one(x, y, z, b));
}

inline double correlation_one(double c) {
    const double same = 0.25 * (1.0 - c);
    const double diff = 0.25 * (1.0 + c);
    return ((same - diff) - diff) + same;
}

// Adds [u >= t1, u >= t2, u >= t3] to ge[0..2].
inline void threshold_one(double c, double u, std::uint64_t* ge) {
    c = clamp_unit(c);
    const double same = 0.25 * (1.0 - c);
    const double diff = 0.25 * (1.0 + c);
    const double t1 = same;
    const double t2 = t1 + diff;
    const double t3 = t2 + diff;
    ge[0] += u >= t1;
    ge[1] += u >= t2;
    ge[2] += u >= t3;
}

inline void finish_tally(std::size_t n, const std::uint64_t* ge, std::uint64_t* counts) {
    counts[0] += n - ge[0];
    counts[1] += ge[0] - ge[1];
    counts[2] += ge[1] - ge[2];
    counts[3] += ge[2];
}

}  // namespace eprsim::simd::detail
