// AArch64 Advanced SIMD variant. Two float64x2 registers stand in for the
// four reduction lanes of the scalar reference.

#include <arm_neon.h>

#include "eprsim/simd/kernels.hpp"
#include "scalar_ops.hpp"

namespace eprsim::simd {

namespace {

inline float64x2_t project2(float64x2_t x, float64x2_t y, float64x2_t z, const double* d) {
    return vaddq_f64(vaddq_f64(vmulq_f64(vdupq_n_f64(d[0]), x), vmulq_f64(vdupq_n_f64(d[1]), y)),
                     vmulq_f64(vdupq_n_f64(d[2]), z));
}

inline float64x2_t clamp2(float64x2_t c) { return vminq_f64(vmaxq_f64(c, vdupq_n_f64(-1.0)), vdupq_n_f64(1.0)); }

void project(const double* px, const double* py, const double* pz, const double* dir, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_f64(out + i, project2(vld1q_f64(px + i), vld1q_f64(py + i), vld1q_f64(pz + i), dir));
    for (; i < n; ++i) out[i] = detail::project_one(px[i], py[i], pz[i], dir);
}

void pair_products(const double* px, const double* py, const double* pz, const double* a, const double* b,
                   double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t x = vld1q_f64(px + i);
        const float64x2_t y = vld1q_f64(py + i);
        const float64x2_t z = vld1q_f64(pz + i);
        vst1q_f64(out + i, clamp2(vmulq_f64(project2(x, y, z, a), project2(x, y, z, b))));
    }
    for (; i < n; ++i) out[i] = detail::product_one(px[i], py[i], pz[i], a, b);
}

void correlation_from_products(const double* c, double* out, std::size_t n) {
    const float64x2_t one = vdupq_n_f64(1.0);
    const float64x2_t quarter = vdupq_n_f64(0.25);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t cv = vld1q_f64(c + i);
        const float64x2_t same = vmulq_f64(quarter, vsubq_f64(one, cv));
        const float64x2_t diff = vmulq_f64(quarter, vaddq_f64(one, cv));
        vst1q_f64(out + i, vaddq_f64(vsubq_f64(vsubq_f64(same, diff), diff), same));
    }
    for (; i < n; ++i) out[i] = detail::correlation_one(c[i]);
}

void moments(const double* v, std::size_t n, double* sum, double* sum_sq) {
    float64x2_t s01 = vdupq_n_f64(0.0);
    float64x2_t s23 = vdupq_n_f64(0.0);
    float64x2_t q01 = vdupq_n_f64(0.0);
    float64x2_t q23 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const float64x2_t lo = vld1q_f64(v + i);
        const float64x2_t hi = vld1q_f64(v + i + 2);
        s01 = vaddq_f64(s01, lo);
        s23 = vaddq_f64(s23, hi);
        q01 = vaddq_f64(q01, vmulq_f64(lo, lo));
        q23 = vaddq_f64(q23, vmulq_f64(hi, hi));
    }
    double sl[4] = {vgetq_lane_f64(s01, 0), vgetq_lane_f64(s01, 1), vgetq_lane_f64(s23, 0), vgetq_lane_f64(s23, 1)};
    double ql[4] = {vgetq_lane_f64(q01, 0), vgetq_lane_f64(q01, 1), vgetq_lane_f64(q23, 0), vgetq_lane_f64(q23, 1)};
    for (; i < n; ++i) {
        sl[i % 4] += v[i];
        ql[i % 4] += v[i] * v[i];
    }
    *sum = (sl[0] + sl[1]) + (sl[2] + sl[3]);
    *sum_sq = (ql[0] + ql[1]) + (ql[2] + ql[3]);
}

void tally(const double* c, const double* u, std::size_t n, std::uint64_t* counts) {
    const float64x2_t one = vdupq_n_f64(1.0);
    const float64x2_t quarter = vdupq_n_f64(0.25);
    uint64x2_t ge1 = vdupq_n_u64(0);
    uint64x2_t ge2 = vdupq_n_u64(0);
    uint64x2_t ge3 = vdupq_n_u64(0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t cv = clamp2(vld1q_f64(c + i));
        const float64x2_t uv = vld1q_f64(u + i);
        const float64x2_t same = vmulq_f64(quarter, vsubq_f64(one, cv));
        const float64x2_t diff = vmulq_f64(quarter, vaddq_f64(one, cv));
        const float64x2_t t2 = vaddq_f64(same, diff);
        const float64x2_t t3 = vaddq_f64(t2, diff);
        ge1 = vsubq_u64(ge1, vcgeq_f64(uv, same));
        ge2 = vsubq_u64(ge2, vcgeq_f64(uv, t2));
        ge3 = vsubq_u64(ge3, vcgeq_f64(uv, t3));
    }
    std::uint64_t ge[3] = {vgetq_lane_u64(ge1, 0) + vgetq_lane_u64(ge1, 1),
                           vgetq_lane_u64(ge2, 0) + vgetq_lane_u64(ge2, 1),
                           vgetq_lane_u64(ge3, 0) + vgetq_lane_u64(ge3, 1)};
    for (; i < n; ++i) detail::threshold_one(c[i], u[i], ge);
    detail::finish_tally(n, ge, counts);
}

}  // namespace

const KernelTable& neon_kernel_table() {
    static const KernelTable table{Isa::neon, "neon", project, pair_products, correlation_from_products,
                                   moments,   tally};
    return table;
}

}  // namespace eprsim::simd
