// Compiled with -mavx2 only; selected at runtime after a CPUID check.

#include <immintrin.h>

#include "eprsim/simd/kernels.hpp"
#include "scalar_ops.hpp"

namespace eprsim::simd {

namespace {

inline __m256d project4(__m256d x, __m256d y, __m256d z, __m256d dx, __m256d dy, __m256d dz) {
    return _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(dx, x), _mm256_mul_pd(dy, y)), _mm256_mul_pd(dz, z));
}

inline __m256d clamp4(__m256d c) {
    return _mm256_min_pd(_mm256_max_pd(c, _mm256_set1_pd(-1.0)), _mm256_set1_pd(1.0));
}

void project(const double* px, const double* py, const double* pz, const double* dir, double* out, std::size_t n) {
    const __m256d dx = _mm256_set1_pd(dir[0]);
    const __m256d dy = _mm256_set1_pd(dir[1]);
    const __m256d dz = _mm256_set1_pd(dir[2]);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d r =
            project4(_mm256_loadu_pd(px + i), _mm256_loadu_pd(py + i), _mm256_loadu_pd(pz + i), dx, dy, dz);
        _mm256_storeu_pd(out + i, r);
    }
    for (; i < n; ++i) out[i] = detail::project_one(px[i], py[i], pz[i], dir);
}

void pair_products(const double* px, const double* py, const double* pz, const double* a, const double* b,
                   double* out, std::size_t n) {
    const __m256d ax = _mm256_set1_pd(a[0]);
    const __m256d ay = _mm256_set1_pd(a[1]);
    const __m256d az = _mm256_set1_pd(a[2]);
    const __m256d bx = _mm256_set1_pd(b[0]);
    const __m256d by = _mm256_set1_pd(b[1]);
    const __m256d bz = _mm256_set1_pd(b[2]);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d x = _mm256_loadu_pd(px + i);
        const __m256d y = _mm256_loadu_pd(py + i);
        const __m256d z = _mm256_loadu_pd(pz + i);
        const __m256d pa = project4(x, y, z, ax, ay, az);
        const __m256d pb = project4(x, y, z, bx, by, bz);
        _mm256_storeu_pd(out + i, clamp4(_mm256_mul_pd(pa, pb)));
    }
    for (; i < n; ++i) out[i] = detail::product_one(px[i], py[i], pz[i], a, b);
}

void correlation_from_products(const double* c, double* out, std::size_t n) {
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d quarter = _mm256_set1_pd(0.25);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d cv = _mm256_loadu_pd(c + i);
        const __m256d same = _mm256_mul_pd(quarter, _mm256_sub_pd(one, cv));
        const __m256d diff = _mm256_mul_pd(quarter, _mm256_add_pd(one, cv));
        const __m256d e = _mm256_add_pd(_mm256_sub_pd(_mm256_sub_pd(same, diff), diff), same);
        _mm256_storeu_pd(out + i, e);
    }
    for (; i < n; ++i) out[i] = detail::correlation_one(c[i]);
}

void moments(const double* v, std::size_t n, double* sum, double* sum_sq) {
    __m256d s = _mm256_setzero_pd();
    __m256d q = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d x = _mm256_loadu_pd(v + i);
        s = _mm256_add_pd(s, x);
        q = _mm256_add_pd(q, _mm256_mul_pd(x, x));
    }
    alignas(32) double sl[4];
    alignas(32) double ql[4];
    _mm256_store_pd(sl, s);
    _mm256_store_pd(ql, q);
    for (; i < n; ++i) {
        sl[i % 4] += v[i];
        ql[i % 4] += v[i] * v[i];
    }
    *sum = (sl[0] + sl[1]) + (sl[2] + sl[3]);
    *sum_sq = (ql[0] + ql[1]) + (ql[2] + ql[3]);
}

void tally(const double* c, const double* u, std::size_t n, std::uint64_t* counts) {
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d quarter = _mm256_set1_pd(0.25);
    __m256i ge1 = _mm256_setzero_si256();
    __m256i ge2 = _mm256_setzero_si256();
    __m256i ge3 = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d cv = clamp4(_mm256_loadu_pd(c + i));
        const __m256d uv = _mm256_loadu_pd(u + i);
        const __m256d same = _mm256_mul_pd(quarter, _mm256_sub_pd(one, cv));
        const __m256d diff = _mm256_mul_pd(quarter, _mm256_add_pd(one, cv));
        const __m256d t2 = _mm256_add_pd(same, diff);
        const __m256d t3 = _mm256_add_pd(t2, diff);
        // Comparison masks are all-ones (-1) per true lane.
        ge1 = _mm256_sub_epi64(ge1, _mm256_castpd_si256(_mm256_cmp_pd(uv, same, _CMP_GE_OQ)));
        ge2 = _mm256_sub_epi64(ge2, _mm256_castpd_si256(_mm256_cmp_pd(uv, t2, _CMP_GE_OQ)));
        ge3 = _mm256_sub_epi64(ge3, _mm256_castpd_si256(_mm256_cmp_pd(uv, t3, _CMP_GE_OQ)));
    }
    alignas(32) std::uint64_t l1[4];
    alignas(32) std::uint64_t l2[4];
    alignas(32) std::uint64_t l3[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(l1), ge1);
    _mm256_store_si256(reinterpret_cast<__m256i*>(l2), ge2);
    _mm256_store_si256(reinterpret_cast<__m256i*>(l3), ge3);
    std::uint64_t ge[3] = {l1[0] + l1[1] + l1[2] + l1[3], l2[0] + l2[1] + l2[2] + l2[3],
                           l3[0] + l3[1] + l3[2] + l3[3]};
    for (; i < n; ++i) detail::threshold_one(c[i], u[i], ge);
    detail::finish_tally(n, ge, counts);
}

}  // namespace

const KernelTable& avx2_kernel_table() {
    static const KernelTable table{Isa::avx2, "avx2", project, pair_products, correlation_from_products,
                                   moments,   tally};
    return table;
}

}  // namespace eprsim::simd
