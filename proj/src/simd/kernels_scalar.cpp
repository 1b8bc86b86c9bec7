#include "eprsim/simd/kernels.hpp"
#include "scalar_ops.hpp"

namespace eprsim::simd {

namespace {

void project(const double* px, const double* py, const double* pz, const double* dir, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = detail::project_one(px[i], py[i], pz[i], dir);
}

void pair_products(const double* px, const double* py, const double* pz, const double* a, const double* b,
                   double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = detail::product_one(px[i], py[i], pz[i], a, b);
}

void correlation_from_products(const double* c, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = detail::correlation_one(c[i]);
}

void moments(const double* v, std::size_t n, double* sum, double* sum_sq) {
    double s[4] = {0.0, 0.0, 0.0, 0.0};
    double q[4] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        s[i % 4] += v[i];
        q[i % 4] += v[i] * v[i];
    }
    *sum = (s[0] + s[1]) + (s[2] + s[3]);
    *sum_sq = (q[0] + q[1]) + (q[2] + q[3]);
}

void tally(const double* c, const double* u, std::size_t n, std::uint64_t* counts) {
    std::uint64_t ge[3] = {0, 0, 0};
    for (std::size_t i = 0; i < n; ++i) detail::threshold_one(c[i], u[i], ge);
    detail::finish_tally(n, ge, counts);
}

}  // namespace

const KernelTable& scalar_kernels() {
    static const KernelTable table{Isa::scalar, "scalar", project, pair_products, correlation_from_products,
                                   moments,     tally};
    return table;
}

}  // namespace eprsim::simd
