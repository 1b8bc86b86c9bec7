#include "eprsim/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "eprsim/parallel.hpp"

namespace eprsim {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

const simd::KernelTable& pick(const McOptions& options) {
    return options.kernels != nullptr ? *options.kernels : simd::active_kernels();
}

struct Moments {
    double sum = 0.0;
    double sum_sq = 0.0;
};

McEstimate finish(const std::vector<Moments>& blocks, std::uint64_t n, std::uint64_t seed) {
    double sum = 0.0;
    double sum_sq = 0.0;
    for (const auto& b : blocks) {
        sum += b.sum;
        sum_sq += b.sum_sq;
    }
    const double dn = static_cast<double>(n);
    const double mean = sum / dn;
    double se = 0.0;
    if (n > 1) {
        const double var = std::max(0.0, (sum_sq - sum * mean) / (dn - 1.0));
        se = std::sqrt(var / dn);
    }
    return {mean, se, n, seed};
}

// Runs `fill(first, count, values)` per block, where `values` must receive the
// per-sample quantity to be averaged.
template <class Fill>
McEstimate block_average(std::uint64_t n, std::uint64_t seed, const McOptions& options, Fill&& fill) {
    if (n == 0) throw std::invalid_argument("n_samples must be at least 1");
    const auto& kernels = pick(options);
    std::vector<Moments> partial(block_count(n));
    parallel_blocks(partial.size(), options.workers, [&](std::size_t block) {
        const std::uint64_t first = block * kBlockSize;
        const std::size_t count = static_cast<std::size_t>(std::min<std::uint64_t>(kBlockSize, n - first));
        std::vector<double> values(count);
        fill(first, count, values.data(), kernels);
        kernels.moments(values.data(), count, &partial[block].sum, &partial[block].sum_sq);
    });
    return finish(partial, n, seed);
}

}  // namespace

std::array<UnitVec3, 2> EnsembleGeometry::transverse_frame() const {
    const Vec3& n = propagation_axis.vec();
    if (n == UnitVec3::z_axis().vec()) return {UnitVec3::x_axis(), UnitVec3::y_axis()};
    // Seed with the coordinate axis least aligned with n.
    const double ax = std::abs(n.x), ay = std::abs(n.y), az = std::abs(n.z);
    const Vec3 helper = (ax <= ay && ax <= az) ? Vec3{1, 0, 0} : (ay <= az ? Vec3{0, 1, 0} : Vec3{0, 0, 1});
    const auto e1 = UnitVec3::normalize(helper - n * n.dot(helper));
    const auto e2 = UnitVec3::normalize(n.cross(e1.vec()));
    return {e1, e2};
}

const char* to_string(EnsembleGeometry::Kind kind) {
    return kind == EnsembleGeometry::Kind::sphere ? "sphere" : "transverse_circle";
}

Tensor3 second_moment_tensor(const EnsembleGeometry& geometry) {
    Tensor3 t{};
    if (geometry.kind == EnsembleGeometry::Kind::sphere) {
        for (int i = 0; i < 3; ++i) t[i][i] = 1.0 / 3.0;
        return t;
    }
    const auto [e1, e2] = geometry.transverse_frame();
    const double v1[3] = {e1.x(), e1.y(), e1.z()};
    const double v2[3] = {e2.x(), e2.y(), e2.z()};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t[i][j] = 0.5 * (v1[i] * v1[j] + v2[i] * v2[j]);
    return t;
}

Vec3 sample_axis_vector(const EnsembleGeometry& geometry, const CounterRng& rng, std::uint64_t index) {
    const double u0 = rng.uniform(index, kAxisLane0);
    if (geometry.kind == EnsembleGeometry::Kind::sphere) {
        const double z = 1.0 - 2.0 * u0;
        const double r = std::sqrt(std::max(0.0, (1.0 - z) * (1.0 + z)));
        const double phi = kTwoPi * rng.uniform(index, kAxisLane1);
        return {r * std::cos(phi), r * std::sin(phi), z};
    }
    const auto [e1, e2] = geometry.transverse_frame();
    const double chi = kTwoPi * u0;
    const double c = std::cos(chi);
    const double s = std::sin(chi);
    return {c * e1.x() + s * e2.x(), c * e1.y() + s * e2.y(), c * e1.z() + s * e2.z()};
}

DirectionAxis sample_axis(const EnsembleGeometry& geometry, const CounterRng& rng, std::uint64_t index) {
    return DirectionAxis::from_vector(UnitVec3::checked(sample_axis_vector(geometry, rng, index)));
}

void sample_axes(const EnsembleGeometry& geometry, const CounterRng& rng, std::uint64_t first, std::span<double> x,
                 std::span<double> y, std::span<double> z) {
    if (x.size() != y.size() || x.size() != z.size()) throw std::invalid_argument("axis batch spans differ in size");
    for (std::size_t i = 0; i < x.size(); ++i) {
        const Vec3 p = sample_axis_vector(geometry, rng, first + i);
        x[i] = p.x;
        y[i] = p.y;
        z[i] = p.z;
    }
}

double analytic_average_correlation(const AnalyzerPair& pair, const EnsembleGeometry& geometry) {
    if (geometry.kind == EnsembleGeometry::Kind::transverse_circle) {
        const auto& n = geometry.propagation_axis;
        if (std::abs(pair.a.dot(n)) > 1e-9 || std::abs(pair.b.dot(n)) > 1e-9)
            throw std::invalid_argument("transverse-circle average requires analyzers in the transverse plane");
    }
    const Tensor3 t = second_moment_tensor(geometry);
    const double a[3] = {pair.a.x(), pair.a.y(), pair.a.z()};
    const double b[3] = {pair.b.x(), pair.b.y(), pair.b.z()};
    double s = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += a[i] * t[i][j] * b[j];
    return -s;
}

McEstimate mc_average_correlation(const AnalyzerPair& pair, const EnsembleGeometry& geometry,
                                  std::uint64_t n_samples, std::uint64_t seed, const McOptions& options) {
    const CounterRng rng(seed);
    const double a[3] = {pair.a.x(), pair.a.y(), pair.a.z()};
    const double b[3] = {pair.b.x(), pair.b.y(), pair.b.z()};
    return block_average(n_samples, seed, options,
                         [&](std::uint64_t first, std::size_t count, double* out, const simd::KernelTable& k) {
                             std::vector<double> px(count), py(count), pz(count);
                             sample_axes(geometry, rng, first, px, py, pz);
                             k.pair_products(px.data(), py.data(), pz.data(), a, b, out, count);
                             k.correlation_from_products(out, out, count);
                         });
}

McEstimate mc_average_singles(const EnsembleGeometry& geometry, const UnitVec3& analyzer, Particle which,
                              std::uint64_t n_samples, std::uint64_t seed, const McOptions& options) {
    const CounterRng rng(seed);
    const double dir[3] = {analyzer.x(), analyzer.y(), analyzer.z()};
    return block_average(n_samples, seed, options,
                         [&](std::uint64_t first, std::size_t count, double* out, const simd::KernelTable& k) {
                             std::vector<double> px(count), py(count), pz(count);
                             sample_axes(geometry, rng, first, px, py, pz);
                             k.project(px.data(), py.data(), pz.data(), dir, out, count);
                             // Branch +- puts particle 1 up along P; particle 2 is always opposite.
                             for (std::size_t i = 0; i < count; ++i) {
                                 const bool plus_minus = rng.uniform(first + i, kOutcomeLane) < 0.5;
                                 const bool up = plus_minus == (which == Particle::first);
                                 if (!up) out[i] = -out[i];
                             }
                         });
}

double mixture_single_expectation(const DirectionAxis& axis, const UnitVec3& analyzer, Particle which) {
    const auto rho = disentangled_mixture(axis);
    const auto id = ComplexMatrix::identity(2);
    const auto s = pauli_projection(analyzer);
    return rho.expectation(which == Particle::first ? tensor_product(s, id) : tensor_product(id, s));
}

}  // namespace eprsim
