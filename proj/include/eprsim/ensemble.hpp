#pragma once

// Ensemble averages over the random shared quantization axis of
// disentangled pairs: closed forms and seeded Monte Carlo estimators.

#include <array>
#include <cstdint>
#include <span>

#include "eprsim/correlations.hpp"
#include "eprsim/rng.hpp"
#include "eprsim/simd/kernels.hpp"
#include "eprsim/states.hpp"

namespace eprsim {

/// Isotropic axes on the unit sphere (spin-1/2 pairs) or on the unit circle
/// transverse to the propagation direction (photon helicity).
struct EnsembleGeometry {
    enum class Kind { sphere, transverse_circle };

    Kind kind = Kind::sphere;
    UnitVec3 propagation_axis = UnitVec3::z_axis();

    static EnsembleGeometry sphere() { return {Kind::sphere, UnitVec3::z_axis()}; }
    static EnsembleGeometry transverse_circle(UnitVec3 propagation = UnitVec3::z_axis()) {
        return {Kind::transverse_circle, propagation};
    }

    /// Orthonormal e1, e2 spanning the plane perpendicular to propagation_axis
    /// (x and y exactly when propagating along z).
    std::array<UnitVec3, 2> transverse_frame() const;
};

const char* to_string(EnsembleGeometry::Kind kind);

using Tensor3 = std::array<std::array<double, 3>, 3>;

/// Exact ensemble mean of P P^T: I/3 on the sphere, (e1 e1 + e2 e2)/2 on the circle.
Tensor3 second_moment_tensor(const EnsembleGeometry& geometry);

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;  // sample standard deviation / sqrt(n)
    std::uint64_t n_samples = 0;
    std::uint64_t seed = 0;
};

struct McOptions {
    unsigned workers = 1;
    const simd::KernelTable* kernels = nullptr;  // nullptr selects simd::active_kernels()
};

/// RNG lanes used per sample index.
inline constexpr std::uint32_t kAxisLane0 = 0;
inline constexpr std::uint32_t kAxisLane1 = 1;
inline constexpr std::uint32_t kOutcomeLane = 2;

/// Axis for sample `index`: sphere uses cos(theta) = 1 - 2 u0, phi = 2 pi u1;
/// the circle uses chi = 2 pi u0 in the transverse frame.
Vec3 sample_axis_vector(const EnsembleGeometry& geometry, const CounterRng& rng, std::uint64_t index);
DirectionAxis sample_axis(const EnsembleGeometry& geometry, const CounterRng& rng, std::uint64_t index);

/// Structure-of-arrays batch of axes for indices first, first + 1, ...
void sample_axes(const EnsembleGeometry& geometry, const CounterRng& rng, std::uint64_t first, std::span<double> x,
                 std::span<double> y, std::span<double> z);

/// -a . <P P> . b: -(1/3) a.b on the sphere, -(1/2) a.b on the circle.
/// Throws std::invalid_argument on the circle when an analyzer has a
/// component along the propagation axis above 1e-9.
double analytic_average_correlation(const AnalyzerPair& pair, const EnsembleGeometry& geometry);

/// Mean over sampled axes of E evaluated from the fixed-axis disentangled
/// probabilities. Result depends only on (pair, geometry, n_samples, seed).
McEstimate mc_average_correlation(const AnalyzerPair& pair, const EnsembleGeometry& geometry,
                                  std::uint64_t n_samples, std::uint64_t seed, const McOptions& options = {});

/// Ensemble average of <analyzer . sigma_i> for pairs in one definite branch
/// (branch drawn per sample with probability 1/2 each).
McEstimate mc_average_singles(const EnsembleGeometry& geometry, const UnitVec3& analyzer, Particle which,
                              std::uint64_t n_samples, std::uint64_t seed, const McOptions& options = {});

/// Tr{disentangled_mixture(axis) (analyzer . sigma on particle `which`)}; zero for every axis.
double mixture_single_expectation(const DirectionAxis& axis, const UnitVec3& analyzer, Particle which);

}  // namespace eprsim
