#pragma once

// Event-level coincidence experiment: one joint outcome per pair, ideal
// detectors, counts normalized to a correlation, visibility from a sweep.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "eprsim/chsh.hpp"
#include "eprsim/correlations.hpp"
#include "eprsim/ensemble.hpp"

namespace eprsim {

enum class PairModel { entangled, disentangled };

const char* to_string(PairModel model);

/// Thrown when a counts table with no events is normalized.
class NoCoincidences : public std::domain_error {
public:
    NoCoincidences() : std::domain_error("no coincidences") {}
};

struct ExperimentConfig {
    PairModel model = PairModel::entangled;
    ParticleKind kind = ParticleKind::fermion;
    std::uint64_t n_pairs = 1;
    std::uint64_t seed = 0;
    AnalyzerPair settings = AnalyzerPair::planar(0.0);
    std::optional<EnsembleGeometry> geometry;  // required for disentangled pairs
    McOptions mc;

    /// Throws std::invalid_argument on n_pairs == 0 or a disentangled config without geometry.
    void validate() const;
};

/// Geometry that matches the particle kind: sphere for fermions, circle about z for photons.
EnsembleGeometry natural_geometry(ParticleKind kind);

struct CountsTable {
    std::uint64_t n_pp = 0;
    std::uint64_t n_pm = 0;
    std::uint64_t n_mp = 0;
    std::uint64_t n_mm = 0;

    std::uint64_t total() const { return n_pp + n_pm + n_mp + n_mm; }
    CountsTable& operator+=(const CountsTable& o);
    bool operator==(const CountsTable&) const = default;
};

/// Simulates config.n_pairs pairs. The random stream is keyed by the seed,
/// the model, the geometry and the analyzer directions, so a given setting
/// reproduces its counts regardless of sweep order or worker count.
CountsTable run_pairs(const ExperimentConfig& config);

/// (N++ - N+- - N-+ + N--) / N. Throws NoCoincidences when N = 0.
double normalized_correlation(const CountsTable& counts);
/// sqrt((1 - E^2) / N), the multinomial standard error of the normalized correlation.
double correlation_std_error(const CountsTable& counts);

struct SweepPoint {
    double theta_ab;  // spin/helicity-frame angle between analyzers
    CountsTable counts;
};

struct CorrelationSample {
    double theta_ab;
    double e;
};

struct VisibilityFit {
    double v;
    double residual;  // RMS of E_i + V cos(theta_i)
};

/// Least-squares fit of E(theta) = -V cos(theta) with equal weights.
/// Throws std::invalid_argument with fewer than two distinct angles or when
/// every |cos(theta)| <= 1e-12 ("degenerate design").
VisibilityFit fit_visibility(std::span<const CorrelationSample> samples);
VisibilityFit fit_visibility(std::span<const SweepPoint> sweep);

/// `count` equally spaced angles covering [0, pi].
std::vector<double> default_sweep_angles(std::size_t count = 12);

struct SweepConfig {
    PairModel model = PairModel::entangled;
    ParticleKind kind = ParticleKind::fermion;
    std::uint64_t n_per_angle = 1;
    std::uint64_t seed = 0;
    std::vector<double> angles = default_sweep_angles();
    std::optional<EnsembleGeometry> geometry;  // defaults to natural_geometry(kind)
    McOptions mc;
};

/// One run_pairs per angle with planar analyzers (a = x, b at theta).
std::vector<SweepPoint> run_sweep(const SweepConfig& config);

struct ChshExperiment {
    std::array<CountsTable, 4> counts;  // (a,b), (a,b'), (a',b), (a',b')
    double s;
    double std_error;
};

ChshExperiment run_chsh_experiment(const ExperimentConfig& base, const ChshSettings& settings);

struct PrefactorRow {
    double theta_ab;
    double e_entangled;
    double e_disentangled;
};

struct PrefactorReport {
    std::vector<PrefactorRow> rows;
    double max_abs_difference;  // max |E_ent - 2 E_dis|
};

/// Entangled and disentangled photon sweeps (transverse-circle ensemble) with
/// the disentangled curve rescaled by 2. With n_per_angle == 0 the exact
/// correlations -cos(theta) and -cos(theta)/2 are compared instead.
PrefactorReport prefactor_insensitivity_demo(std::uint64_t n_per_angle, std::uint64_t seed,
                                             const std::vector<double>& angles = default_sweep_angles(),
                                             const McOptions& mc = {});

}  // namespace eprsim
