#include "eprsim/experiment.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "eprsim/parallel.hpp"

namespace eprsim {

namespace {

std::uint64_t stream_key(const ExperimentConfig& c) {
    std::uint64_t h = mix64(static_cast<std::uint64_t>(c.model) + 1);
    for (double v : {c.settings.a.x(), c.settings.a.y(), c.settings.a.z(), c.settings.b.x(), c.settings.b.y(),
                     c.settings.b.z()})
        h = hash_combine(h, std::bit_cast<std::uint64_t>(v));
    if (c.model == PairModel::disentangled) {
        const auto& g = *c.geometry;
        h = hash_combine(h, static_cast<std::uint64_t>(g.kind));
        for (double v : {g.propagation_axis.x(), g.propagation_axis.y(), g.propagation_axis.z()})
            h = hash_combine(h, std::bit_cast<std::uint64_t>(v));
    }
    return h;
}

}  // namespace

const char* to_string(PairModel model) { return model == PairModel::entangled ? "entangled" : "disentangled"; }

void ExperimentConfig::validate() const {
    if (n_pairs == 0) throw std::invalid_argument("n_pairs must be at least 1");
    if (model == PairModel::disentangled && !geometry)
        throw std::invalid_argument("disentangled pairs require an ensemble geometry");
}

EnsembleGeometry natural_geometry(ParticleKind kind) {
    return kind == ParticleKind::photon ? EnsembleGeometry::transverse_circle() : EnsembleGeometry::sphere();
}

CountsTable& CountsTable::operator+=(const CountsTable& o) {
    n_pp += o.n_pp;
    n_pm += o.n_pm;
    n_mp += o.n_mp;
    n_mm += o.n_mm;
    return *this;
}

CountsTable run_pairs(const ExperimentConfig& config) {
    config.validate();
    const auto& kernels = config.mc.kernels != nullptr ? *config.mc.kernels : simd::active_kernels();
    const CounterRng rng(config.seed, stream_key(config));
    const double a[3] = {config.settings.a.x(), config.settings.a.y(), config.settings.a.z()};
    const double b[3] = {config.settings.b.x(), config.settings.b.y(), config.settings.b.z()};
    const double cos_ab = config.settings.cos_ab();

    std::vector<CountsTable> partial(block_count(config.n_pairs));
    parallel_blocks(partial.size(), config.mc.workers, [&](std::size_t block) {
        const std::uint64_t first = block * kBlockSize;
        const std::size_t count = static_cast<std::size_t>(std::min<std::uint64_t>(kBlockSize, config.n_pairs - first));
        std::vector<double> c(count, cos_ab);
        std::vector<double> u(count);
        if (config.model == PairModel::disentangled) {
            std::vector<double> px(count), py(count), pz(count);
            sample_axes(*config.geometry, rng, first, px, py, pz);
            kernels.pair_products(px.data(), py.data(), pz.data(), a, b, c.data(), count);
        }
        for (std::size_t i = 0; i < count; ++i) u[i] = rng.uniform(first + i, kOutcomeLane);
        std::uint64_t n[4] = {0, 0, 0, 0};
        kernels.tally(c.data(), u.data(), count, n);
        partial[block] = {n[0], n[1], n[2], n[3]};
    });

    CountsTable total;
    for (const auto& p : partial) total += p;
    return total;
}

double normalized_correlation(const CountsTable& counts) {
    const auto n = counts.total();
    if (n == 0) throw NoCoincidences();
    const double signed_sum = static_cast<double>(counts.n_pp) - static_cast<double>(counts.n_pm) -
                              static_cast<double>(counts.n_mp) + static_cast<double>(counts.n_mm);
    return signed_sum / static_cast<double>(n);
}

double correlation_std_error(const CountsTable& counts) {
    const double e = normalized_correlation(counts);
    return std::sqrt(std::max(0.0, 1.0 - e * e) / static_cast<double>(counts.total()));
}

VisibilityFit fit_visibility(std::span<const CorrelationSample> samples) {
    std::vector<double> angles;
    for (const auto& s : samples) angles.push_back(s.theta_ab);
    std::sort(angles.begin(), angles.end());
    if (std::unique(angles.begin(), angles.end()) - angles.begin() < 2)
        throw std::invalid_argument("visibility fit needs at least two distinct angles");

    double sxy = 0.0;
    double sxx = 0.0;
    bool identifiable = false;
    for (const auto& s : samples) {
        const double c = std::cos(s.theta_ab);
        if (std::abs(c) > 1e-12) identifiable = true;
        sxy += s.e * c;
        sxx += c * c;
    }
    if (!identifiable) throw std::invalid_argument("degenerate design: cos(theta_ab) = 0 at every angle");

    const double v = -sxy / sxx;
    double rss = 0.0;
    for (const auto& s : samples) {
        const double r = s.e + v * std::cos(s.theta_ab);
        rss += r * r;
    }
    return {v, std::sqrt(rss / static_cast<double>(samples.size()))};
}

VisibilityFit fit_visibility(std::span<const SweepPoint> sweep) {
    std::vector<CorrelationSample> samples;
    samples.reserve(sweep.size());
    for (const auto& p : sweep) samples.push_back({p.theta_ab, normalized_correlation(p.counts)});
    return fit_visibility(std::span<const CorrelationSample>(samples));
}

std::vector<double> default_sweep_angles(std::size_t count) {
    if (count < 2) throw std::invalid_argument("a sweep needs at least two angles");
    std::vector<double> angles(count);
    for (std::size_t i = 0; i < count; ++i)
        angles[i] = std::numbers::pi * static_cast<double>(i) / static_cast<double>(count - 1);
    angles.back() = std::numbers::pi;
    return angles;
}

std::vector<SweepPoint> run_sweep(const SweepConfig& config) {
    std::vector<SweepPoint> out;
    out.reserve(config.angles.size());
    for (double theta : config.angles) {
        ExperimentConfig ec;
        ec.model = config.model;
        ec.kind = config.kind;
        ec.n_pairs = config.n_per_angle;
        ec.seed = config.seed;
        ec.settings = AnalyzerPair::planar(theta, config.kind);
        ec.geometry = config.geometry ? config.geometry : std::optional(natural_geometry(config.kind));
        ec.mc = config.mc;
        out.push_back({theta, run_pairs(ec)});
    }
    return out;
}

ChshExperiment run_chsh_experiment(const ExperimentConfig& base, const ChshSettings& settings) {
    const std::array<AnalyzerPair, 4> pairs{AnalyzerPair{settings.a, settings.b, base.kind},
                                            AnalyzerPair{settings.a, settings.b_prime, base.kind},
                                            AnalyzerPair{settings.a_prime, settings.b, base.kind},
                                            AnalyzerPair{settings.a_prime, settings.b_prime, base.kind}};
    constexpr std::array<double, 4> sign{1.0, -1.0, 1.0, 1.0};
    ChshExperiment result{};
    double var = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        ExperimentConfig c = base;
        c.settings = pairs[i];
        result.counts[i] = run_pairs(c);
        result.s += sign[i] * normalized_correlation(result.counts[i]);
        const double se = correlation_std_error(result.counts[i]);
        var += se * se;
    }
    result.std_error = std::sqrt(var);
    return result;
}

PrefactorReport prefactor_insensitivity_demo(std::uint64_t n_per_angle, std::uint64_t seed,
                                             const std::vector<double>& angles, const McOptions& mc) {
    PrefactorReport report{{}, 0.0};
    const auto geometry = EnsembleGeometry::transverse_circle();
    std::vector<double> ent(angles.size());
    std::vector<double> dis(angles.size());
    if (n_per_angle == 0) {
        for (std::size_t i = 0; i < angles.size(); ++i) {
            const auto pair = AnalyzerPair::planar(angles[i], ParticleKind::photon);
            ent[i] = -pair.cos_ab();
            dis[i] = analytic_average_correlation(pair, geometry);
        }
    } else {
        SweepConfig sc;
        sc.kind = ParticleKind::photon;
        sc.n_per_angle = n_per_angle;
        sc.seed = seed;
        sc.angles.assign(angles.begin(), angles.end());
        sc.geometry = geometry;
        sc.mc = mc;
        sc.model = PairModel::entangled;
        const auto e = run_sweep(sc);
        sc.model = PairModel::disentangled;
        const auto d = run_sweep(sc);
        for (std::size_t i = 0; i < angles.size(); ++i) {
            ent[i] = normalized_correlation(e[i].counts);
            dis[i] = normalized_correlation(d[i].counts);
        }
    }
    for (std::size_t i = 0; i < angles.size(); ++i) {
        report.rows.push_back({angles[i], ent[i], dis[i]});
        report.max_abs_difference = std::max(report.max_abs_difference, std::abs(ent[i] - 2.0 * dis[i]));
    }
    return report;
}

}  // namespace eprsim
