#include "eprsim/chsh.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace eprsim {

namespace {

constexpr double kClassicalBound = 2.0;
constexpr int kGridPoints = 24;

UnitVec3 spherical(double theta, double phi) {
    const double s = std::sin(theta);
    return UnitVec3::normalize({s * std::cos(phi), s * std::sin(phi), std::cos(theta)});
}

ChshSettings from_spherical(const std::vector<double>& p) {
    return {spherical(p[0], p[1]), spherical(p[2], p[3]), spherical(p[4], p[5]), spherical(p[6], p[7])};
}

ChshSettings from_planar(const std::vector<double>& p) { return ChshSettings::planar(p[0], p[1], p[2], p[3]); }

template <class Build>
std::vector<double> compass_search(const CorrelationModel& model, std::vector<double> x, double step, Build&& build) {
    double best = std::abs(chsh_value(model, build(x)));
    while (step > 1e-12) {
        bool improved = false;
        for (std::size_t d = 0; d < x.size(); ++d) {
            for (double dir : {1.0, -1.0}) {
                auto trial = x;
                trial[d] += dir * step;
                const double v = std::abs(chsh_value(model, build(trial)));
                if (v > best) {
                    best = v;
                    x = std::move(trial);
                    improved = true;
                    break;
                }
            }
        }
        if (!improved) step *= 0.5;
    }
    return x;
}

}  // namespace

CorrelationModel entangled_model() {
    return [](const UnitVec3& a, const UnitVec3& b) { return -a.dot(b); };
}

CorrelationModel scaled_cosine_model(double k) {
    return [k](const UnitVec3& a, const UnitVec3& b) { return -k * a.dot(b); };
}

ChshSettings ChshSettings::planar(double a, double a_prime, double b, double b_prime) {
    return {UnitVec3::planar(a), UnitVec3::planar(a_prime), UnitVec3::planar(b), UnitVec3::planar(b_prime)};
}

double chsh_value(const CorrelationModel& model, const ChshSettings& s) {
    return model(s.a, s.b) - model(s.a, s.b_prime) + model(s.a_prime, s.b) + model(s.a_prime, s.b_prime);
}

OptimizedChsh optimize_settings(const CorrelationModel& model, bool restricted_to_plane) {
    constexpr double step = 2.0 * std::numbers::pi / kGridPoints;
    std::vector<UnitVec3> dirs;
    dirs.reserve(kGridPoints);
    for (int i = 0; i < kGridPoints; ++i) dirs.push_back(UnitVec3::planar(i * step));

    double best = -1.0;
    std::array<int, 4> arg{0, 0, 0, 0};
    for (int i = 0; i < kGridPoints; ++i)
        for (int j = 0; j < kGridPoints; ++j)
            for (int k = 0; k < kGridPoints; ++k)
                for (int l = 0; l < kGridPoints; ++l) {
                    const double v = std::abs(chsh_value(model, {dirs[i], dirs[j], dirs[k], dirs[l]}));
                    if (v > best) {
                        best = v;
                        arg = {i, j, k, l};
                    }
                }

    std::vector<double> planar{arg[0] * step, arg[1] * step, arg[2] * step, arg[3] * step};
    planar = compass_search(model, planar, 0.5 * step, from_planar);
    ChshSettings settings = from_planar(planar);

    if (!restricted_to_plane) {
        const double half_pi = 0.5 * std::numbers::pi;
        std::vector<double> full{half_pi, planar[0], half_pi, planar[1], half_pi, planar[2], half_pi, planar[3]};
        full = compass_search(model, full, 0.5 * step, from_spherical);
        const auto candidate = from_spherical(full);
        if (std::abs(chsh_value(model, candidate)) > std::abs(chsh_value(model, settings))) settings = candidate;
    }
    return {settings, std::abs(chsh_value(model, settings))};
}

ViolationReport violation_report(const CorrelationModel& model, const ChshSettings& settings) {
    const double s = chsh_value(model, settings);
    return {s, kClassicalBound, 2.0 * std::numbers::sqrt2, std::abs(s) > kClassicalBound + 1e-9};
}

}  // namespace eprsim
