#pragma once

#include <functional>

#include "eprsim/vec3.hpp"

namespace eprsim {

/// Correlation function E(a, b) of some two-party model.
using CorrelationModel = std::function<double(const UnitVec3&, const UnitVec3&)>;

/// E = -a.b (singlet).
CorrelationModel entangled_model();
/// E = -k a.b, e.g. k = 1/2 for transverse-circle disentanglement, 1/3 for the sphere.
CorrelationModel scaled_cosine_model(double k);

struct ChshSettings {
    UnitVec3 a;
    UnitVec3 a_prime;
    UnitVec3 b;
    UnitVec3 b_prime;

    /// All four analyzers in the xy plane at the given azimuths.
    static ChshSettings planar(double a, double a_prime, double b, double b_prime);
};

/// S = E(a,b) - E(a,b') + E(a',b) + E(a',b').
double chsh_value(const CorrelationModel& model, const ChshSettings& settings);

struct OptimizedChsh {
    ChshSettings settings;
    double s_max;  // max |S|
};

/// Maximizes |S| by a 24-point-per-angle planar grid (first maximum in grid
/// order wins ties), then a shrinking compass search on the four planar angles,
/// and, unless restricted_to_plane, on all eight polar/azimuthal angles.
OptimizedChsh optimize_settings(const CorrelationModel& model, bool restricted_to_plane);

struct ViolationReport {
    double s;
    double classical_bound;
    double tsirelson_bound;
    bool violates;  // |s| > 2 + 1e-9
};

ViolationReport violation_report(const CorrelationModel& model, const ChshSettings& settings);

}  // namespace eprsim
