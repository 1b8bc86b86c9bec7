#include "eprsim/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eprsim {

const char* to_string(ParticleKind kind) { return kind == ParticleKind::fermion ? "fermion" : "photon"; }

double AnalyzerPair::theta_ab() const { return std::acos(std::clamp(cos_ab(), -1.0, 1.0)); }

double AnalyzerPair::reported_angle() const {
    return kind == ParticleKind::photon ? polarizer_angle_from_helicity(theta_ab()) : theta_ab();
}

AnalyzerPair AnalyzerPair::planar(double theta_ab, ParticleKind kind) {
    return {UnitVec3::x_axis(), UnitVec3::planar(theta_ab), kind};
}

JointProbabilities::JointProbabilities(double p_pp, double p_pm, double p_mp, double p_mm)
    : p_pp_(p_pp), p_pm_(p_pm), p_mp_(p_mp), p_mm_(p_mm) {
    for (double p : {p_pp, p_pm, p_mp, p_mm})
        if (!(p >= -kTolerance && p <= 1.0 + kTolerance))
            throw std::invalid_argument("joint probability outside [0, 1]");
    if (std::abs(p_pp + p_pm + p_mp + p_mm - 1.0) > kTolerance)
        throw std::invalid_argument("joint probabilities do not sum to one");
}

double JointProbabilities::max_abs_diff(const JointProbabilities& o) const {
    return std::max({std::abs(p_pp_ - o.p_pp_), std::abs(p_pm_ - o.p_pm_), std::abs(p_mp_ - o.p_mp_),
                     std::abs(p_mm_ - o.p_mm_)});
}

SingleProbabilities single_probabilities(const DirectionAxis& axis, const UnitVec3& analyzer, Particle which) {
    const double c = std::clamp(analyzer.dot(axis.direction()), -1.0, 1.0);
    const double aligned = 0.5 * (1.0 + c);  // cos^2(theta/2)
    const double opposed = 0.5 * (1.0 - c);  // sin^2(theta/2)
    if (which == Particle::first) return {aligned, opposed};
    return {opposed, aligned};
}

SingleProbabilities single_probabilities_born(const DirectionAxis& axis, const UnitVec3& analyzer, Particle which,
                                              double phi_i) {
    const double theta = std::acos(std::clamp(analyzer.dot(axis.direction()), -1.0, 1.0));
    const Sign branch = which == Particle::first ? Sign::plus : Sign::minus;
    const Ket psi = spinor(theta, phi_i, branch);
    const double p_plus = std::norm(z_basis_state(Sign::plus).inner(psi));
    const double p_minus = std::norm(z_basis_state(Sign::minus).inner(psi));
    return {p_plus, p_minus};
}

namespace {

Expectations expectations_of(const DensityOperator& rho, const AnalyzerPair& pair) {
    const auto id = ComplexMatrix::identity(2);
    const auto sa = pauli_projection(pair.a);
    const auto sb = pauli_projection(pair.b);
    return {rho.expectation(tensor_product(sa, sb)), rho.expectation(tensor_product(sa, id)),
            rho.expectation(tensor_product(id, sb))};
}

JointProbabilities born_probabilities(const DensityOperator& rho, const AnalyzerPair& pair) {
    auto p = [&](Sign s1, Sign s2) {
        return rho.expectation(tensor_product(analyzer_projector(pair.a, s1), analyzer_projector(pair.b, s2)));
    };
    return {p(Sign::plus, Sign::plus), p(Sign::plus, Sign::minus), p(Sign::minus, Sign::plus),
            p(Sign::minus, Sign::minus)};
}

}  // namespace

Expectations entangled_expectations(const AnalyzerPair& pair) { return expectations_of(epr_density(), pair); }

Expectations disentangled_expectations(const AnalyzerPair& pair, const DirectionAxis& axis) {
    return expectations_of(disentangled_mixture(axis), pair);
}

JointProbabilities anticorrelated_probabilities(double c) {
    c = std::clamp(c, -1.0, 1.0);
    const double same = 0.25 * (1.0 - c);
    const double diff = 0.25 * (1.0 + c);
    return {same, diff, diff, same};
}

JointProbabilities entangled_joint_probabilities(const AnalyzerPair& pair) {
    return anticorrelated_probabilities(pair.cos_ab());
}

JointProbabilities entangled_joint_probabilities_born(const AnalyzerPair& pair) {
    return born_probabilities(epr_density(), pair);
}

JointProbabilities disentangled_joint_probabilities_fixed_axis(const AnalyzerPair& pair, const DirectionAxis& axis) {
    const Vec3& p = axis.direction().vec();
    return anticorrelated_probabilities(pair.a.dot(p) * pair.b.dot(p));
}

JointProbabilities disentangled_joint_probabilities_born(const AnalyzerPair& pair, const DirectionAxis& axis) {
    return born_probabilities(disentangled_mixture(axis), pair);
}

double correlation(const JointProbabilities& j) { return j.p_pp() - j.p_pm() - j.p_mp() + j.p_mm(); }

}  // namespace eprsim
