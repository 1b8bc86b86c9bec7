#pragma once

// Detection probabilities and correlation functions for entangled and
// disentangled pairs. Particle 1 is always measured by analyzer a and
// particle 2 by analyzer b.

#include "eprsim/disentangle.hpp"
#include "eprsim/qstate.hpp"
#include "eprsim/states.hpp"
#include "eprsim/vec3.hpp"

namespace eprsim {

enum class ParticleKind { fermion, photon };

const char* to_string(ParticleKind kind);

struct AnalyzerPair {
    UnitVec3 a;
    UnitVec3 b;
    ParticleKind kind = ParticleKind::fermion;

    double cos_ab() const { return a.dot(b); }
    /// Angle between the analyzers in the spin (helicity) frame.
    double theta_ab() const;
    /// theta_ab for fermions; the polarizer angle theta_ab / 2 for photons.
    double reported_angle() const;

    /// Both analyzers in the xy plane: a along x, b at azimuth theta_ab.
    static AnalyzerPair planar(double theta_ab, ParticleKind kind = ParticleKind::fermion);
};

/// Photon polarizers at relative angle alpha act like spin analyzers at 2 alpha.
inline double helicity_angle_from_polarizer(double alpha) { return 2.0 * alpha; }
inline double polarizer_angle_from_helicity(double theta_ab) { return 0.5 * theta_ab; }

/// Probabilities of the joint outcomes (++, +-, -+, --).
class JointProbabilities {
public:
    static constexpr double kTolerance = 1e-12;

    /// Throws std::invalid_argument if any entry leaves [0, 1] or the sum is not 1 (both within 1e-12).
    JointProbabilities(double p_pp, double p_pm, double p_mp, double p_mm);

    double p_pp() const { return p_pp_; }
    double p_pm() const { return p_pm_; }
    double p_mp() const { return p_mp_; }
    double p_mm() const { return p_mm_; }

    double marginal_first_plus() const { return p_pp_ + p_pm_; }
    double marginal_second_plus() const { return p_pp_ + p_mp_; }
    double max_abs_diff(const JointProbabilities& o) const;

private:
    double p_pp_;
    double p_pm_;
    double p_mp_;
    double p_mm_;
};

struct SingleProbabilities {
    double p_plus;
    double p_minus;
};

struct Expectations {
    double joint;    // <a.sigma1 b.sigma2>
    double single1;  // <a.sigma1>
    double single2;  // <b.sigma2>
};

/// P(+-) - style single-spin outcome probabilities for the branch in which
/// particle 1 is |+> and particle 2 is |-> along `axis`.
SingleProbabilities single_probabilities(const DirectionAxis& axis, const UnitVec3& analyzer, Particle which);

/// Same quantity from |<+-|psi>|^2, evaluated in the frame where the analyzer
/// is the quantization axis and the spin carries an arbitrary azimuthal phase.
SingleProbabilities single_probabilities_born(const DirectionAxis& axis, const UnitVec3& analyzer, Particle which,
                                              double phi_i);

/// Tr{rho_EPR (a.sigma (x) b.sigma)} and the two single-particle expectations.
Expectations entangled_expectations(const AnalyzerPair& pair);
/// Same traces with the disentangled mixture along `axis`.
Expectations disentangled_expectations(const AnalyzerPair& pair, const DirectionAxis& axis);

/// Closed form: P(+-) = P(-+) = (1 + cos)/4, P(++) = P(--) = (1 - cos)/4.
JointProbabilities entangled_joint_probabilities(const AnalyzerPair& pair);
/// Born rule Tr{rho_EPR (P_a (x) P_b)}.
JointProbabilities entangled_joint_probabilities_born(const AnalyzerPair& pair);

/// Closed form with cos(theta_a) cos(theta_b) = (a.P)(P.b).
JointProbabilities disentangled_joint_probabilities_fixed_axis(const AnalyzerPair& pair, const DirectionAxis& axis);
/// Born rule against disentangled_mixture(axis).
JointProbabilities disentangled_joint_probabilities_born(const AnalyzerPair& pair, const DirectionAxis& axis);

/// Joint probabilities of the form ((1 - c)/4, (1 + c)/4, (1 + c)/4, (1 - c)/4).
JointProbabilities anticorrelated_probabilities(double c);

/// E = P(++) - P(+-) - P(-+) + P(--).
double correlation(const JointProbabilities& joint);

}  // namespace eprsim
