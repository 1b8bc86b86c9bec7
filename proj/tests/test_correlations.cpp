#include <doctest.h>

#include <cmath>

#include "eprsim/correlations.hpp"
#include "support.hpp"

using namespace eprsim;
using testing::kPi;

namespace {

bool close(const JointProbabilities& j, double pp, double pm, double mp, double mm, double tol) {
    return std::abs(j.p_pp() - pp) <= tol && std::abs(j.p_pm() - pm) <= tol && std::abs(j.p_mp() - mp) <= tol &&
           std::abs(j.p_mm() - mm) <= tol;
}

AnalyzerPair pair_of(const UnitVec3& a, const UnitVec3& b) { return {a, b, ParticleKind::fermion}; }

}  // namespace

TEST_SUITE("correlations") {

TEST_CASE("joint probabilities validate their entries") {
    CHECK_THROWS_AS(JointProbabilities(0.5, 0.5, 0.5, -0.5), std::invalid_argument);
    CHECK_THROWS_AS(JointProbabilities(0.3, 0.3, 0.3, 0.3), std::invalid_argument);
    CHECK_THROWS_AS(JointProbabilities(0.25, 0.25, 0.25, std::nan("")), std::invalid_argument);
    CHECK_NOTHROW(JointProbabilities(0.25, 0.25, 0.25, 0.25));
}

TEST_CASE("single spin probabilities") {
    const auto z = DirectionAxis::z();
    auto s = single_probabilities(z, UnitVec3::z_axis(), Particle::first);
    CHECK(s.p_plus == 1.0);
    CHECK(s.p_minus == 0.0);
    s = single_probabilities(z, UnitVec3::z_axis(), Particle::second);
    CHECK(s.p_plus == 0.0);
    CHECK(s.p_minus == 1.0);
    s = single_probabilities(z, UnitVec3::x_axis(), Particle::first);
    CHECK(s.p_plus == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(s.p_minus == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("single probabilities agree with the Born rule for any azimuthal phase") {
    testing::Gen g(51);
    for (int i = 0; i < 1000; ++i) {
        const auto axis = g.axis();
        const auto an = g.unit();
        for (auto p : {Particle::first, Particle::second}) {
            const auto closed = single_probabilities(axis, an, p);
            const auto born1 = single_probabilities_born(axis, an, p, g.uniform(0, 2 * kPi));
            const auto born2 = single_probabilities_born(axis, an, p, g.uniform(0, 2 * kPi));
            CHECK(std::abs(closed.p_plus - born1.p_plus) < 1e-12);
            CHECK(std::abs(born1.p_plus - born2.p_plus) < 1e-12);
            CHECK(std::abs(closed.p_plus + closed.p_minus - 1.0) < 1e-12);
            const int sp = p == Particle::first ? +1 : -1;
            CHECK(std::abs(closed.p_plus - testing::oracle_single(axis.direction(), sp, an, +1)) < 1e-12);
        }
    }
}

TEST_CASE("entangled expectations") {
    const auto x = UnitVec3::x_axis();
    auto e = entangled_expectations(pair_of(x, x));
    CHECK(e.joint == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(std::abs(e.single1) < 1e-15);
    CHECK(std::abs(e.single2) < 1e-15);
    e = entangled_expectations(pair_of(x, UnitVec3::y_axis()));
    CHECK(std::abs(e.joint) < 1e-15);
    e = entangled_expectations(pair_of(x, -x));
    CHECK(e.joint == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("entangled joint probabilities at special angles") {
    CHECK(close(entangled_joint_probabilities(AnalyzerPair::planar(0)), 0, 0.5, 0.5, 0, 1e-15));
    CHECK(close(entangled_joint_probabilities(AnalyzerPair::planar(kPi / 2)), 0.25, 0.25, 0.25, 0.25, 1e-15));
    CHECK(close(entangled_joint_probabilities(AnalyzerPair::planar(kPi)), 0.5, 0, 0, 0.5, 1e-15));
}

TEST_CASE("disentangled fixed-axis probabilities at special settings") {
    const auto z = DirectionAxis::z();
    const auto zu = UnitVec3::z_axis();
    CHECK(close(disentangled_joint_probabilities_fixed_axis(pair_of(zu, zu), z), 0, 0.5, 0.5, 0, 1e-15));
    CHECK(close(disentangled_joint_probabilities_fixed_axis(pair_of(zu, -zu), z), 0.5, 0, 0, 0.5, 1e-15));
    testing::Gen g(52);
    for (int i = 0; i < 50; ++i) {
        const auto b = g.unit();
        CHECK(close(disentangled_joint_probabilities_fixed_axis(pair_of(UnitVec3::x_axis(), b), z), 0.25, 0.25, 0.25, 0.25,
                    1e-15));
    }
}

TEST_CASE("correlation of fixed tables") {
    CHECK(correlation({0, 0.5, 0.5, 0}) == -1.0);
    CHECK(correlation({0.25, 0.25, 0.25, 0.25}) == 0.0);
    CHECK(correlation({0.5, 0, 0, 0.5}) == 1.0);
}

TEST_CASE("entangled probabilities: closed form, Born rule and oracle agree") {
    testing::Gen g(53);
    for (int i = 0; i < 1000; ++i) {
        const auto pair = pair_of(g.unit(), g.unit());
        const auto closed = entangled_joint_probabilities(pair);
        const auto born = entangled_joint_probabilities_born(pair);
        CHECK(closed.max_abs_diff(born) < 1e-12);
        CHECK(std::abs(correlation(closed) + pair.cos_ab()) < 1e-12);
        CHECK(std::abs(closed.p_pp() + closed.p_pm() + closed.p_mp() + closed.p_mm() - 1.0) < 1e-12);
        CHECK(std::abs(closed.p_pm() - testing::oracle_singlet_probability(pair.a, +1, pair.b, -1)) < 1e-12);
        CHECK(std::abs(closed.p_mm() - testing::oracle_singlet_probability(pair.a, -1, pair.b, -1)) < 1e-12);
        const auto e = entangled_expectations(pair);
        CHECK(std::abs(e.joint + pair.cos_ab()) < 1e-12);
        CHECK(std::abs(e.single1) < 1e-12);
        CHECK(std::abs(e.single2) < 1e-12);
    }
}

TEST_CASE("disentangled probabilities: closed form, Born rule and oracle agree") {
    testing::Gen g(54);
    for (int i = 0; i < 1000; ++i) {
        const auto pair = pair_of(g.unit(), g.unit());
        const auto axis = g.axis();
        const auto closed = disentangled_joint_probabilities_fixed_axis(pair, axis);
        const auto born = disentangled_joint_probabilities_born(pair, axis);
        CHECK(closed.max_abs_diff(born) < 1e-12);
        const auto& p = axis.direction();
        CHECK(std::abs(closed.p_pp() - testing::oracle_mixture_probability(p, pair.a, +1, pair.b, +1)) < 1e-12);
        CHECK(std::abs(closed.p_mp() - testing::oracle_mixture_probability(p, pair.a, -1, pair.b, +1)) < 1e-12);
        CHECK(std::abs(closed.marginal_first_plus() - 0.5) < 1e-12);
        CHECK(std::abs(closed.marginal_second_plus() - 0.5) < 1e-12);
        const auto e = disentangled_expectations(pair, axis);
        CHECK(std::abs(e.joint - correlation(closed)) < 1e-12);
        CHECK(std::abs(e.joint + pair.a.dot(p) * pair.b.dot(p)) < 1e-12);
    }
}

TEST_CASE("photon pairs report the polarizer angle") {
    const auto p = AnalyzerPair::planar(kPi / 3, ParticleKind::photon);
    CHECK(p.theta_ab() == doctest::Approx(kPi / 3).epsilon(1e-12));
    CHECK(p.reported_angle() == doctest::Approx(kPi / 6).epsilon(1e-12));
    CHECK(AnalyzerPair::planar(1.0).reported_angle() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(helicity_angle_from_polarizer(polarizer_angle_from_helicity(0.7)) == 0.7);
}

TEST_CASE("anticorrelated table clamps its argument") {
    CHECK(close(anticorrelated_probabilities(1.0 + 1e-15), 0, 0.5, 0.5, 0, 0));
    CHECK(close(anticorrelated_probabilities(-1.0 - 1e-15), 0.5, 0, 0, 0.5, 0));
}

}  // TEST_SUITE
