#include "eprsim/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eprsim {

DirectionAxis DirectionAxis::from_angles(double theta, double phi) {
    if (!std::isfinite(theta) || !std::isfinite(phi)) throw std::invalid_argument("axis angles must be finite");
    if (theta < 0.0 || theta > std::numbers::pi) throw std::invalid_argument("polar angle must lie in [0, pi]");
    constexpr double two_pi = 2.0 * std::numbers::pi;
    phi = std::fmod(phi, two_pi);
    if (phi < 0.0) phi += two_pi;
    if (phi >= two_pi) phi = 0.0;
    const double s = std::sin(theta);
    const auto dir = UnitVec3::normalize({s * std::cos(phi), s * std::sin(phi), std::cos(theta)});
    return DirectionAxis(theta, phi, dir);
}

DirectionAxis DirectionAxis::from_vector(const UnitVec3& direction) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const double theta = std::acos(std::clamp(direction.z(), -1.0, 1.0));
    double phi = std::atan2(direction.y(), direction.x());
    if (phi < 0.0) phi += two_pi;
    if (phi >= two_pi) phi = 0.0;
    return DirectionAxis(theta, phi, direction);
}

const char* to_string(BellLabel label) {
    switch (label) {
        case BellLabel::PhiPlus: return "Phi+";
        case BellLabel::PhiMinus: return "Phi-";
        case BellLabel::PsiPlus: return "Psi+";
        case BellLabel::PsiMinus: return "Psi-";
    }
    return "?";
}

Ket z_basis_state(Sign s) { return s == Sign::plus ? Ket{1.0, 0.0} : Ket{0.0, 1.0}; }

Ket product_state(Sign s1, Sign s2) { return z_basis_state(s1).tensor(z_basis_state(s2)); }

Ket bell_state(BellLabel label) {
    const double r = 1.0 / std::numbers::sqrt2;
    switch (label) {
        case BellLabel::PhiPlus: return Ket{r, 0.0, 0.0, r};
        case BellLabel::PhiMinus: return Ket{r, 0.0, 0.0, -r};
        case BellLabel::PsiPlus: return Ket{0.0, r, r, 0.0};
        case BellLabel::PsiMinus: return Ket{0.0, r, -r, 0.0};
    }
    throw std::invalid_argument("unknown Bell label");
}

DensityOperator epr_density() {
    return DensityOperator(ComplexMatrix(4, 4,
                                         {0.0, 0.0, 0.0, 0.0,   //
                                          0.0, 0.5, -0.5, 0.0,  //
                                          0.0, -0.5, 0.5, 0.0,  //
                                          0.0, 0.0, 0.0, 0.0}));
}

Ket spinor(double theta, double phi, Sign sign) {
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    if (sign == Sign::plus) return Ket{c, s * std::polar(1.0, phi)};
    return Ket{-s * std::polar(1.0, -phi), c};
}

Ket spinor(const DirectionAxis& axis, Sign sign) { return spinor(axis.theta(), axis.phi(), sign); }

Ket spinor(const DirectionAxis& axis, Sign sign, double phi_i) { return spinor(axis.theta(), phi_i, sign); }

ComplexMatrix pauli_x() { return ComplexMatrix(2, 2, {0.0, 1.0, 1.0, 0.0}); }
ComplexMatrix pauli_y() { return ComplexMatrix(2, 2, {0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0}); }
ComplexMatrix pauli_z() { return ComplexMatrix(2, 2, {1.0, 0.0, 0.0, -1.0}); }

ComplexMatrix pauli_dot(const Vec3& v) {
    return ComplexMatrix(2, 2, {v.z, Complex(v.x, -v.y), Complex(v.x, v.y), -v.z});
}

ComplexMatrix pauli_projection(const Vec3& n) { return pauli_dot(UnitVec3::checked(n).vec()); }

ComplexMatrix pauli_projection(const UnitVec3& n) { return pauli_dot(n.vec()); }

ComplexMatrix analyzer_projector(const UnitVec3& n, Sign s) {
    const double sgn = s == Sign::plus ? 0.5 : -0.5;
    return ComplexMatrix::identity(2) * Complex(0.5) + pauli_dot(n.vec()) * Complex(sgn);
}

}  // namespace eprsim
