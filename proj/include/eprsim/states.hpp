#pragma once

#include "eprsim/qstate.hpp"
#include "eprsim/vec3.hpp"

namespace eprsim {

/// Quantization axis given by polar angle theta in [0, pi] and azimuth phi in [0, 2 pi).
///
/// The Cartesian direction is stored alongside the angles so that axes built
/// from a vector keep that vector bit-for-bit.
class DirectionAxis {
public:
    /// theta outside [0, pi] is rejected; phi is wrapped into [0, 2 pi).
    static DirectionAxis from_angles(double theta, double phi);
    static DirectionAxis from_vector(const UnitVec3& direction);

    static DirectionAxis z() { return from_vector(UnitVec3::z_axis()); }
    static DirectionAxis x() { return from_vector(UnitVec3::x_axis()); }
    static DirectionAxis y() { return from_vector(UnitVec3::y_axis()); }

    double theta() const { return theta_; }
    double phi() const { return phi_; }
    const UnitVec3& direction() const { return dir_; }

private:
    DirectionAxis(double theta, double phi, UnitVec3 dir) : theta_(theta), phi_(phi), dir_(dir) {}
    double theta_;
    double phi_;
    UnitVec3 dir_;
};

enum class BellLabel { PhiPlus, PhiMinus, PsiPlus, PsiMinus };
enum class Sign { plus, minus };

const char* to_string(BellLabel label);

Ket z_basis_state(Sign s);
/// |s1>_z (x) |s2>_z.
Ket product_state(Sign s1, Sign s2);
Ket bell_state(BellLabel label);

/// |Psi-><Psi-|, the singlet.
DensityOperator epr_density();

/// Spin-1/2 eigenstates along a direction with polar angle theta and azimuth phi:
///   plus  -> ( cos(theta/2),                 sin(theta/2) e^{+i phi} )
///   minus -> ( -sin(theta/2) e^{-i phi},     cos(theta/2) )
/// Amplitudes are stored exactly in this gauge.
Ket spinor(double theta, double phi, Sign sign);
/// Eigenstate of axis . sigma, using the axis' own azimuth.
Ket spinor(const DirectionAxis& axis, Sign sign);
/// Same polar angle as `axis` but a particle-specific azimuthal phase phi_i.
Ket spinor(const DirectionAxis& axis, Sign sign, double phi_i);

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

/// v . sigma for any vector (linear, no normalization).
ComplexMatrix pauli_dot(const Vec3& v);
/// n . sigma; throws std::invalid_argument unless |n| = 1 within 1e-9.
ComplexMatrix pauli_projection(const Vec3& n);
ComplexMatrix pauli_projection(const UnitVec3& n);

/// Projector onto the outcome `s` of a Stern-Gerlach analyzer along n: (I +- n.sigma)/2.
ComplexMatrix analyzer_projector(const UnitVec3& n, Sign s);

}  // namespace eprsim
