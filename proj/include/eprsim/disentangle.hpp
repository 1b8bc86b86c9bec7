#pragma once

// Loss of inter-particle interference ("disentanglement") as a state map.

#include "eprsim/qstate.hpp"
#include "eprsim/states.hpp"

namespace eprsim {

enum class Branch {
    plus_minus,  // particle 1 up, particle 2 down along the axis
    minus_plus,
};

/// Unitary whose columns are spinor(axis, s1) (x) spinor(axis, s2) in the order
/// (++, +-, -+, --).
ComplexMatrix product_basis(const DirectionAxis& axis);

/// Zeroes every off-diagonal element of rho in the product eigenbasis of `axis`.
DensityOperator decohere_offdiagonal(const DensityOperator& rho, const DirectionAxis& axis);

/// rho_axis(s) = |s>_axis <s|_axis for a single particle.
DensityOperator single_spin_state(const DirectionAxis& axis, Sign s);

/// 1/2 [rho1(+) rho2(-) + rho1(-) rho2(+)] along `axis`.
DensityOperator disentangled_mixture(const DirectionAxis& axis);

/// One definite, angular-momentum-conserving branch of the mixture.
DensityOperator branch_pair(const DirectionAxis& axis, Branch branch);

}  // namespace eprsim
