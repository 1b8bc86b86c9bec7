#pragma once

// Two-photon discrete symmetries on helicity product states.
//
// Helicity kets share the two-particle spin space through |+> -> |kappa, R>
// and |-> -> |kappa, L>, so the basis order is (RR, RL, LR, LL).
//
// Parity exchanges RR <-> LL and leaves RL and LR fixed (inverting through
// the source reverses both momentum and helicity of each photon). The
// transverse pi rotation R_perp fixes RR and LL and exchanges RL <-> LR.

#include <optional>
#include <string>

#include "eprsim/qstate.hpp"

namespace eprsim {

enum class Helicity { R, L };

struct HelicityState {
    Helicity left_photon;
    Helicity right_photon;

    std::string label() const;
    Ket ket() const;
};

enum class SymmetryEigen { even, odd, none };

const char* to_string(SymmetryEigen e);

struct SymmetryClassification {
    SymmetryEigen parity;
    SymmetryEigen r_perp;
};

ComplexMatrix parity_matrix();
ComplexMatrix r_perp_matrix();

Ket apply_parity(const Ket& state);
Ket apply_r_perp(const Ket& state);

/// Eigenvalue sign of `op` on `state` (within 1e-12), or none.
SymmetryEigen eigen_sign(const ComplexMatrix& op, const Ket& state);

SymmetryClassification classify(const Ket& state);

}  // namespace eprsim
