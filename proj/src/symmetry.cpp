#include "eprsim/symmetry.hpp"

#include <algorithm>
#include <cmath>

#include <array>

namespace eprsim {

namespace {

ComplexMatrix permutation(const std::array<std::size_t, 4>& image) {
    std::vector<Complex> e(16);
    for (std::size_t col = 0; col < 4; ++col) e[image[col] * 4 + col] = 1.0;
    return ComplexMatrix(4, 4, std::move(e));
}

Ket apply(const ComplexMatrix& op, const Ket& state) {
    if (state.dim() != 4) throw StateError("helicity symmetries act on two-photon states");
    std::vector<Complex> out(4);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) out[r] += op(r, c) * state[c];
    return Ket(std::move(out));
}

}  // namespace

std::string HelicityState::label() const {
    std::string s = "|";
    s += left_photon == Helicity::R ? 'R' : 'L';
    s += right_photon == Helicity::R ? 'R' : 'L';
    s += '>';
    return s;
}

Ket HelicityState::ket() const {
    std::vector<Complex> amps(4);
    amps[(left_photon == Helicity::R ? 0 : 2) + (right_photon == Helicity::R ? 0 : 1)] = 1.0;
    return Ket(std::move(amps));
}

const char* to_string(SymmetryEigen e) {
    switch (e) {
        case SymmetryEigen::even: return "even";
        case SymmetryEigen::odd: return "odd";
        case SymmetryEigen::none: return "not an eigenstate";
    }
    return "?";
}

// Basis indices: 0 = RR, 1 = RL, 2 = LR, 3 = LL.
ComplexMatrix parity_matrix() { return permutation({3, 1, 2, 0}); }
ComplexMatrix r_perp_matrix() { return permutation({0, 2, 1, 3}); }

Ket apply_parity(const Ket& state) { return apply(parity_matrix(), state); }
Ket apply_r_perp(const Ket& state) { return apply(r_perp_matrix(), state); }

SymmetryEigen eigen_sign(const ComplexMatrix& op, const Ket& state) {
    const Ket image = apply(op, state);
    if (image.approx_equal(state, kStateTolerance)) return SymmetryEigen::even;
    double diff = 0.0;
    for (std::size_t i = 0; i < 4; ++i) diff = std::max(diff, std::abs(image[i] + state[i]));
    return diff <= kStateTolerance ? SymmetryEigen::odd : SymmetryEigen::none;
}

SymmetryClassification classify(const Ket& state) {
    return {eigen_sign(parity_matrix(), state), eigen_sign(r_perp_matrix(), state)};
}

}  // namespace eprsim
