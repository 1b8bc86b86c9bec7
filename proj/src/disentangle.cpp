#include "eprsim/disentangle.hpp"

#include <array>

namespace eprsim {

ComplexMatrix product_basis(const DirectionAxis& axis) {
    const std::array<Ket, 2> single{spinor(axis, Sign::plus), spinor(axis, Sign::minus)};
    std::vector<Complex> e(16);
    for (std::size_t col = 0; col < 4; ++col) {
        const Ket k = single[col / 2].tensor(single[col % 2]);
        for (std::size_t row = 0; row < 4; ++row) e[row * 4 + col] = k[row];
    }
    return ComplexMatrix(4, 4, std::move(e));
}

DensityOperator decohere_offdiagonal(const DensityOperator& rho, const DirectionAxis& axis) {
    if (rho.dim() != 4) throw StateError("decoherence map acts on two-particle states");
    const auto u = product_basis(axis);
    const auto in_axis_basis = u.adjoint() * rho.matrix() * u;
    std::array<Complex, 4> diag{};
    for (std::size_t i = 0; i < 4; ++i) diag[i] = in_axis_basis(i, i).real();
    return DensityOperator(u * ComplexMatrix::diagonal(diag) * u.adjoint());
}

DensityOperator single_spin_state(const DirectionAxis& axis, Sign s) {
    return DensityOperator::pure(spinor(axis, s));
}

DensityOperator branch_pair(const DirectionAxis& axis, Branch branch) {
    const bool up_first = branch == Branch::plus_minus;
    const auto first = single_spin_state(axis, up_first ? Sign::plus : Sign::minus);
    const auto second = single_spin_state(axis, up_first ? Sign::minus : Sign::plus);
    return DensityOperator(tensor_product(first.matrix(), second.matrix()));
}

DensityOperator disentangled_mixture(const DirectionAxis& axis) {
    const auto pm = branch_pair(axis, Branch::plus_minus).matrix();
    const auto mp = branch_pair(axis, Branch::minus_plus).matrix();
    return DensityOperator((pm + mp) * Complex(0.5));
}

}  // namespace eprsim
