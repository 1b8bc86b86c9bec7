#include <doctest.h>

#include <cmath>

#include "eprsim/qstate.hpp"
#include "eprsim/states.hpp"
#include "support.hpp"

using namespace eprsim;
using testing::cd;

namespace {

ComplexMatrix m2(cd a, cd b, cd c, cd d) { return {2, 2, {a, b, c, d}}; }

cd det4(const ComplexMatrix& m) {
    // Laplace expansion along the first row.
    auto minor3 = [&](std::size_t skip) {
        std::size_t cols[3];
        for (std::size_t j = 0, k = 0; j < 4; ++j)
            if (j != skip) cols[k++] = j;
        auto e = [&](std::size_t r, std::size_t c) { return m(r, cols[c]); };
        return e(1, 0) * (e(2, 1) * e(3, 2) - e(2, 2) * e(3, 1)) - e(1, 1) * (e(2, 0) * e(3, 2) - e(2, 2) * e(3, 0)) +
               e(1, 2) * (e(2, 0) * e(3, 1) - e(2, 1) * e(3, 0));
    };
    cd d = 0.0;
    for (std::size_t j = 0; j < 4; ++j) d += (j % 2 == 0 ? 1.0 : -1.0) * m(0, j) * minor3(j);
    return d;
}

}  // namespace

TEST_SUITE("qstate") {

TEST_CASE("construction rejects non-finite and mis-sized input") {
    CHECK_THROWS_AS(ComplexMatrix(2, 2, {1, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(ComplexMatrix(2, 2, {1, 0, 0, cd(std::nan(""), 0)}), std::invalid_argument);
    CHECK_THROWS_AS(Ket({1.0, cd(INFINITY, 0)}), StateError);
    CHECK_THROWS_AS(Ket({1.0, 1.0}), StateError);
    CHECK_THROWS_AS(Ket({1.0, 0.0, 0.0}), StateError);
    CHECK_NOTHROW(Ket({1.0, 0.0}));
}

TEST_CASE("density operator invariants are enforced") {
    CHECK_THROWS_AS(DensityOperator(m2(1, 0.1, 0, 0)), StateError);                // not Hermitian
    CHECK_THROWS_AS(DensityOperator(m2(0.6, 0, 0, 0.6)), StateError);              // trace 1.2
    CHECK_THROWS_AS(DensityOperator(m2(1.5, 0, 0, -0.5)), StateError);             // negative eigenvalue
    CHECK_THROWS_AS(DensityOperator(ComplexMatrix::identity(3) * cd(1.0 / 3)), StateError);
    CHECK_NOTHROW(DensityOperator(m2(0.5, 0.5, 0.5, 0.5)));
}

TEST_CASE("tensor product examples") {
    CHECK(tensor_product(ComplexMatrix::identity(2), ComplexMatrix::identity(2)).approx_equal(ComplexMatrix::identity(4), 0));
    CHECK(tensor_product(pauli_z(), ComplexMatrix::identity(2)).approx_equal(ComplexMatrix::diagonal({1, 1, -1, -1}), 0));
    const auto up = z_basis_state(Sign::plus).projector();
    const auto down = z_basis_state(Sign::minus).projector();
    CHECK(tensor_product(up, down).approx_equal(ComplexMatrix::diagonal({0, 1, 0, 0}), 0));
}

TEST_CASE("tensor product matches index arithmetic, is bilinear and associative") {
    testing::Gen g(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = g.matrix(2, 2);
        const auto b = g.matrix(2, 2);
        const auto c = g.matrix(2, 2);
        CHECK(testing::max_abs(tensor_product(a, b), testing::oracle_kron(a, b)) == 0.0);

        const cd alpha(g.normal(), g.normal());
        const cd beta(g.normal(), g.normal());
        const auto lhs = tensor_product(a * alpha + b * beta, c);
        const auto rhs = tensor_product(a, c) * alpha + tensor_product(b, c) * beta;
        CHECK(lhs.max_abs_diff(rhs) < 1e-12);

        const auto left = tensor_product(tensor_product(a, b), c);
        const auto right = tensor_product(a, tensor_product(b, c));
        CHECK(left.max_abs_diff(right) < 1e-12);
    }
}

TEST_CASE("trace of a tensor product factorizes") {
    testing::Gen g(12);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = g.hermitian(2);
        const auto b = g.hermitian(2);
        CHECK(std::abs(tensor_product(a, b).trace() - a.trace() * b.trace()) < 1e-12);
    }
}

TEST_CASE("hermitian eigenvalues satisfy trace, power-sum and determinant identities") {
    testing::Gen g(13);
    for (int trial = 0; trial < 300; ++trial) {
        const auto h = g.hermitian(4);
        const auto ev = hermitian_eigenvalues(h);
        REQUIRE(ev.size() == 4);
        double sum = 0.0, sq = 0.0;
        for (double v : ev) {
            sum += v;
            sq += v * v;
        }
        CHECK(sum == doctest::Approx(h.trace().real()).epsilon(1e-10));
        CHECK(sq == doctest::Approx((h * h).trace().real()).epsilon(1e-10));
        for (double v : ev) {
            const auto shifted = h - ComplexMatrix::identity(4) * cd(v);
            double scale = 1.0;
            for (double w : ev) scale *= std::max(1.0, std::abs(w - v) + 1.0);
            CHECK(std::abs(det4(shifted)) / scale < 1e-9);
        }
        for (std::size_t i = 1; i < ev.size(); ++i) CHECK(ev[i - 1] <= ev[i]);
    }
}

TEST_CASE("degenerate spectra are resolved exactly enough for the PSD floor") {
    // Rank-one projectors have a triple zero eigenvalue.
    testing::Gen g(14);
    for (int trial = 0; trial < 200; ++trial) {
        const auto k = g.ket(4);
        const auto ev = DensityOperator::pure(k).eigenvalues();
        CHECK(ev[0] > -1e-13);
        CHECK(ev[3] == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("partial trace examples") {
    const auto half = DensityOperator(ComplexMatrix::identity(2) * cd(0.5));
    CHECK(partial_trace(epr_density(), Particle::second).matrix().max_abs_diff(half.matrix()) < 1e-15);
    CHECK(partial_trace(epr_density(), Particle::first).matrix().max_abs_diff(half.matrix()) < 1e-15);
    const auto pm = DensityOperator(ComplexMatrix::diagonal({0, 1, 0, 0}));
    CHECK(partial_trace(pm, Particle::second).matrix().approx_equal(z_basis_state(Sign::plus).projector(), 0));
    CHECK(partial_trace(pm, Particle::first).matrix().approx_equal(z_basis_state(Sign::minus).projector(), 0));
}

TEST_CASE("partial traces of random states are valid and undo products") {
    testing::Gen g(15);
    for (int trial = 0; trial < 300; ++trial) {
        const auto rho = g.density(4, 1 + trial % 4);
        for (auto p : {Particle::first, Particle::second}) {
            const auto r = partial_trace(rho, p);
            CHECK(std::abs(r.matrix().trace() - 1.0) < 1e-12);
            CHECK(testing::valid_density(r.matrix()));
        }
        const auto a = g.density(2);
        const auto b = g.density(2);
        const DensityOperator ab(tensor_product(a.matrix(), b.matrix()));
        CHECK(partial_trace(ab, Particle::second).matrix().max_abs_diff(a.matrix()) < 1e-12);
        CHECK(partial_trace(ab, Particle::first).matrix().max_abs_diff(b.matrix()) < 1e-12);
    }
}

TEST_CASE("conditional reduction of the singlet") {
    const auto up = z_basis_state(Sign::plus);
    const auto down = z_basis_state(Sign::minus);

    const auto on2 = conditional_reduce(epr_density(), down, Particle::second);
    CHECK(on2.weight == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(on2.conditional.matrix().max_abs_diff(up.projector()) < 1e-12);

    const auto on1 = conditional_reduce(epr_density(), up, Particle::first);
    CHECK(on1.weight == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(on1.conditional.matrix().max_abs_diff(down.projector()) < 1e-12);

    const DensityOperator pm(ComplexMatrix::diagonal({0, 1, 0, 0}));
    CHECK_THROWS_AS(conditional_reduce(pm, up, Particle::second), ZeroProbabilityBranch);
}

TEST_CASE("conditional weights over an orthonormal basis sum to one") {
    testing::Gen g(16);
    for (int trial = 0; trial < 300; ++trial) {
        const auto rho = g.density(4);
        const auto axis = g.axis();
        for (auto p : {Particle::first, Particle::second}) {
            double total = 0.0;
            for (auto s : {Sign::plus, Sign::minus}) total += conditional_reduce(rho, spinor(axis, s), p).weight;
            CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

}  // TEST_SUITE
