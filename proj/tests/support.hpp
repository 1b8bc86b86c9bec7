#pragma once

// Shared generators and independent reference computations for the tests.
// Oracles here use plain arrays and closed forms, never the library's own
// matrix or state types, so that agreement is meaningful.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "eprsim/correlations.hpp"
#include "eprsim/qstate.hpp"
#include "eprsim/states.hpp"
#include "eprsim/vec3.hpp"

namespace testing {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

class Gen {
public:
    explicit Gen(std::uint64_t seed) : eng_(seed) {}

    double uniform(double lo = 0.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(eng_); }
    double normal() { return std::normal_distribution<double>()(eng_); }
    std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(eng_); }

    eprsim::UnitVec3 unit() {
        for (;;) {
            const eprsim::Vec3 v{normal(), normal(), normal()};
            if (v.norm() > 1e-6) return eprsim::UnitVec3::normalize(v);
        }
    }

    eprsim::DirectionAxis axis() { return eprsim::DirectionAxis::from_angles(std::acos(uniform(-1.0, 1.0)), uniform(0.0, 2 * kPi)); }

    eprsim::ComplexMatrix matrix(std::size_t r, std::size_t c) {
        std::vector<cd> e(r * c);
        for (auto& x : e) x = {normal(), normal()};
        return {r, c, e};
    }

    eprsim::ComplexMatrix hermitian(std::size_t n) {
        const auto a = matrix(n, n);
        return (a + a.adjoint()) * cd(0.5);
    }

    /// Random full-rank or low-rank density operator (A A^dagger / Tr).
    eprsim::DensityOperator density(std::size_t n, std::size_t rank = 0) {
        if (rank == 0) rank = n;
        const auto a = matrix(n, rank);
        const auto m = a * a.adjoint();
        return eprsim::DensityOperator(m * cd(1.0 / m.trace().real()));
    }

    eprsim::Ket ket(std::size_t n) {
        std::vector<cd> v(n);
        double s = 0.0;
        for (auto& x : v) {
            x = {normal(), normal()};
            s += std::norm(x);
        }
        for (auto& x : v) x /= std::sqrt(s);
        return eprsim::Ket(v);
    }

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

// ---- oracles -------------------------------------------------------------

/// Eigenvector of n.sigma with eigenvalue s, built by normalizing a column of
/// (I + s n.sigma), which is a rank-one multiple of the projector.
inline std::array<cd, 2> oracle_spinor(const eprsim::UnitVec3& n, int s) {
    const cd nm(n.x(), -n.y());
    const cd np(n.x(), n.y());
    // (I + s n.sigma) = [[1 + s nz, s (nx - i ny)], [s (nx + i ny), 1 - s nz]]
    std::array<cd, 2> c0{1.0 + s * n.z(), double(s) * np};
    std::array<cd, 2> c1{double(s) * nm, 1.0 - s * n.z()};
    auto& col = std::norm(c0[0]) + std::norm(c0[1]) >= std::norm(c1[0]) + std::norm(c1[1]) ? c0 : c1;
    const double len = std::sqrt(std::norm(col[0]) + std::norm(col[1]));
    return {col[0] / len, col[1] / len};
}

/// |<s_a, s_b | Psi->|^2 with Psi- = (|+-> - |-+>)/sqrt(2) in the z basis.
inline double oracle_singlet_probability(const eprsim::UnitVec3& a, int sa, const eprsim::UnitVec3& b, int sb) {
    const auto u = oracle_spinor(a, sa);
    const auto v = oracle_spinor(b, sb);
    const cd amp = (std::conj(u[0]) * std::conj(v[1]) - std::conj(u[1]) * std::conj(v[0])) / std::sqrt(2.0);
    return std::norm(amp);
}

/// Probability that a spin prepared up (s = +1) or down along p reads `sa` along a.
inline double oracle_single(const eprsim::UnitVec3& p, int sp, const eprsim::UnitVec3& a, int sa) {
    const auto u = oracle_spinor(p, sp);
    const auto w = oracle_spinor(a, sa);
    return std::norm(std::conj(w[0]) * u[0] + std::conj(w[1]) * u[1]);
}

/// Joint outcome probability for the equal mixture of (+p, -p) and (-p, +p).
inline double oracle_mixture_probability(const eprsim::UnitVec3& p, const eprsim::UnitVec3& a, int sa,
                                         const eprsim::UnitVec3& b, int sb) {
    return 0.5 * (oracle_single(p, +1, a, sa) * oracle_single(p, -1, b, sb) +
                  oracle_single(p, -1, a, sa) * oracle_single(p, +1, b, sb));
}

/// Midpoint quadrature of E = -(a.P)(b.P) over the unit sphere in (cos theta, phi).
inline double oracle_sphere_average(const eprsim::UnitVec3& a, const eprsim::UnitVec3& b, int nz = 400, int nphi = 400) {
    double s = 0.0;
    for (int i = 0; i < nz; ++i) {
        const double z = -1.0 + (i + 0.5) * 2.0 / nz;
        const double r = std::sqrt(1.0 - z * z);
        for (int j = 0; j < nphi; ++j) {
            const double phi = (j + 0.5) * 2.0 * kPi / nphi;
            const eprsim::Vec3 p{r * std::cos(phi), r * std::sin(phi), z};
            s += -a.dot(p) * b.dot(p);
        }
    }
    return s / (nz * nphi);
}

/// Midpoint quadrature over the circle in the xy plane.
inline double oracle_circle_average(const eprsim::UnitVec3& a, const eprsim::UnitVec3& b, int n = 4096) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) {
        const double chi = (j + 0.5) * 2.0 * kPi / n;
        const eprsim::Vec3 p{std::cos(chi), std::sin(chi), 0.0};
        s += -a.dot(p) * b.dot(p);
    }
    return s / n;
}

/// Entry-by-entry Kronecker product on row-major arrays.
inline std::vector<cd> oracle_kron(const eprsim::ComplexMatrix& a, const eprsim::ComplexMatrix& b) {
    const std::size_t r = a.rows() * b.rows();
    const std::size_t c = a.cols() * b.cols();
    std::vector<cd> out(r * c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            out[i * c + j] = a(i / b.rows(), j / b.cols()) * b(i % b.rows(), j % b.cols());
    return out;
}

inline double max_abs(const eprsim::ComplexMatrix& m, const std::vector<cd>& ref) {
    double d = 0.0;
    for (std::size_t i = 0; i < ref.size(); ++i) d = std::max(d, std::abs(m.entries()[i] - ref[i]));
    return d;
}

/// Checks Hermiticity, unit trace and PSD (via the library's invariants, re-validated here).
inline bool valid_density(const eprsim::ComplexMatrix& m) {
    try {
        eprsim::DensityOperator d(m);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace testing
