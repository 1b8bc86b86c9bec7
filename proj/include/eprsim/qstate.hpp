#pragma once

// Dense complex linear algebra for one and two spin-1/2 systems.
//
// Two-particle operators use the product basis (|++>, |+->, |-+>, |-->),
// i.e. index = 2 * i1 + i2 with i = 0 for "+" and 1 for "-".

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace eprsim {

using Complex = std::complex<double>;

/// Hermiticity, trace and norm tolerance for states.
inline constexpr double kStateTolerance = 1e-12;
/// Smallest eigenvalue still accepted as positive semidefinite.
inline constexpr double kPsdFloor = -1e-10;

/// Thrown when an object would violate a state invariant.
class StateError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when conditioning on an outcome that has (numerically) zero probability.
class ZeroProbabilityBranch : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

enum class Particle { first = 1, second = 2 };

class ComplexMatrix {
public:
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const Complex> values);
    static ComplexMatrix diagonal(std::initializer_list<Complex> values);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    std::span<const Complex> entries() const { return entries_; }

    ComplexMatrix adjoint() const;
    Complex trace() const;
    /// max_ij |this_ij - other_ij|; dimensions must agree.
    double max_abs_diff(const ComplexMatrix& other) const;
    bool approx_equal(const ComplexMatrix& other, double tol) const;
    bool is_hermitian(double tol = kStateTolerance) const;

    ComplexMatrix operator+(const ComplexMatrix& o) const;
    ComplexMatrix operator-(const ComplexMatrix& o) const;
    ComplexMatrix operator*(const ComplexMatrix& o) const;
    ComplexMatrix operator*(Complex s) const;
    friend ComplexMatrix operator*(Complex s, const ComplexMatrix& m) { return m * s; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> entries_;
};

/// Normalized state vector of dimension 2 or 4.
class Ket {
public:
    explicit Ket(std::vector<Complex> amplitudes);
    Ket(std::initializer_list<Complex> amplitudes) : Ket(std::vector<Complex>(amplitudes)) {}

    std::size_t dim() const { return amps_.size(); }
    const Complex& operator[](std::size_t i) const { return amps_[i]; }
    std::span<const Complex> amplitudes() const { return amps_; }

    /// <this|other>
    Complex inner(const Ket& other) const;
    /// |this><this|
    ComplexMatrix projector() const;
    /// |this> (x) |other>, both dimension 2.
    Ket tensor(const Ket& other) const;
    /// Component-wise comparison within tol (no phase freedom).
    bool approx_equal(const Ket& other, double tol) const;

private:
    std::vector<Complex> amps_;
};

/// Hermitian, unit-trace, positive semidefinite matrix of dimension 2 or 4.
class DensityOperator {
public:
    explicit DensityOperator(ComplexMatrix m);

    static DensityOperator pure(const Ket& k);

    const ComplexMatrix& matrix() const { return m_; }
    std::size_t dim() const { return m_.rows(); }
    const Complex& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

    /// Re Tr(rho * op).
    double expectation(const ComplexMatrix& op) const;
    /// Tr(rho^2).
    double purity() const;
    /// Ascending eigenvalues.
    std::vector<double> eigenvalues() const;

private:
    ComplexMatrix m_;
};

/// Eigenvalues of a Hermitian matrix in ascending order.
///
/// The n x n complex problem is embedded as the 2n x 2n real symmetric matrix
/// [[Re, -Im], [Im, Re]], diagonalized by cyclic Jacobi rotations; every
/// eigenvalue of the embedding appears twice.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// Kronecker product: (a (x) b)[i*rb + k, j*cb + l] = a[i,j] * b[k,l].
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Reduced 2x2 state of the particle that is kept when `traced_out` is summed over.
DensityOperator partial_trace(const DensityOperator& rho, Particle traced_out);

struct ConditionalState {
    double weight;
    DensityOperator conditional;
};

/// Projects `on` onto |k><k| and traces it out.
///
/// Returns the branch probability Tr{(P_k on `on`) rho} and the normalized
/// state left on the other particle. Throws ZeroProbabilityBranch when the
/// weight is below 1e-14.
ConditionalState conditional_reduce(const DensityOperator& rho, const Ket& k, Particle on);

}  // namespace eprsim
