#include "eprsim/qstate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace eprsim {

namespace {

bool finite(const Complex& c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

void require(bool ok, const std::string& what) {
    if (!ok) throw StateError(what);
}

// Cyclic Jacobi on a dense real symmetric matrix, row-major, in place.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n) {
    auto at = [&](std::size_t r, std::size_t c) -> double& { return a[r * n + c]; };
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += at(p, q) * at(p, q);
        if (off < 1e-40) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (std::abs(apq) < 1e-300) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = at(k, p);
                    const double akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = at(p, k);
                    const double aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = at(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

}  // namespace

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    require(rows_ > 0 && cols_ > 0, "matrix dimensions must be positive");
    require(entries_.size() == rows_ * cols_, "matrix entry count does not match rows * cols");
    require(std::all_of(entries_.begin(), entries_.end(), finite), "matrix entries must be finite");
}

ComplexMatrix ComplexMatrix::zeros(std::size_t rows, std::size_t cols) {
    return ComplexMatrix(rows, cols, std::vector<Complex>(rows * cols));
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    std::vector<Complex> e(n * n);
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1.0;
    return ComplexMatrix(n, n, std::move(e));
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> values) {
    const std::size_t n = values.size();
    std::vector<Complex> e(n * n);
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = values[i];
    return ComplexMatrix(n, n, std::move(e));
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<Complex> values) {
    return diagonal(std::span<const Complex>(values.begin(), values.size()));
}

ComplexMatrix ComplexMatrix::adjoint() const {
    std::vector<Complex> e(entries_.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) e[c * rows_ + r] = std::conj((*this)(r, c));
    return ComplexMatrix(cols_, rows_, std::move(e));
}

Complex ComplexMatrix::trace() const {
    require(is_square(), "trace of a non-square matrix");
    Complex t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    require(rows_ == other.rows_ && cols_ == other.cols_, "matrix dimensions differ");
    double m = 0.0;
    for (std::size_t i = 0; i < entries_.size(); ++i) m = std::max(m, std::abs(entries_[i] - other.entries_[i]));
    return m;
}

bool ComplexMatrix::approx_equal(const ComplexMatrix& other, double tol) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && max_abs_diff(other) <= tol;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    return is_square() && max_abs_diff(adjoint()) <= tol;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, "matrix dimensions differ");
    std::vector<Complex> e(entries_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.entries_[i];
    return ComplexMatrix(rows_, cols_, std::move(e));
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, "matrix dimensions differ");
    std::vector<Complex> e(entries_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= o.entries_[i];
    return ComplexMatrix(rows_, cols_, std::move(e));
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& o) const {
    require(cols_ == o.rows_, "matrix product dimension mismatch");
    std::vector<Complex> e(rows_ * o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Complex a = (*this)(r, k);
            for (std::size_t c = 0; c < o.cols_; ++c) e[r * o.cols_ + c] += a * o(k, c);
        }
    return ComplexMatrix(rows_, o.cols_, std::move(e));
}

ComplexMatrix ComplexMatrix::operator*(Complex s) const {
    std::vector<Complex> e(entries_);
    for (auto& v : e) v *= s;
    return ComplexMatrix(rows_, cols_, std::move(e));
}

// ---------------------------------------------------------------------------
// Ket

Ket::Ket(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {
    require(amps_.size() == 2 || amps_.size() == 4, "ket dimension must be 2 or 4");
    require(std::all_of(amps_.begin(), amps_.end(), finite), "ket amplitudes must be finite");
    double n2 = 0.0;
    for (const auto& a : amps_) n2 += std::norm(a);
    require(std::abs(n2 - 1.0) <= kStateTolerance, "ket is not normalized");
}

Complex Ket::inner(const Ket& other) const {
    require(dim() == other.dim(), "inner product of kets with different dimensions");
    Complex s = 0.0;
    for (std::size_t i = 0; i < dim(); ++i) s += std::conj(amps_[i]) * other.amps_[i];
    return s;
}

ComplexMatrix Ket::projector() const {
    const std::size_t n = dim();
    std::vector<Complex> e(n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) e[r * n + c] = amps_[r] * std::conj(amps_[c]);
    return ComplexMatrix(n, n, std::move(e));
}

Ket Ket::tensor(const Ket& other) const {
    require(dim() == 2 && other.dim() == 2, "tensor of kets requires two single-particle kets");
    return Ket({amps_[0] * other.amps_[0], amps_[0] * other.amps_[1], amps_[1] * other.amps_[0],
                amps_[1] * other.amps_[1]});
}

bool Ket::approx_equal(const Ket& other, double tol) const {
    if (dim() != other.dim()) return false;
    for (std::size_t i = 0; i < dim(); ++i)
        if (std::abs(amps_[i] - other.amps_[i]) > tol) return false;
    return true;
}

// ---------------------------------------------------------------------------
// DensityOperator

DensityOperator::DensityOperator(ComplexMatrix m) : m_(std::move(m)) {
    require(m_.is_square() && (m_.rows() == 2 || m_.rows() == 4), "density operator must be 2x2 or 4x4");
    require(m_.is_hermitian(kStateTolerance), "density operator is not Hermitian");
    require(std::abs(m_.trace() - 1.0) <= kStateTolerance, "density operator does not have unit trace");
    const auto ev = hermitian_eigenvalues(m_);
    require(ev.front() >= kPsdFloor, "density operator is not positive semidefinite");
}

DensityOperator DensityOperator::pure(const Ket& k) { return DensityOperator(k.projector()); }

double DensityOperator::expectation(const ComplexMatrix& op) const { return (m_ * op).trace().real(); }

double DensityOperator::purity() const { return (m_ * m_).trace().real(); }

std::vector<double> DensityOperator::eigenvalues() const { return hermitian_eigenvalues(m_); }

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    require(m.is_square(), "eigenvalues of a non-square matrix");
    const std::size_t n = m.rows();
    const std::size_t n2 = 2 * n;
    std::vector<double> a(n2 * n2);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            // Symmetrize so tiny anti-Hermitian noise cannot break the real embedding.
            const Complex h = 0.5 * (m(r, c) + std::conj(m(c, r)));
            a[r * n2 + c] = h.real();
            a[(r + n) * n2 + (c + n)] = h.real();
            a[r * n2 + (c + n)] = -h.imag();
            a[(r + n) * n2 + c] = h.imag();
        }
    const auto doubled = jacobi_eigenvalues(std::move(a), n2);
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
    return ev;
}

// ---------------------------------------------------------------------------
// Two-particle operations

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t rows = a.rows() * b.rows();
    const std::size_t cols = a.cols() * b.cols();
    std::vector<Complex> e(rows * cols);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    e[(i * b.rows() + k) * cols + (j * b.cols() + l)] = a(i, j) * b(k, l);
    return ComplexMatrix(rows, cols, std::move(e));
}

namespace {

ComplexMatrix partial_trace_matrix(const ComplexMatrix& m, Particle traced_out) {
    require(m.is_square() && m.rows() == 4, "partial trace requires a 4x4 operator");
    std::vector<Complex> e(4);
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) {
            Complex s = 0.0;
            for (std::size_t k = 0; k < 2; ++k)
                s += traced_out == Particle::second ? m(2 * r + k, 2 * c + k) : m(2 * k + r, 2 * k + c);
            e[2 * r + c] = s;
        }
    return ComplexMatrix(2, 2, std::move(e));
}

}  // namespace

DensityOperator partial_trace(const DensityOperator& rho, Particle traced_out) {
    require(rho.dim() == 4, "partial trace requires a two-particle state");
    return DensityOperator(partial_trace_matrix(rho.matrix(), traced_out));
}

ConditionalState conditional_reduce(const DensityOperator& rho, const Ket& k, Particle on) {
    require(rho.dim() == 4, "conditional reduction requires a two-particle state");
    require(k.dim() == 2, "conditioning ket must be a single-particle state");
    const auto id = ComplexMatrix::identity(2);
    const auto p = k.projector();
    const auto lift = on == Particle::second ? tensor_product(id, p) : tensor_product(p, id);
    const auto unnormalized = partial_trace_matrix(lift * rho.matrix() * lift, on);
    const double weight = unnormalized.trace().real();
    if (weight < 1e-14) throw ZeroProbabilityBranch("conditioning on zero-probability branch");
    return {std::min(weight, 1.0), DensityOperator(unnormalized * Complex(1.0 / weight))};
}

}  // namespace eprsim
