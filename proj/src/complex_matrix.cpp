#include "numrad/complex_matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace numrad {

namespace {

void require_finite(const Complex& v, std::size_t i, std::size_t j) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw std::invalid_argument("non-finite matrix entry at (" + std::to_string(i) +
                                    ", " + std::to_string(j) + ")");
    }
}

void require_dim(std::size_t n) {
    if (n == 0) throw std::invalid_argument("matrix dimension must be positive");
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t n) : n_(n), data_(n * n, Complex{0.0, 0.0}) {
    require_dim(n);
}

ComplexMatrix::ComplexMatrix(std::size_t n, std::vector<Complex> entries)
    : n_(n), data_(std::move(entries)) {
    require_dim(n);
    if (data_.size() != n * n) throw std::invalid_argument("entry count does not match dimension");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) require_finite(data_[i * n + j], i, j);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = Complex{1.0, 0.0};
    return m;
}

void ComplexMatrix::set(std::size_t i, std::size_t j, const Complex& v) {
    require_finite(v, i, j);
    data_[i * n_ + j] = v;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const Complex& v : data_) m = std::max(m, std::abs(v));
    return m;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const Complex& v : data_) s += std::norm(v);
    return std::sqrt(s);
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r.set(i, j, std::conj(a(j, i)));
    return r;
}

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b);
    const std::size_t n = a.dim();
    std::vector<Complex> out(n * n);
    for (std::size_t k = 0; k < n * n; ++k) out[k] = a.entries()[k] + b.entries()[k];
    return ComplexMatrix(n, std::move(out));
}

ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b);
    const std::size_t n = a.dim();
    std::vector<Complex> out(n * n);
    for (std::size_t k = 0; k < n * n; ++k) out[k] = a.entries()[k] - b.entries()[k];
    return ComplexMatrix(n, std::move(out));
}

ComplexMatrix scale(const Complex& alpha, const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    std::vector<Complex> out(n * n);
    for (std::size_t k = 0; k < n * n; ++k) out[k] = alpha * a.entries()[k];
    return ComplexMatrix(n, std::move(out));
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b);
    const std::size_t n = a.dim();
    std::vector<Complex> out(n * n, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < n; ++j) out[i * n + j] += aik * b(k, j);
        }
    }
    return ComplexMatrix(n, std::move(out));
}

Complex quadratic_form(const ComplexMatrix& a, const std::vector<Complex>& x) {
    const std::size_t n = a.dim();
    if (x.size() != n) throw std::invalid_argument("vector dimension mismatch");
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        Complex row{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j) row += a(i, j) * x[j];
        acc += std::conj(x[i]) * row;
    }
    return acc;
}

} // namespace numrad
