#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace numrad {

using Complex = std::complex<double>;

// Dense square complex matrix, row-major. Entries must stay finite; every
// mutating entry point validates. Treat instances as immutable once shared
// across threads: all operations below are pure.
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    // Zero matrix of dimension n (n >= 1).
    explicit ComplexMatrix(std::size_t n);

    // Takes ownership of row-major entries; entries.size() must equal n*n.
    ComplexMatrix(std::size_t n, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t n);

    std::size_t dim() const noexcept { return n_; }

    const Complex& operator()(std::size_t i, std::size_t j) const {
        return data_[i * n_ + j];
    }

    // Validates that v is finite.
    void set(std::size_t i, std::size_t j, const Complex& v);

    const std::vector<Complex>& entries() const noexcept { return data_; }

    double max_abs() const;
    double frobenius_norm() const;

private:
    std::size_t n_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix adjoint(const ComplexMatrix& a);
ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(const Complex& alpha, const ComplexMatrix& a);
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

inline ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) { return add(a, b); }
inline ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) { return subtract(a, b); }
inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return matmul(a, b); }
inline ComplexMatrix operator*(const Complex& alpha, const ComplexMatrix& a) { return scale(alpha, a); }

// <Ax, x> for a unit vector x; no normalization is applied.
Complex quadratic_form(const ComplexMatrix& a, const std::vector<Complex>& x);

} // namespace numrad
