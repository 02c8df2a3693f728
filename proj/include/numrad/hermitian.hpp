#pragma once

#include "numrad/complex_matrix.hpp"

#include <stdexcept>
#include <vector>

namespace numrad {

// Raised when the iterative eigensolver fails to reach its residual target.
class EigenError : public std::runtime_error {
public:
    EigenError(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

// Hermitian matrix. The constructor symmetrizes (H + H*)/2 and rejects inputs
// whose departure from symmetry exceeds 1e-10 relative to the largest entry.
class HermitianMatrix {
public:
    explicit HermitianMatrix(const ComplexMatrix& a);

    std::size_t dim() const noexcept { return m_.dim(); }
    const ComplexMatrix& matrix() const noexcept { return m_; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

    // Internal fast path: entries are trusted to be exactly Hermitian.
    struct Trusted {};
    HermitianMatrix(Trusted, ComplexMatrix m) : m_(std::move(m)) {}

private:
    ComplexMatrix m_;
};

// (A + A*)/2 and (A - A*)/(2i).
HermitianMatrix real_part(const ComplexMatrix& a);
HermitianMatrix imag_part(const ComplexMatrix& a);

// True when a passes the HermitianMatrix symmetry test.
bool is_hermitian(const ComplexMatrix& a);

// Eigenvalues ascending; eigenvectors column k pairs with eigenvalues[k].
struct EigenSystem {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

// Cyclic-by-row complex Jacobi with unitary 2x2 rotations. Converges when the
// off-diagonal Frobenius mass falls below 1e-12 * ||H||_F; throws EigenError
// after 60 sweeps without convergence.
EigenSystem hermitian_eig(const HermitianMatrix& h);

// Eigenvalues only (no accumulation of the rotations), ascending.
std::vector<double> hermitian_eigvals(const HermitianMatrix& h);

// max |eigenvalue| of a Hermitian matrix.
double hermitian_norm(const HermitianMatrix& h);

// Operator (spectral) norm: sqrt(lambda_max(A* A)).
double operator_norm(const ComplexMatrix& a);

namespace detail {

// In-place kernel. h is n*n row-major Hermitian storage, overwritten with a
// nearly diagonal matrix; if v is non-null it must hold the identity on entry
// and accumulates the eigenvector basis (columns). Returns the final
// off-diagonal Frobenius mass; converged=false means the sweep cap was hit.
struct JacobiStatus {
    bool converged;
    int sweeps;
    double offdiag;
};
JacobiStatus jacobi_hermitian(Complex* h, std::size_t n, Complex* v);

// Eigenvalues of the diagonalized buffer, sorted ascending. If vecs is
// non-null its columns are permuted to match.
void collect_eigenvalues(const Complex* h, std::size_t n, std::vector<double>& evals,
                         Complex* vecs);

} // namespace detail

} // namespace numrad
