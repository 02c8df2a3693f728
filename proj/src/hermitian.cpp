#include "numrad/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace numrad {

namespace {

constexpr double kSymmetryTol = 1e-10;
constexpr double kConvergenceRel = 1e-12;
constexpr int kMaxSweeps = 60;

double hermitian_defect(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            d = std::max(d, std::abs(a(i, j) - std::conj(a(j, i))));
    return d;
}

ComplexMatrix symmetrized(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    ComplexMatrix h(n);
    for (std::size_t i = 0; i < n; ++i) {
        h.set(i, i, Complex{a(i, i).real(), 0.0});
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex v = 0.5 * (a(i, j) + std::conj(a(j, i)));
            h.set(i, j, v);
            h.set(j, i, std::conj(v));
        }
    }
    return h;
}

} // namespace

HermitianMatrix::HermitianMatrix(const ComplexMatrix& a) : m_(a.dim()) {
    const double defect = hermitian_defect(a);
    if (defect > kSymmetryTol * a.max_abs()) {
        throw std::invalid_argument("matrix is not Hermitian (defect " + std::to_string(defect) + ")");
    }
    m_ = symmetrized(a);
}

HermitianMatrix real_part(const ComplexMatrix& a) {
    return HermitianMatrix(HermitianMatrix::Trusted{}, symmetrized(a));
}

bool is_hermitian(const ComplexMatrix& a) {
    return hermitian_defect(a) <= kSymmetryTol * a.max_abs();
}

HermitianMatrix imag_part(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    ComplexMatrix k(n);
    for (std::size_t i = 0; i < n; ++i) {
        k.set(i, i, Complex{a(i, i).imag(), 0.0});
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex d = a(i, j) - std::conj(a(j, i));
            const Complex v{0.5 * d.imag(), -0.5 * d.real()};
            k.set(i, j, v);
            k.set(j, i, std::conj(v));
        }
    }
    return HermitianMatrix(HermitianMatrix::Trusted{}, std::move(k));
}

namespace detail {

JacobiStatus jacobi_hermitian(Complex* h, std::size_t n, Complex* v) {
    if (n == 1) return {true, 0, 0.0};

    double frob_sq = 0.0;
    for (std::size_t k = 0; k < n * n; ++k) frob_sq += std::norm(h[k]);
    const double tol = kConvergenceRel * std::sqrt(frob_sq);
    // A pivot below tol/n cannot keep the off-diagonal mass above tol, so a
    // rotation-free sweep certifies convergence.
    const double skip = tol / static_cast<double>(n);

    double off = 0.0;
    for (int sweep = 1; sweep <= kMaxSweeps; ++sweep) {
        double off_sq = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off_sq += std::norm(h[i * n + j]);
        off = std::sqrt(2.0 * off_sq);
        if (off <= tol) return {true, sweep - 1, off};

        bool rotated = false;
        for (std::size_t p = 0; p < n - 1; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex b = h[p * n + q];
                const double br = b.real(), bi = b.imag();
                if (std::abs(br) + std::abs(bi) <= skip) continue;
                const double babs = std::sqrt(br * br + bi * bi);
                if (babs <= skip) continue;
                rotated = true;

                const double a = h[p * n + p].real();
                const double d = h[q * n + q].real();
                const Complex phase{br / babs, bi / babs};

                const double tau = (d - a) / (2.0 * babs);
                const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                              : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                const Complex se = s * phase;            // s * e^{i phi}
                const Complex ce = c * phase;            // c * e^{i phi}
                const Complex sec = std::conj(se);       // s * e^{-i phi}
                const Complex cec = std::conj(ce);       // c * e^{-i phi}

                // Rows p and q, mirrored into columns to stay Hermitian.
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const Complex hp = h[p * n + k];
                    const Complex hq = h[q * n + k];
                    const Complex np = c * hp - se * hq;
                    const Complex nq = s * hp + ce * hq;
                    h[p * n + k] = np;
                    h[q * n + k] = nq;
                    h[k * n + p] = std::conj(np);
                    h[k * n + q] = std::conj(nq);
                }
                h[p * n + p] = Complex{a - t * babs, 0.0};
                h[q * n + q] = Complex{d + t * babs, 0.0};
                h[p * n + q] = Complex{0.0, 0.0};
                h[q * n + p] = Complex{0.0, 0.0};

                if (v != nullptr) {
                    for (std::size_t k = 0; k < n; ++k) {
                        const Complex vp = v[k * n + p];
                        const Complex vq = v[k * n + q];
                        v[k * n + p] = c * vp - sec * vq;
                        v[k * n + q] = s * vp + cec * vq;
                    }
                }
            }
        }
        if (!rotated) return {true, sweep, off};
    }
    return {false, kMaxSweeps, off};
}

void collect_eigenvalues(const Complex* h, std::size_t n, std::vector<double>& evals,
                         Complex* vecs) {
    evals.resize(n);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<double> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = h[i * n + i].real();
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return diag[x] < diag[y]; });
    for (std::size_t i = 0; i < n; ++i) evals[i] = diag[order[i]];
    if (vecs != nullptr) {
        std::vector<Complex> scratch(n * n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) scratch[i * n + j] = vecs[i * n + order[j]];
        std::copy(scratch.begin(), scratch.end(), vecs);
    }
}

} // namespace detail

EigenSystem hermitian_eig(const HermitianMatrix& h) {
    const std::size_t n = h.dim();
    std::vector<Complex> buf(h.matrix().entries());
    std::vector<Complex> vecs(n * n, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < n; ++i) vecs[i * n + i] = Complex{1.0, 0.0};

    const auto status = detail::jacobi_hermitian(buf.data(), n, vecs.data());
    if (!status.converged) {
        throw EigenError("eigensolver did not converge within sweep limit", status.offdiag);
    }
    EigenSystem sys;
    detail::collect_eigenvalues(buf.data(), n, sys.eigenvalues, vecs.data());
    sys.eigenvectors = ComplexMatrix(n, std::move(vecs));
    return sys;
}

std::vector<double> hermitian_eigvals(const HermitianMatrix& h) {
    const std::size_t n = h.dim();
    std::vector<Complex> buf(h.matrix().entries());
    const auto status = detail::jacobi_hermitian(buf.data(), n, nullptr);
    if (!status.converged) {
        throw EigenError("eigensolver did not converge within sweep limit", status.offdiag);
    }
    std::vector<double> evals;
    detail::collect_eigenvalues(buf.data(), n, evals, nullptr);
    return evals;
}

double hermitian_norm(const HermitianMatrix& h) {
    const auto evals = hermitian_eigvals(h);
    return std::max(std::abs(evals.front()), std::abs(evals.back()));
}

double operator_norm(const ComplexMatrix& a) {
    const ComplexMatrix gram = matmul(adjoint(a), a);
    const HermitianMatrix h(HermitianMatrix::Trusted{}, symmetrized(gram));
    const auto evals = hermitian_eigvals(h);
    return std::sqrt(std::max(0.0, evals.back()));
}

} // namespace numrad
