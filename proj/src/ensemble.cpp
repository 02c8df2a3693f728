#include "numrad/ensemble.hpp"

#include "numrad/hermitian.hpp"

#include <numbers>
#include <stdexcept>

namespace numrad {

std::string to_string(EnsembleKind kind) {
    switch (kind) {
        case EnsembleKind::Gaussian: return "gaussian";
        case EnsembleKind::Hermitian: return "hermitian";
        case EnsembleKind::SkewHermitian: return "skew-hermitian";
        case EnsembleKind::NilpotentJordan: return "nilpotent-jordan";
        case EnsembleKind::NormalRandom: return "normal-random";
        case EnsembleKind::Shift: return "shift";
    }
    throw std::logic_error("unknown ensemble kind");
}

EnsembleKind parse_ensemble_kind(const std::string& name) {
    if (name == "gaussian") return EnsembleKind::Gaussian;
    if (name == "hermitian") return EnsembleKind::Hermitian;
    if (name == "skew-hermitian") return EnsembleKind::SkewHermitian;
    if (name == "nilpotent-jordan") return EnsembleKind::NilpotentJordan;
    if (name == "normal-random") return EnsembleKind::NormalRandom;
    if (name == "shift") return EnsembleKind::Shift;
    throw std::invalid_argument("unknown ensemble kind: " + name);
}

std::uint64_t matrix_seed(std::uint64_t seed, EnsembleKind kind, std::size_t dim,
                          std::size_t index) {
    std::uint64_t s = seed;
    s = mix64(s ^ static_cast<std::uint64_t>(kind));
    s = mix64(s ^ static_cast<std::uint64_t>(dim));
    s = mix64(s ^ static_cast<std::uint64_t>(index));
    return s;
}

namespace {

ComplexMatrix gaussian_matrix(SplitMix64& rng, std::size_t n) {
    std::vector<Complex> e(n * n);
    for (std::size_t k = 0; k < n * n; ++k) {
        const auto [re, im] = rng.next_gaussian_pair();
        e[k] = Complex{re, im};
    }
    return ComplexMatrix(n, std::move(e));
}

ComplexMatrix nilpotent_matrix(SplitMix64& rng, std::size_t n) {
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto [re, im] = rng.next_gaussian_pair();
            m.set(i, j, Complex{re, im});
        }
    return m;
}

ComplexMatrix normal_matrix(SplitMix64& rng, std::size_t n) {
    std::vector<Complex> diag(n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto [re, im] = rng.next_gaussian_pair();
        diag[k] = Complex{re, im};
    }
    const ComplexMatrix u = random_unitary(rng, n);
    ComplexMatrix d(n);
    for (std::size_t k = 0; k < n; ++k) d.set(k, k, diag[k]);
    return matmul(matmul(u, d), adjoint(u));
}

} // namespace

ComplexMatrix jordan_shift(std::size_t n) {
    ComplexMatrix m(n);
    for (std::size_t i = 0; i + 1 < n; ++i) m.set(i, i + 1, Complex{1.0, 0.0});
    return m;
}

ComplexMatrix random_unitary(SplitMix64& rng, std::size_t n) {
    ComplexMatrix v = ComplexMatrix::identity(n);
    std::vector<Complex> col_p(n), col_q(n);
    for (std::size_t p = 0; p + 1 < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            const double phi = 2.0 * std::numbers::pi * rng.next_double();
            const double psi = 2.0 * std::numbers::pi * rng.next_double();
            const double c = std::cos(phi), s = std::sin(phi);
            const Complex w{std::cos(psi), -std::sin(psi)};  // e^{-i psi}
            for (std::size_t k = 0; k < n; ++k) {
                const Complex vp = v(k, p);
                const Complex vq = v(k, q);
                v.set(k, p, c * vp - s * (w * vq));
                v.set(k, q, s * vp + c * (w * vq));
            }
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        const double chi = 2.0 * std::numbers::pi * rng.next_double();
        const Complex ph{std::cos(chi), std::sin(chi)};
        for (std::size_t k = 0; k < n; ++k) v.set(k, j, ph * v(k, j));
    }
    return v;
}

ComplexMatrix generate_matrix(EnsembleKind kind, std::size_t dim, std::uint64_t seed,
                              std::size_t index) {
    if (dim == 0) throw std::invalid_argument("dimension must be positive");
    SplitMix64 rng(matrix_seed(seed, kind, dim, index));
    switch (kind) {
        case EnsembleKind::Gaussian:
            return gaussian_matrix(rng, dim);
        case EnsembleKind::Hermitian: {
            const ComplexMatrix g = gaussian_matrix(rng, dim);
            return real_part(g).matrix();
        }
        case EnsembleKind::SkewHermitian: {
            const ComplexMatrix g = gaussian_matrix(rng, dim);
            return scale(Complex{0.0, 1.0}, imag_part(g).matrix());
        }
        case EnsembleKind::NilpotentJordan:
            return nilpotent_matrix(rng, dim);
        case EnsembleKind::NormalRandom:
            return normal_matrix(rng, dim);
        case EnsembleKind::Shift:
            return jordan_shift(dim);
    }
    throw std::logic_error("unknown ensemble kind");
}

} // namespace numrad
