#pragma once

#include "numrad/complex_matrix.hpp"
#include "numrad/rng.hpp"

#include <cstdint>
#include <string>

namespace numrad {

enum class EnsembleKind {
    Gaussian,
    Hermitian,
    SkewHermitian,
    NilpotentJordan,
    NormalRandom,
    Shift,
};

// Canonical names: gaussian, hermitian, skew-hermitian, nilpotent-jordan,
// normal-random, shift.
std::string to_string(EnsembleKind kind);
EnsembleKind parse_ensemble_kind(const std::string& name);

struct EnsembleSpec {
    EnsembleKind kind;
    std::size_t dim_lo;
    std::size_t dim_hi;  // inclusive
    std::size_t count;   // matrices per dimension
    std::uint64_t seed;
};

// Seed for matrix `index` of the (kind, dim) stream. Chained through mix64
// so streams for different cells never overlap.
std::uint64_t matrix_seed(std::uint64_t seed, EnsembleKind kind, std::size_t dim,
                          std::size_t index);

// The matrix at position `index` in the stream. Entry draws are row-major,
// one Box-Muller pair per complex entry; derived kinds (hermitian,
// skew-hermitian, normal-random) consume the draws of their base kind in
// the same order, so every stream is reproducible bit for bit.
ComplexMatrix generate_matrix(EnsembleKind kind, std::size_t dim, std::uint64_t seed,
                              std::size_t index);

// Product of per-pair Givens rotations with random angles and phases plus a
// random diagonal phase; unitary to machine precision (not Haar-distributed,
// which the ensembles here do not need).
ComplexMatrix random_unitary(SplitMix64& rng, std::size_t n);

// The n x n Jordan shift: ones on the superdiagonal.
ComplexMatrix jordan_shift(std::size_t n);

} // namespace numrad
