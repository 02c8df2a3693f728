#pragma once

#include "numrad/complex_matrix.hpp"
#include "numrad/ensemble.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace numrad {

struct FuzzConfig {
    std::vector<EnsembleKind> kinds;  // empty = all random ensembles
    std::size_t dim_lo = 2;
    std::size_t dim_hi = 8;
    std::size_t count = 200;
    std::uint64_t seed = 42;
    double tol = 1e-8;
    std::size_t grid = 720;
    unsigned threads = 0;  // 0 = hardware concurrency
};

struct FuzzViolation {
    EnsembleKind kind;
    std::size_t dim;
    std::size_t index;  // index of the first matrix involved
    std::string check;
    std::vector<ComplexMatrix> matrices;
};

struct FuzzCellStats {
    EnsembleKind kind;
    std::size_t dim;
    std::size_t checks;
};

struct FuzzResult {
    std::vector<FuzzCellStats> cells;       // ordered by (kind, dim)
    std::vector<FuzzViolation> violations;  // ordered by (kind, dim, index)
    std::size_t total_checks;
    double elapsed_seconds;
};

// Runs the whole invariant suite over the requested ensembles: the full
// lower-bound chain per matrix, commutator soundness and bound orderings on
// consecutive pairs, the general AXB +/- BYA bound on fresh quadruples
// (dims <= 6), plus adjoint/rotation invariance and Cartesian identity spot
// checks. Matrices are derived from (seed, kind, dim, index) only, so a run
// is reproducible regardless of threading.
FuzzResult run_fuzz(const FuzzConfig& config);

} // namespace numrad
