#include "numrad/fuzz.hpp"

#include "numrad/bounds.hpp"
#include "numrad/commutator.hpp"
#include "numrad/hermitian.hpp"
#include "numrad/support.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <mutex>
#include <numbers>
#include <thread>

namespace numrad {

namespace {

constexpr std::size_t kPairChecks = 8;      // consecutive (2k, 2k+1) pairs
constexpr std::size_t kQuadChecks = 4;      // AXB +/- BYA quadruples
constexpr std::size_t kQuadMaxDim = 6;
constexpr std::size_t kAdjointStride = 25;  // w(A*) = w(A) spot checks
constexpr std::size_t kRotationStride = 50; // w(e^{i phi} A) = w(A)
constexpr std::size_t kCartesianStride = 10;

struct Cell {
    EnsembleKind kind;
    std::size_t dim;
};

struct CellOutcome {
    std::size_t checks = 0;
    std::vector<FuzzViolation> violations;
};

bool close_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

void run_cell(const FuzzConfig& cfg, Cell cell, CellOutcome& out) {
    const EnsembleKind kind = cell.kind;
    const std::size_t dim = cell.dim;

    auto gen = [&](std::size_t index) { return generate_matrix(kind, dim, cfg.seed, index); };
    auto fail = [&](std::size_t index, std::string check, std::vector<ComplexMatrix> mats) {
        out.violations.push_back({kind, dim, index, std::move(check), std::move(mats)});
    };

    const bool symmetric_kind =
        kind == EnsembleKind::Hermitian || kind == EnsembleKind::SkewHermitian;

    for (std::size_t idx = 0; idx < cfg.count; ++idx) {
        const ComplexMatrix a = gen(idx);
        const BoundsReport br = bounds_report(a, cfg.grid);
        ++out.checks;
        if (!br.chain_ok) {
            std::string what = "bounds chain:";
            for (const std::string& f : br.chain_failures) what += " [" + f + "]";
            fail(idx, what, {a});
        }

        if (symmetric_kind) {
            ++out.checks;
            if (!close_rel(br.b_gap, br.w, 1e-9))
                fail(idx, "b_gap = w on (skew-)Hermitian input", {a});
        }

        if (idx % kCartesianStride == 0) {
            const ComplexMatrix rebuilt =
                real_part(a).matrix() + scale(Complex{0.0, 1.0}, imag_part(a).matrix());
            double diff = 0.0;
            for (std::size_t k = 0; k < a.entries().size(); ++k)
                diff = std::max(diff, std::abs(rebuilt.entries()[k] - a.entries()[k]));
            ++out.checks;
            if (diff > 1e-12 * std::max(1.0, a.max_abs()))
                fail(idx, "Cartesian decomposition identity", {a});
        }

        if (idx % kAdjointStride == 0) {
            const double w_adj = numerical_radius(adjoint(a), cfg.grid).value;
            ++out.checks;
            if (!close_rel(w_adj, br.w, 1e-9)) fail(idx, "w(A*) = w(A)", {a});
        }

        if (idx % kRotationStride == 0) {
            SplitMix64 rng(matrix_seed(cfg.seed ^ 0x726f746174ULL, kind, dim, idx));
            const double phi = 2.0 * std::numbers::pi * rng.next_double();
            const ComplexMatrix rot = scale(Complex{std::cos(phi), std::sin(phi)}, a);
            const double w_rot = numerical_radius(rot, cfg.grid).value;
            ++out.checks;
            if (!close_rel(w_rot, br.w, 1e-7)) fail(idx, "w(e^{i phi} A) = w(A)", {a});
        }
    }

    for (std::size_t k = 0; k < kPairChecks && 2 * k + 1 < cfg.count; ++k) {
        const std::size_t idx = 2 * k;
        const ComplexMatrix a = gen(idx);
        const ComplexMatrix b = gen(idx + 1);

        const CommutatorReport cr = commutator_report(a, b, cfg.grid);
        ++out.checks;
        if (!cr.chain_ok) {
            std::string what = "commutator chain:";
            for (const std::string& f : cr.chain_failures) what += " [" + f + "]";
            fail(idx, what, {a, b});
        }

        const double na = operator_norm(a), nb = operator_norm(b);
        ++out.checks;
        if (!chain_leq(operator_norm(a + b), na + nb)) fail(idx, "triangle inequality", {a, b});
        ++out.checks;
        if (!chain_leq(operator_norm(matmul(a, b)), na * nb))
            fail(idx, "submultiplicativity", {a, b});
    }

    if (dim <= kQuadMaxDim) {
        for (std::size_t q = 0; q < kQuadChecks && 2 * q + 1 < cfg.count; ++q) {
            const ComplexMatrix a = gen(2 * q);
            const ComplexMatrix b = gen(2 * q + 1);
            // fresh X, Y beyond the main stream indices
            const ComplexMatrix x = gen(cfg.count + 2 * q);
            const ComplexMatrix y = gen(cfg.count + 2 * q + 1);

            const double bd = bound_th2(a, b, x, y);
            const ComplexMatrix axb = matmul(matmul(a, x), b);
            const ComplexMatrix bya = matmul(matmul(b, y), a);
            const double w_plus = numerical_radius(axb + bya, cfg.grid).value;
            const double w_minus = numerical_radius(axb - bya, cfg.grid).value;
            ++out.checks;
            if (w_plus > bd + 1e-8 * std::max(1.0, bd))
                fail(2 * q, "w(AXB + BYA) <= bound_th2", {a, b, x, y});
            ++out.checks;
            if (w_minus > bd + 1e-8 * std::max(1.0, bd))
                fail(2 * q, "w(AXB - BYA) <= bound_th2", {a, b, x, y});
        }
    }
}

} // namespace

FuzzResult run_fuzz(const FuzzConfig& config) {
    const auto t0 = std::chrono::steady_clock::now();

    FuzzConfig cfg = config;
    if (cfg.kinds.empty()) {
        cfg.kinds = {EnsembleKind::Gaussian, EnsembleKind::Hermitian, EnsembleKind::SkewHermitian,
                     EnsembleKind::NilpotentJordan, EnsembleKind::NormalRandom};
    }
    if (cfg.dim_lo < 1 || cfg.dim_hi < cfg.dim_lo)
        throw std::invalid_argument("invalid dimension range");
    if (cfg.count == 0) throw std::invalid_argument("count must be positive");

    std::vector<Cell> cells;
    for (EnsembleKind kind : cfg.kinds)
        for (std::size_t d = cfg.dim_lo; d <= cfg.dim_hi; ++d) cells.push_back({kind, d});

    std::vector<CellOutcome> outcomes(cells.size());
    unsigned threads = cfg.threads ? cfg.threads : std::thread::hardware_concurrency();
    threads = std::max(1u, std::min<unsigned>(threads, cells.size()));

    if (threads == 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) run_cell(cfg, cells[i], outcomes[i]);
    } else {
        std::mutex m;
        std::size_t next = 0;
        auto worker = [&] {
            for (;;) {
                std::size_t i;
                {
                    std::lock_guard<std::mutex> lock(m);
                    if (next == cells.size()) return;
                    i = next++;
                }
                run_cell(cfg, cells[i], outcomes[i]);
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    FuzzResult result;
    result.total_checks = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        result.cells.push_back({cells[i].kind, cells[i].dim, outcomes[i].checks});
        result.total_checks += outcomes[i].checks;
        for (FuzzViolation& v : outcomes[i].violations)
            result.violations.push_back(std::move(v));
    }
    const auto t1 = std::chrono::steady_clock::now();
    result.elapsed_seconds = std::chrono::duration<double>(t1 - t0).count();
    return result;
}

} // namespace numrad
