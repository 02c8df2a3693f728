#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numrad/fuzz.hpp>

#include <stdexcept>

using namespace numrad;

TEST_CASE("small fuzz run is clean and counts deterministically") {
    FuzzConfig cfg;
    cfg.kinds = {EnsembleKind::Gaussian, EnsembleKind::NilpotentJordan};
    cfg.dim_lo = 2;
    cfg.dim_hi = 4;
    cfg.count = 10;
    cfg.seed = 7;
    cfg.threads = 1;

    const FuzzResult r1 = run_fuzz(cfg);
    CHECK(r1.violations.empty());
    REQUIRE(r1.cells.size() == 2 * 3);
    CHECK(r1.total_checks > 0);

    // Cells arrive ordered by (kind, dim) regardless of scheduling.
    for (std::size_t k = 1; k < r1.cells.size(); ++k) {
        const auto& prev = r1.cells[k - 1];
        const auto& cur = r1.cells[k];
        const bool ordered = prev.kind < cur.kind ||
                             (prev.kind == cur.kind && prev.dim < cur.dim);
        CHECK(ordered);
    }
    for (const auto& cell : r1.cells) CHECK(cell.checks > 0);

    const FuzzResult r2 = run_fuzz(cfg);
    CHECK(r2.total_checks == r1.total_checks);
    REQUIRE(r2.cells.size() == r1.cells.size());
    for (std::size_t k = 0; k < r1.cells.size(); ++k) {
        CHECK(r2.cells[k].kind == r1.cells[k].kind);
        CHECK(r2.cells[k].dim == r1.cells[k].dim);
        CHECK(r2.cells[k].checks == r1.cells[k].checks);
    }
}

TEST_CASE("thread count does not change the outcome") {
    FuzzConfig cfg;
    cfg.kinds = {EnsembleKind::Gaussian};
    cfg.dim_lo = 2;
    cfg.dim_hi = 5;
    cfg.count = 6;
    cfg.seed = 11;

    FuzzConfig serial = cfg;
    serial.threads = 1;
    FuzzConfig parallel = cfg;
    parallel.threads = 4;

    const FuzzResult a = run_fuzz(serial);
    const FuzzResult b = run_fuzz(parallel);
    CHECK(a.violations.empty());
    CHECK(b.violations.empty());
    CHECK(a.total_checks == b.total_checks);
    REQUIRE(a.cells.size() == b.cells.size());
    for (std::size_t k = 0; k < a.cells.size(); ++k)
        CHECK(a.cells[k].checks == b.cells[k].checks);
}

TEST_CASE("default kind list covers the five random ensembles") {
    FuzzConfig cfg;
    cfg.dim_lo = 2;
    cfg.dim_hi = 2;
    cfg.count = 2;
    cfg.seed = 3;
    cfg.threads = 1;
    const FuzzResult r = run_fuzz(cfg);
    CHECK(r.cells.size() == 5);
    CHECK(r.violations.empty());
}

TEST_CASE("invalid configurations are rejected") {
    FuzzConfig cfg;
    cfg.dim_lo = 5;
    cfg.dim_hi = 3;
    CHECK_THROWS_AS(run_fuzz(cfg), std::invalid_argument);

    FuzzConfig bad_count;
    bad_count.count = 0;
    CHECK_THROWS_AS(run_fuzz(bad_count), std::invalid_argument);

    FuzzConfig bad_dim;
    bad_dim.dim_lo = 0;
    bad_dim.dim_hi = 3;
    CHECK_THROWS_AS(run_fuzz(bad_dim), std::invalid_argument);
}
