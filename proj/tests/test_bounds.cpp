#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numrad/bounds.hpp>
#include <numrad/ensemble.hpp>
#include <numrad/hermitian.hpp>
#include <numrad/support.hpp>

#include <cmath>
#include <vector>

using namespace numrad;

namespace {

ComplexMatrix diag(const std::vector<Complex>& d) {
    ComplexMatrix m(d.size());
    for (std::size_t k = 0; k < d.size(); ++k) m.set(k, k, d[k]);
    return m;
}

} // namespace

TEST_CASE("bounds for the off-axis diagonal") {
    const ComplexMatrix a = diag({Complex(20, 0), Complex(30, 30)});
    const auto r = bounds_report(a);
    const double rt2 = std::sqrt(2.0);
    CHECK(r.norm == doctest::Approx(30.0 * rt2).epsilon(1e-12));
    CHECK(r.w == doctest::Approx(30.0 * rt2).epsilon(1e-11));
    CHECK(r.re_norm == doctest::Approx(30.0).epsilon(1e-12));
    CHECK(r.im_norm == doctest::Approx(30.0).epsilon(1e-12));
    CHECK(r.c_re == doctest::Approx(20.0).epsilon(1e-12));
    CHECK(r.c_im == doctest::Approx(0.0));
    CHECK(r.classical_lo == doctest::Approx(15.0 * rt2).epsilon(1e-12));
    CHECK(r.b_gap == doctest::Approx(15.0 * rt2).epsilon(1e-12));
    CHECK(r.kittaneh_sq == doctest::Approx(900.0).epsilon(1e-12));
    CHECK(r.b_sq_gap == doctest::Approx(900.0).epsilon(1e-12));
    CHECK(r.b_bp == doctest::Approx(1100.0).epsilon(1e-12));
    CHECK(r.b_crawford == doctest::Approx(1300.0).epsilon(1e-12));
    CHECK(r.b4_first == doctest::Approx(810000.0).epsilon(1e-12));
    CHECK(r.b4_second == doctest::Approx(810000.0).epsilon(1e-12));
    CHECK(r.b4_bag5 == doctest::Approx(810000.0).epsilon(1e-12));
    CHECK(r.b4_bhunia == doctest::Approx(810000.0).epsilon(1e-12));
    CHECK(r.chain_ok);
    CHECK(r.chain_failures.empty());
}

TEST_CASE("bounds for the three by three shift are sharp") {
    const auto r = bounds_report(jordan_shift(3));
    const double w = 1.0 / std::sqrt(2.0);
    CHECK(r.norm == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.w == doctest::Approx(w).epsilon(1e-11));
    CHECK(r.b_gap == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r.kittaneh_sq == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r.b_sq_gap == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r.b_bp == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(r.b_crawford == doctest::Approx(0.5).epsilon(1e-9));
    // Every fourth-power bound attains w^4 here.
    CHECK(r.b4_first == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(r.b4_second == doctest::Approx(0.25).epsilon(1e-9));
    CHECK(r.b4_bag5 == doctest::Approx(0.25).epsilon(1e-9));
    CHECK(r.b4_bhunia == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(r.chain_ok);
}

TEST_CASE("bounds for the two by two shift") {
    const auto r = bounds_report(jordan_shift(2));
    CHECK(r.w == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r.b_gap == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r.kittaneh_sq == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(r.b_sq_gap == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(r.b_bp == doctest::Approx(0.25).epsilon(1e-9));
    CHECK(r.b_crawford == doctest::Approx(0.25).epsilon(1e-9));
    CHECK(r.b4_first == doctest::Approx(0.0625).epsilon(1e-12));
    CHECK(r.b4_bhunia == doctest::Approx(0.0625).epsilon(1e-12));
    CHECK(r.chain_ok);
}

TEST_CASE("bounds for a positive hermitian diagonal") {
    const ComplexMatrix a = diag({Complex(1, 0), Complex(2, 0)});
    const auto r = bounds_report(a);
    CHECK(r.w == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r.b_gap == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r.kittaneh_sq == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r.b_sq_gap == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(r.c_re == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.c_im == doctest::Approx(0.0));
    CHECK(r.b_bp == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(r.b_crawford == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(r.b4_bhunia == doctest::Approx(8.0).epsilon(1e-12));
    CHECK(r.b4_first == doctest::Approx(16.0).epsilon(1e-12));
    CHECK(r.b4_second == doctest::Approx(12.25).epsilon(1e-12));
    CHECK(r.b4_bag5 == doctest::Approx(4.25).epsilon(1e-12));
    CHECK(r.chain_ok);
}

TEST_CASE("bounds for the zero matrix") {
    const auto r = bounds_report(ComplexMatrix(3));
    CHECK(r.norm == 0.0);
    CHECK(r.w == 0.0);
    CHECK(r.b_gap == 0.0);
    CHECK(r.kittaneh_sq == 0.0);
    CHECK(r.b_sq_gap == 0.0);
    CHECK(r.b_bp == 0.0);
    CHECK(r.b_crawford == 0.0);
    CHECK(r.b4_first == 0.0);
    CHECK(r.b4_second == 0.0);
    CHECK(r.b4_bag5 == 0.0);
    CHECK(r.b4_bhunia == 0.0);
    CHECK(r.chain_ok);
}

TEST_CASE("individual bound functions match the report") {
    const std::uint64_t seed = 0xb0b0b0b0;
    for (std::size_t dim = 2; dim <= 5; ++dim) {
        const ComplexMatrix a = generate_matrix(EnsembleKind::Gaussian, dim, seed, dim);
        const auto r = bounds_report(a);
        CHECK(bound_re_im_gap(a) == doctest::Approx(r.b_gap).epsilon(1e-12));
        CHECK(kittaneh_sq(a) == doctest::Approx(r.kittaneh_sq).epsilon(1e-12));
        CHECK(bound_sq_gap(a) == doctest::Approx(r.b_sq_gap).epsilon(1e-12));
        CHECK(bound_bp(a) == doctest::Approx(r.b_bp).epsilon(1e-12));
        CHECK(bound_crawford(a) == doctest::Approx(r.b_crawford).epsilon(1e-12));
        const auto b4 = bound_fourth_power(a);
        CHECK(b4.first == doctest::Approx(r.b4_first).epsilon(1e-12));
        CHECK(b4.second == doctest::Approx(r.b4_second).epsilon(1e-12));
        CHECK(b4.bag5 == doctest::Approx(r.b4_bag5).epsilon(1e-12));
        CHECK(b4.bhunia == doctest::Approx(r.b4_bhunia).epsilon(1e-12));
    }
}

TEST_CASE("ordering chain holds across ensembles") {
    const std::uint64_t seed = 0xc4a1;
    const EnsembleKind kinds[] = {EnsembleKind::Gaussian, EnsembleKind::Hermitian,
                                  EnsembleKind::NilpotentJordan, EnsembleKind::NormalRandom};
    for (EnsembleKind kind : kinds) {
        for (std::size_t dim = 2; dim <= 6; dim += 2) {
            for (std::size_t index = 0; index < 3; ++index) {
                const ComplexMatrix a = generate_matrix(kind, dim, seed, index);
                const auto r = bounds_report(a);
                CAPTURE(to_string(kind));
                CAPTURE(dim);
                CAPTURE(index);
                CHECK(r.chain_ok);
                CHECK(r.chain_failures.empty());
                // Re-assert the spine of the chain from the raw fields.
                const double w2 = r.w * r.w;
                const double w4 = w2 * w2;
                CHECK(chain_leq(r.classical_lo, r.b_gap));
                CHECK(chain_leq(r.b_gap, r.w));
                CHECK(chain_leq(r.kittaneh_sq, r.b_sq_gap));
                CHECK(chain_leq(r.b_sq_gap, r.b_crawford));
                CHECK(chain_leq(r.b_bp, r.b_crawford));
                CHECK(chain_leq(r.b_crawford, w2));
                CHECK(chain_leq(r.b4_bag5, r.b4_second));
                CHECK(chain_leq(r.b4_bag5, r.b4_bhunia));
                CHECK(chain_leq(r.b4_bhunia, r.b4_first));
                CHECK(chain_leq(r.b4_second, r.b4_first));
                CHECK(chain_leq(r.b4_first, w4));
            }
        }
    }
}

TEST_CASE("bounds scale covariantly in their natural power") {
    const ComplexMatrix a = generate_matrix(EnsembleKind::Gaussian, 4, 0x5ca1e, 0);
    const double t = 1.75;
    const ComplexMatrix b = scale(Complex(t, 0), a);
    const auto ra = bounds_report(a);
    const auto rb = bounds_report(b);
    CHECK(rb.b_gap == doctest::Approx(t * ra.b_gap).epsilon(1e-10));
    CHECK(rb.kittaneh_sq == doctest::Approx(t * t * ra.kittaneh_sq).epsilon(1e-10));
    CHECK(rb.b_sq_gap == doctest::Approx(t * t * ra.b_sq_gap).epsilon(1e-10));
    CHECK(rb.b_bp == doctest::Approx(t * t * ra.b_bp).epsilon(1e-9));
    CHECK(rb.b_crawford == doctest::Approx(t * t * ra.b_crawford).epsilon(1e-9));
    const double t4 = t * t * t * t;
    CHECK(rb.b4_first == doctest::Approx(t4 * ra.b4_first).epsilon(1e-9));
    CHECK(rb.b4_second == doctest::Approx(t4 * ra.b4_second).epsilon(1e-9));
    CHECK(rb.b4_bag5 == doctest::Approx(t4 * ra.b4_bag5).epsilon(1e-9));
    CHECK(rb.b4_bhunia == doctest::Approx(t4 * ra.b4_bhunia).epsilon(1e-9));
}

TEST_CASE("gap bound is exact for hermitian and skew-hermitian matrices") {
    for (std::size_t index = 0; index < 4; ++index) {
        const ComplexMatrix h =
            generate_matrix(EnsembleKind::Hermitian, 3 + index, 0x4e12, index);
        CHECK(bound_re_im_gap(h) == doctest::Approx(operator_norm(h)).epsilon(1e-10));
        const ComplexMatrix s =
            generate_matrix(EnsembleKind::SkewHermitian, 3 + index, 0x4e13, index);
        CHECK(bound_re_im_gap(s) == doctest::Approx(operator_norm(s)).epsilon(1e-10));
    }
}
