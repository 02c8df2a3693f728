#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numrad/ensemble.hpp>
#include <numrad/hermitian.hpp>
#include <numrad/matrix_io.hpp>
#include <numrad/rng.hpp>
#include <numrad/support.hpp>

#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

using namespace numrad;

namespace {

ComplexMatrix parse_string(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix(in, "<test>");
}

std::string parse_error_message(const std::string& text) {
    try {
        parse_string(text);
    } catch (const MatrixParseError& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST_CASE("complex literals") {
    CHECK(parse_complex_literal("30+30i") == Complex(30, 30));
    CHECK(parse_complex_literal("3") == Complex(3, 0));
    CHECK(parse_complex_literal("-2.5") == Complex(-2.5, 0));
    CHECK(parse_complex_literal("4i") == Complex(0, 4));
    CHECK(parse_complex_literal("-4i") == Complex(0, -4));
    CHECK(parse_complex_literal("i") == Complex(0, 1));
    CHECK(parse_complex_literal("-i") == Complex(0, -1));
    CHECK(parse_complex_literal("+i") == Complex(0, 1));
    CHECK(parse_complex_literal("3+i") == Complex(3, 1));
    CHECK(parse_complex_literal("3-i") == Complex(3, -1));
    CHECK(parse_complex_literal("1e-3i") == Complex(0, 1e-3));
    CHECK(parse_complex_literal("2.5e+1+3i") == Complex(25, 3));
    CHECK(parse_complex_literal("-1.25e2-0.5e-1i") == Complex(-125, -0.05));

    CHECK_THROWS_AS(parse_complex_literal(""), MatrixParseError);
    CHECK_THROWS_AS(parse_complex_literal("abc"), MatrixParseError);
    CHECK_THROWS_AS(parse_complex_literal("1+2"), MatrixParseError);
    CHECK_THROWS_AS(parse_complex_literal("1+2i+3i"), MatrixParseError);
    CHECK_THROWS_AS(parse_complex_literal("i3"), MatrixParseError);
    // Interior whitespace is insignificant.
    CHECK(parse_complex_literal(" 3 + 4i ") == Complex(3, 4));
}

TEST_CASE("matrix documents parse to exact values") {
    const ComplexMatrix m = parse_string(
        R"({"dim": 2, "entries": [[[1, 0], "30+30i"], [[0, -1], [2.5, 0]]]})");
    CHECK(m.dim() == 2);
    CHECK(m(0, 0) == Complex(1, 0));
    CHECK(m(0, 1) == Complex(30, 30));
    CHECK(m(1, 0) == Complex(0, -1));
    CHECK(m(1, 1) == Complex(2.5, 0));
}

TEST_CASE("malformed documents are rejected with context") {
    SUBCASE("missing keys") {
        CHECK_THROWS_AS(parse_string(R"({"entries": []})"), MatrixParseError);
        CHECK_THROWS_AS(parse_string(R"({"dim": 2})"), MatrixParseError);
    }
    SUBCASE("invalid json") {
        CHECK_THROWS_AS(parse_string("{"), MatrixParseError);
        CHECK_THROWS_AS(parse_string(""), MatrixParseError);
    }
    SUBCASE("shape mismatch") {
        const auto msg =
            parse_error_message(R"({"dim": 2, "entries": [[[1,0],[2,0],[3,0]], [[4,0],[5,0]]]})");
        CHECK(msg.find("row") != std::string::npos);
        CHECK_THROWS_AS(parse_string(R"({"dim": 3, "entries": [[[1,0]]]})"), MatrixParseError);
    }
    SUBCASE("bare numbers are not entries") {
        const auto msg = parse_error_message(R"({"dim": 1, "entries": [[7]]})");
        CHECK(!msg.empty());
    }
    SUBCASE("entry errors carry coordinates") {
        const auto msg =
            parse_error_message(R"({"dim": 2, "entries": [[[1,0],[2,0]], [[3,0], "xyz"]]})");
        CHECK(msg.find("row 1") != std::string::npos);
        CHECK(msg.find("col 1") != std::string::npos);
    }
    SUBCASE("non-finite values are rejected") {
        CHECK_THROWS(parse_string(R"({"dim": 1, "entries": [["1e400"]]})"));
    }
    SUBCASE("dim must be a positive integer") {
        CHECK_THROWS_AS(parse_string(R"({"dim": 0, "entries": []})"), MatrixParseError);
        CHECK_THROWS_AS(parse_string(R"({"dim": -1, "entries": []})"), MatrixParseError);
        CHECK_THROWS_AS(parse_string(R"({"dim": "2", "entries": [[[1,0]]]})"), MatrixParseError);
    }
}

TEST_CASE("serialize then parse is the identity") {
    const ComplexMatrix a = generate_matrix(EnsembleKind::Gaussian, 5, 0x10aded, 7);
    std::istringstream in(matrix_to_string(a));
    const ComplexMatrix back = parse_matrix(in, "<round-trip>");
    REQUIRE(back.dim() == a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) CHECK(back(i, j) == a(i, j));
}

TEST_CASE("ensemble names round-trip") {
    const EnsembleKind kinds[] = {EnsembleKind::Gaussian,        EnsembleKind::Hermitian,
                                  EnsembleKind::SkewHermitian,   EnsembleKind::NilpotentJordan,
                                  EnsembleKind::NormalRandom,    EnsembleKind::Shift};
    for (EnsembleKind kind : kinds) CHECK(parse_ensemble_kind(to_string(kind)) == kind);
    CHECK_THROWS_AS(parse_ensemble_kind("powerlaw"), std::invalid_argument);
}

TEST_CASE("matrix streams are deterministic and decorrelated") {
    SUBCASE("same coordinates reproduce bit for bit") {
        const ComplexMatrix a = generate_matrix(EnsembleKind::Gaussian, 4, 42, 3);
        const ComplexMatrix b = generate_matrix(EnsembleKind::Gaussian, 4, 42, 3);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) CHECK(a(i, j) == b(i, j));
    }
    SUBCASE("different coordinates differ") {
        const ComplexMatrix base = generate_matrix(EnsembleKind::Gaussian, 4, 42, 3);
        CHECK(subtract(base, generate_matrix(EnsembleKind::Gaussian, 4, 42, 4)).max_abs() > 0);
        CHECK(subtract(base, generate_matrix(EnsembleKind::Gaussian, 4, 43, 3)).max_abs() > 0);
    }
    SUBCASE("seed derivation separates cells") {
        std::set<std::uint64_t> seen;
        const EnsembleKind kinds[] = {EnsembleKind::Gaussian, EnsembleKind::Hermitian,
                                      EnsembleKind::SkewHermitian};
        for (EnsembleKind kind : kinds)
            for (std::size_t dim = 2; dim <= 5; ++dim)
                for (std::size_t index = 0; index < 8; ++index)
                    seen.insert(matrix_seed(42, kind, dim, index));
        CHECK(seen.size() == 3 * 4 * 8);
    }
}

TEST_CASE("ensemble structure") {
    SUBCASE("hermitian matrices pass the symmetry test") {
        for (std::size_t dim = 2; dim <= 6; ++dim)
            CHECK(is_hermitian(generate_matrix(EnsembleKind::Hermitian, dim, 7, dim)));
    }
    SUBCASE("skew-hermitian matrices negate under the adjoint") {
        for (std::size_t dim = 2; dim <= 6; ++dim) {
            const ComplexMatrix s = generate_matrix(EnsembleKind::SkewHermitian, dim, 7, dim);
            CHECK(add(adjoint(s), s).max_abs() < 1e-15 * std::max(1.0, s.max_abs()));
        }
    }
    SUBCASE("nilpotent-jordan is strictly upper triangular and nilpotent") {
        const ComplexMatrix n = generate_matrix(EnsembleKind::NilpotentJordan, 4, 9, 2);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j <= i; ++j) CHECK(n(i, j) == Complex(0, 0));
        const ComplexMatrix n4 = matmul(matmul(n, n), matmul(n, n));
        CHECK(n4.max_abs() == 0.0);
    }
    SUBCASE("normal-random commutes with its adjoint") {
        for (std::size_t dim = 2; dim <= 6; ++dim) {
            const ComplexMatrix a = generate_matrix(EnsembleKind::NormalRandom, dim, 11, dim);
            const ComplexMatrix comm =
                subtract(matmul(a, adjoint(a)), matmul(adjoint(a), a));
            CHECK(comm.max_abs() < 1e-12 * std::max(1.0, a.max_abs() * a.max_abs()));
        }
    }
    SUBCASE("shift ignores the index and equals the jordan shift") {
        const ComplexMatrix s = generate_matrix(EnsembleKind::Shift, 5, 3, 9);
        const ComplexMatrix j = jordan_shift(5);
        CHECK(subtract(s, j).max_abs() == 0.0);
    }
}

TEST_CASE("random unitaries are unitary") {
    SplitMix64 rng(0xfeed);
    for (std::size_t n = 2; n <= 7; ++n) {
        const ComplexMatrix u = random_unitary(rng, n);
        const ComplexMatrix gram = matmul(adjoint(u), u);
        CHECK(subtract(gram, ComplexMatrix::identity(n)).max_abs() < 1e-14);
        CHECK(operator_norm(u) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("splitmix stream has documented anchor values") {
    // First outputs for seed 0x0, from the published reference sequence.
    SplitMix64 rng(0);
    CHECK(rng.next() == 0xe220a8397b1dcdafULL);
    CHECK(rng.next() == 0x6e789e6aa1b965f4ULL);
    CHECK(rng.next() == 0x06c45d188009454fULL);

    SplitMix64 unit(0x12345);
    for (int k = 0; k < 1000; ++k) {
        const double d = unit.next_double();
        CHECK(d >= 0.0);
        CHECK(d < 1.0);
        const double o = unit.next_double_open();
        CHECK(o > 0.0);
        CHECK(o <= 1.0);
    }
}

TEST_CASE("gaussian pairs are standard to first moments") {
    SplitMix64 rng(0xabcdef);
    const int n = 20000;
    double sum = 0.0, sum_sq = 0.0;
    for (int k = 0; k < n; ++k) {
        auto [u, v] = rng.next_gaussian_pair();
        sum += u + v;
        sum_sq += u * u + v * v;
    }
    const double mean = sum / (2.0 * n);
    const double var = sum_sq / (2.0 * n) - mean * mean;
    CHECK(std::abs(mean) < 0.02);
    CHECK(std::abs(var - 1.0) < 0.05);
}
