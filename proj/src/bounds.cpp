#include "numrad/bounds.hpp"

#include "numrad/hermitian.hpp"
#include "numrad/support.hpp"

#include <cmath>

namespace numrad {

namespace {

// Ingredients shared by the individual bounds. Everything here is cheap next
// to the numerical radius itself.
struct Ingredients {
    double norm;
    double re_norm, im_norm;
    double c_re, c_im;
    double s_norm;       // ||A*A + AA*||
    double t_norm;       // ||(A*A + AA*)^2 + 4 (Re A^2)^2||
    double c_r2;         // c((Re A^2)^2) = smallest eigenvalue of that PSD matrix
};

HermitianMatrix hermitianize(const ComplexMatrix& m) {
    // products of the form A*A + AA* are Hermitian up to rounding
    return real_part(m);
}

Ingredients ingredients(const ComplexMatrix& a) {
    Ingredients g;
    g.norm = operator_norm(a);
    const HermitianMatrix re = real_part(a);
    const HermitianMatrix im = imag_part(a);
    g.re_norm = hermitian_norm(re);
    g.im_norm = hermitian_norm(im);
    g.c_re = crawford_hermitian(re);
    g.c_im = crawford_hermitian(im);

    const ComplexMatrix s = matmul(adjoint(a), a) + matmul(a, adjoint(a));
    const HermitianMatrix sh = hermitianize(s);
    g.s_norm = hermitian_norm(sh);

    const HermitianMatrix r = real_part(matmul(a, a));
    const ComplexMatrix r2 = matmul(r.matrix(), r.matrix());
    const ComplexMatrix t = matmul(sh.matrix(), sh.matrix()) + scale(Complex{4.0, 0.0}, r2);
    g.t_norm = hermitian_norm(hermitianize(t));
    g.c_r2 = crawford_hermitian(hermitianize(r2));
    return g;
}

double sq(double x) { return x * x; }

double gap4(const Ingredients& g) {
    return 0.5 * std::abs(sq(sq(g.re_norm)) - sq(sq(g.im_norm)));
}

} // namespace

double bound_re_im_gap(const ComplexMatrix& a) {
    const double re = hermitian_norm(real_part(a));
    const double im = hermitian_norm(imag_part(a));
    return 0.5 * operator_norm(a) + 0.5 * std::abs(re - im);
}

double kittaneh_sq(const ComplexMatrix& a) {
    const ComplexMatrix s = matmul(adjoint(a), a) + matmul(a, adjoint(a));
    return 0.25 * hermitian_norm(real_part(s));
}

double bound_sq_gap(const ComplexMatrix& a) {
    const double re = hermitian_norm(real_part(a));
    const double im = hermitian_norm(imag_part(a));
    return kittaneh_sq(a) + 0.5 * std::abs(sq(re) - sq(im));
}

double bound_crawford(const ComplexMatrix& a) {
    const Ingredients g = ingredients(a);
    return 0.25 * g.s_norm + 0.5 * (sq(g.c_re) + sq(g.c_im)) +
           std::abs(0.5 * (sq(g.re_norm) - sq(g.im_norm)) + 0.5 * (sq(g.c_im) - sq(g.c_re)));
}

double bound_bp(const ComplexMatrix& a) {
    const Ingredients g = ingredients(a);
    return 0.25 * g.s_norm + 0.5 * (sq(g.c_re) + sq(g.c_im));
}

FourthPowerBounds bound_fourth_power(const ComplexMatrix& a) {
    const Ingredients g = ingredients(a);
    FourthPowerBounds b;
    b.bhunia = g.t_norm / 16.0;
    b.bag5 = sq(g.s_norm) / 16.0 + 0.25 * g.c_r2;
    b.first = b.bhunia + gap4(g);
    b.second = b.bag5 + gap4(g);
    return b;
}

BoundsReport bounds_report(const ComplexMatrix& a, std::size_t grid) {
    const Ingredients g = ingredients(a);
    const RadiusResult rad = numerical_radius(a, grid);

    BoundsReport r;
    r.norm = g.norm;
    r.w = rad.value;
    r.re_norm = g.re_norm;
    r.im_norm = g.im_norm;
    r.c_re = g.c_re;
    r.c_im = g.c_im;
    r.classical_lo = 0.5 * g.norm;
    r.b_gap = 0.5 * g.norm + 0.5 * std::abs(g.re_norm - g.im_norm);
    r.kittaneh_sq = 0.25 * g.s_norm;
    r.b_sq_gap = r.kittaneh_sq + 0.5 * std::abs(sq(g.re_norm) - sq(g.im_norm));
    r.b_bp = r.kittaneh_sq + 0.5 * (sq(g.c_re) + sq(g.c_im));
    r.b_crawford = r.b_bp + std::abs(0.5 * (sq(g.re_norm) - sq(g.im_norm)) +
                                     0.5 * (sq(g.c_im) - sq(g.c_re)));
    r.b4_bhunia = g.t_norm / 16.0;
    r.b4_bag5 = sq(g.s_norm) / 16.0 + 0.25 * g.c_r2;
    r.b4_first = r.b4_bhunia + gap4(g);
    r.b4_second = r.b4_bag5 + gap4(g);

    const double w2 = sq(r.w);
    const double w4 = sq(w2);
    r.chain_failures.clear();
    auto check = [&r](double lhs, double rhs, const char* what) {
        if (!chain_leq(lhs, rhs)) r.chain_failures.push_back(what);
    };
    check(r.classical_lo, r.b_gap, "classical_lo <= b_gap");
    check(r.b_gap, r.w, "b_gap <= w");
    check(r.w, r.norm, "w <= norm");
    check(r.kittaneh_sq, r.b_sq_gap, "kittaneh_sq <= b_sq_gap");
    check(r.b_sq_gap, w2, "b_sq_gap <= w^2");
    check(r.kittaneh_sq, r.b_bp, "kittaneh_sq <= b_bp");
    check(r.b_bp, r.b_crawford, "b_bp <= b_crawford");
    check(r.b_crawford, w2, "b_crawford <= w^2");
    check(r.b4_bag5, r.b4_bhunia, "bag5 <= bhunia");
    check(r.b4_bhunia, r.b4_first, "bhunia <= b4_first");
    check(r.b4_first, w4, "b4_first <= w^4");
    check(r.b4_bag5, r.b4_second, "bag5 <= b4_second");
    check(r.b4_second, r.b4_first, "b4_second <= b4_first");
    check(r.b4_second, w4, "b4_second <= w^4");
    r.chain_ok = r.chain_failures.empty();
    return r;
}

} // namespace numrad
