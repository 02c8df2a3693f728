#include "numrad/commutator.hpp"

#include "numrad/bounds.hpp"
#include "numrad/hermitian.hpp"
#include "numrad/support.hpp"

#include <cmath>
#include <stdexcept>

namespace numrad {

namespace {

const double kTwoSqrt2 = 2.0 * std::sqrt(2.0);

double sq(double x) { return x * x; }

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
}

// A radicand below -1e-9 contradicts the established lower bounds on w, so
// it is a solver bug rather than rounding.
double clamp_radicand(double v, const char* what) {
    if (v >= 0.0) return v;
    if (v >= -1e-9) return 0.0;
    throw std::runtime_error(std::string("internal consistency failure: negative radicand in ") +
                             what);
}

struct NuParts {
    double value;
    double gap_half;  // |  ||Re A||^2 - ||Im A||^2  | / 2
};

NuParts nu_parts(const ComplexMatrix& a) {
    const HermitianMatrix re = real_part(a);
    const HermitianMatrix im = imag_part(a);
    const double re_n = hermitian_norm(re);
    const double im_n = hermitian_norm(im);
    const double c_re = crawford_hermitian(re);
    const double c_im = crawford_hermitian(im);
    NuParts p;
    p.gap_half = 0.5 * std::abs(sq(re_n) - sq(im_n));
    p.value = 0.5 * (sq(c_re) + sq(c_im)) +
              std::abs(0.5 * (sq(re_n) - sq(im_n)) + 0.5 * (sq(c_im) - sq(c_re)));
    return p;
}

} // namespace

double nu(const ComplexMatrix& a) {
    return nu_parts(a).value;
}

double bound_th2(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& x,
                 const ComplexMatrix& y) {
    require_same_dim(a, b);
    require_same_dim(a, x);
    require_same_dim(a, y);
    const double w = numerical_radius(a).value;
    const double rad = clamp_radicand(sq(w) - nu(a), "bound_th2");
    return kTwoSqrt2 * operator_norm(b) * std::max(operator_norm(x), operator_norm(y)) *
           std::sqrt(rad);
}

double bound_corth2(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b);
    const double w = numerical_radius(a).value;
    const double rad = clamp_radicand(sq(w) - nu(a), "bound_corth2");
    return kTwoSqrt2 * operator_norm(b) * std::sqrt(rad);
}

double bound_fong(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b);
    return kTwoSqrt2 * operator_norm(b) * numerical_radius(a).value;
}

double bound_hk(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b);
    const double w = numerical_radius(a).value;
    const double rad = clamp_radicand(sq(w) - nu_parts(a).gap_half, "bound_hk");
    return kTwoSqrt2 * operator_norm(b) * std::sqrt(rad);
}

namespace {

FourthRootBounds corth3_from(const ComplexMatrix& a, double w, double norm_b) {
    const double w4 = sq(sq(w));
    const HermitianMatrix r = real_part(matmul(a, a));
    const ComplexMatrix r2 = matmul(r.matrix(), r.matrix());
    const double c_r2 = crawford_hermitian(real_part(r2));
    const double re_n = hermitian_norm(real_part(a));
    const double im_n = hermitian_norm(imag_part(a));
    const double gap4 = 0.5 * std::abs(sq(sq(re_n)) - sq(sq(im_n)));

    const double nb = kTwoSqrt2 * norm_b;
    FourthRootBounds out;
    out.first = nb * std::pow(clamp_radicand(w4 - 0.25 * c_r2 - gap4, "bound_corth3 first"), 0.25);
    out.second = nb * std::pow(clamp_radicand(w4 - gap4, "bound_corth3 second"), 0.25);
    return out;
}

} // namespace

FourthRootBounds bound_corth3(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b);
    return corth3_from(a, numerical_radius(a).value, operator_norm(b));
}

CommutatorReport commutator_report(const ComplexMatrix& a, const ComplexMatrix& b,
                                   std::size_t grid) {
    require_same_dim(a, b);
    const ComplexMatrix ab = matmul(a, b);
    const ComplexMatrix ba = matmul(b, a);

    CommutatorReport r;
    r.w_true_plus = numerical_radius(ab + ba, grid).value;
    r.w_true_minus = numerical_radius(ab - ba, grid).value;

    const double w = numerical_radius(a, grid).value;
    const double norm_b = operator_norm(b);
    const NuParts np = nu_parts(a);
    r.nu = np.value;
    const double nb = kTwoSqrt2 * norm_b;
    r.b_corth2 = nb * std::sqrt(clamp_radicand(sq(w) - np.value, "bound_corth2"));
    r.b_th2 = r.b_corth2;  // X = Y = I
    r.b_fong = nb * w;
    r.b_hk = nb * std::sqrt(clamp_radicand(sq(w) - np.gap_half, "bound_hk"));
    const FourthRootBounds fr = corth3_from(a, w, norm_b);
    r.b_corth3_first = fr.first;
    r.b_corth3_second = fr.second;

    const double w_true = std::max(r.w_true_plus, r.w_true_minus);
    r.chain_failures.clear();
    auto check = [&r](double lhs, double rhs, const char* what) {
        if (!chain_leq(lhs, rhs)) r.chain_failures.push_back(what);
    };
    check(w_true, r.b_corth2, "max true radius <= b_corth2");
    check(r.b_corth2, r.b_hk, "b_corth2 <= b_hk");
    check(r.b_hk, r.b_fong, "b_hk <= b_fong");
    check(w_true, r.b_corth3_first, "max true radius <= b_corth3_first");
    check(r.b_corth3_first, r.b_corth3_second, "b_corth3_first <= b_corth3_second");
    check(r.b_corth3_second, r.b_fong, "b_corth3_second <= b_fong");
    r.chain_ok = r.chain_failures.empty();
    return r;
}

} // namespace numrad
