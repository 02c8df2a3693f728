#pragma once

#include "numrad/complex_matrix.hpp"

#include <string>
#include <vector>

namespace numrad {

// Upper bounds for w(AXB +/- BYA) and the classical comparison bounds. One
// shared bound covers both signs; the two true radii are reported separately.
struct CommutatorReport {
    double nu;              // Crawford/gap compound of A (lower-bound core)
    double w_true_plus;     // w(AB + BA)
    double w_true_minus;    // w(AB - BA)
    double b_th2;           // general bound at X = Y = I
    double b_corth2;        // 2 sqrt2 ||B|| sqrt(w^2(A) - nu(A))
    double b_corth3_first;  // fourth-root refinements
    double b_corth3_second;
    double b_fong;          // 2 sqrt2 ||B|| w(A)
    double b_hk;            // 2 sqrt2 ||B|| sqrt(w^2(A) - gap/2)
    bool chain_ok;
    std::vector<std::string> chain_failures;
};

// nu = (c_re^2 + c_im^2)/2 + | (||Re A||^2 - ||Im A||^2)/2 + (c_im^2 - c_re^2)/2 |.
// Always <= w^2(A).
double nu(const ComplexMatrix& a);

// 2 sqrt2 ||B|| max(||X||, ||Y||) sqrt(w^2(A) - nu(A)). All four matrices
// must share one dimension.
double bound_th2(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& x,
                 const ComplexMatrix& y);

// The X = Y = I specialization of bound_th2.
double bound_corth2(const ComplexMatrix& a, const ComplexMatrix& b);

double bound_fong(const ComplexMatrix& a, const ComplexMatrix& b);
double bound_hk(const ComplexMatrix& a, const ComplexMatrix& b);

// first  = 2 sqrt2 ||B|| (w^4 - c((Re A^2)^2)/4 - |  ||Re A||^4 - ||Im A||^4 |/2)^{1/4}
// second = 2 sqrt2 ||B|| (w^4 - |  ||Re A||^4 - ||Im A||^4  |/2)^{1/4}
struct FourthRootBounds {
    double first;
    double second;
};
FourthRootBounds bound_corth3(const ComplexMatrix& a, const ComplexMatrix& b);

CommutatorReport commutator_report(const ComplexMatrix& a, const ComplexMatrix& b,
                                   std::size_t grid = 720);

} // namespace numrad
