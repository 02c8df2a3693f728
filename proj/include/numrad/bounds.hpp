#pragma once

#include "numrad/complex_matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace numrad {

// Lower bounds on powers of the numerical radius, plus the ingredients they
// are built from. Squared and fourth-power bounds stay in their natural
// power; callers take roots for presentation only.
struct BoundsReport {
    double norm;          // ||A||
    double w;             // numerical radius
    double re_norm;       // ||Re A||
    double im_norm;       // ||Im A||
    double c_re;          // Crawford number of Re A
    double c_im;          // Crawford number of Im A
    double classical_lo;  // ||A|| / 2
    double b_gap;         // lower bound on w
    double kittaneh_sq;   // lower bounds on w^2 ...
    double b_sq_gap;
    double b_bp;
    double b_crawford;
    double b4_first;      // lower bounds on w^4 ...
    double b4_second;
    double b4_bag5;
    double b4_bhunia;
    bool chain_ok;
    std::vector<std::string> chain_failures;  // empty when chain_ok
};

// ||A||/2 + |  ||Re A|| - ||Im A||  | / 2, a lower bound on w.
double bound_re_im_gap(const ComplexMatrix& a);

// ||A*A + AA*|| / 4, a lower bound on w^2.
double kittaneh_sq(const ComplexMatrix& a);

// kittaneh_sq + |  ||Re A||^2 - ||Im A||^2  | / 2.
double bound_sq_gap(const ComplexMatrix& a);

// kittaneh_sq + (c_re^2 + c_im^2)/2
//   + | (||Re A||^2 - ||Im A||^2)/2 + (c_im^2 - c_re^2)/2 |.
double bound_crawford(const ComplexMatrix& a);

// kittaneh_sq + (c_re^2 + c_im^2)/2.
double bound_bp(const ComplexMatrix& a);

// Lower bounds on w^4. With S = A*A + AA*, R = Re(A^2) and
// gap = | ||Re A||^4 - ||Im A||^4 | / 2:
//   first   = ||S^2 + 4 R^2|| / 16 + gap
//   second  = ||S||^2 / 16 + c(R^2)/4 + gap
//   bag5    = ||S||^2 / 16 + c(R^2)/4
//   bhunia  = ||S^2 + 4 R^2|| / 16
struct FourthPowerBounds {
    double first;
    double second;
    double bag5;
    double bhunia;
};
FourthPowerBounds bound_fourth_power(const ComplexMatrix& a);

// Evaluates every bound plus the ordering chain between them. chain_ok
// asserts each inequality with slack lhs <= rhs + 1e-9 * max(1, |rhs|).
BoundsReport bounds_report(const ComplexMatrix& a, std::size_t grid = 720);

// The shared slack rule used by every chain check.
inline bool chain_leq(double lhs, double rhs) {
    return lhs <= rhs + 1e-9 * std::max(1.0, rhs < 0 ? -rhs : rhs);
}

} // namespace numrad
