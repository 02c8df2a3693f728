#pragma once

#include "numrad/complex_matrix.hpp"
#include "numrad/support.hpp"

#include <optional>
#include <vector>

namespace numrad {

// Outcome of one equality-case check. The case_* flags report whether the
// defining identity holds within tol; the consequence flags report the
// derived identities (vacuously true when the case itself is absent).
struct DiagnosticsReport {
    bool case_half_norm;    // w ~ ||A|| / 2
    bool case_kittaneh;     // w^2 ~ ||A*A + AA*|| / 4
    bool theta_profile_ok;  // the "for all theta" identities on the grid
    bool norms_match;       // ||Re A|| = ||Im A|| = the case's target value
    bool norm_identity_ok;  // ||A||^2 = ||A*A + AA*|| = ||A*A - AA*||
    bool witnesses_ok;      // both Crawford witnesses found (kittaneh case)
    DiskResult disk;
    std::optional<std::vector<Complex>> witness_re;  // unit x, |<Re(A)x,x>| <= tol
    std::optional<std::vector<Complex>> witness_im;  // unit x, |<Im(A)x,x>| <= tol
    double tol;
};

// Checks the w = ||A||/2 equality case and its consequences: equal part
// norms, the constant theta profile with additive norms, and
// ||A||^2 = ||A*A + AA*|| = ||A*A - AA*||.
DiagnosticsReport check_half_norm_equality(const ComplexMatrix& a, double tol);

// Checks the w^2 = ||A*A + AA*||/4 equality case and its consequences:
// vanishing Crawford numbers of both parts (with witness vectors), equal
// part norms, the constant squared profile, and the origin-centered disk.
DiagnosticsReport check_kittaneh_equality(const ComplexMatrix& a, double tol);

struct NormAdditivityResult {
    bool additive;    // ||A + B|| = ||A|| + ||B|| within tol
    bool membership;  // ||A|| ||B|| lies in the closed range of A*B within tol
    bool agree;       // additive == membership
};

// The norm-additivity criterion: ||A+B|| = ||A|| + ||B|| holds exactly when
// ||A|| ||B|| belongs to the closure of the numerical range of A*B.
NormAdditivityResult norm_additivity_check(const ComplexMatrix& a, const ComplexMatrix& b,
                                           double tol);

struct CircularDiskReport {
    bool disk;
    double radius;
    bool matches_half_norm;  // disk and radius = ||A|| / 2
    bool matches_kittaneh;   // disk and radius = sqrt(||A*A + AA*||) / 2
};

CircularDiskReport circular_disk_report(const ComplexMatrix& a, double tol);

} // namespace numrad
