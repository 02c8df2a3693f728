#pragma once

#include <cmath>
#include <utility>

namespace numrad {

// Golden-section maximization on [a, b]. f is evaluated until the bracket
// width drops below width_tol; returns the best (x, f(x)) seen, preferring
// the smaller x on ties. Assumes f is unimodal on the bracket; on flat or
// noisy profiles it still returns the best sampled point.
template <typename F>
std::pair<double, double> golden_max(F&& f, double a, double b, double width_tol) {
    constexpr double invphi = 0.6180339887498948482;   // 1/phi
    constexpr double invphi2 = 0.3819660112501051518;  // 1/phi^2

    double x1 = a + invphi2 * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    double best_x = (f2 > f1) ? x2 : x1;
    double best_f = (f2 > f1) ? f2 : f1;

    while (b - a > width_tol) {
        if (f1 >= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = a + invphi2 * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
        const double fx = (f1 >= f2) ? f1 : f2;
        const double xx = (f1 >= f2) ? x1 : x2;
        if (fx > best_f || (fx == best_f && xx < best_x)) {
            best_f = fx;
            best_x = xx;
        }
    }
    return {best_x, best_f};
}

// Golden-section minimization, same contract.
template <typename F>
std::pair<double, double> golden_min(F&& f, double a, double b, double width_tol) {
    auto neg = [&f](double x) { return -f(x); };
    auto [x, fneg] = golden_max(neg, a, b, width_tol);
    return {x, -fneg};
}

} // namespace numrad
