#include "numrad/diagnostics.hpp"

#include "numrad/bounds.hpp"
#include "numrad/hermitian.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace numrad {

namespace {

constexpr std::size_t kProfileGrid = 360;  // multiple of 4: index shift by 90 = theta - pi/2

void require_tol(double tol) {
    if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
}

// Witness for c(H) ~ 0: an eigenvector when some |eigenvalue| <= tol, else a
// mixture of two opposite-sign eigenvectors chosen so <Hx,x> = 0 exactly.
std::optional<std::vector<Complex>> crawford_witness(const HermitianMatrix& h, double tol) {
    const EigenSystem sys = hermitian_eig(h);
    const std::size_t n = h.dim();

    std::size_t imin = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (std::abs(sys.eigenvalues[i]) < std::abs(sys.eigenvalues[imin])) imin = i;

    auto column = [&](std::size_t j) {
        std::vector<Complex> x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = sys.eigenvectors(i, j);
        return x;
    };

    if (std::abs(sys.eigenvalues[imin]) <= tol) return column(imin);

    const double lo = sys.eigenvalues.front();
    const double hi = sys.eigenvalues.back();
    if (lo < 0.0 && hi > 0.0) {
        const double alpha = std::atan(std::sqrt(hi / -lo));
        const double ca = std::cos(alpha), sa = std::sin(alpha);
        std::vector<Complex> x(n);
        for (std::size_t i = 0; i < n; ++i)
            x[i] = ca * sys.eigenvectors(i, n - 1) + sa * sys.eigenvectors(i, 0);
        return x;
    }
    return std::nullopt;
}

// Shared scan: part_norm over the diagnostics grid plus the radius maximum.
struct ProfileScan {
    std::vector<double> pn;  // ||Re(e^{i theta_k} A)||, theta_k = 2 pi k / 360
    double w;
    double theta_star;
    double pn_at_star;
    double pn_at_star_shifted;  // at theta_star - pi/2
};

ProfileScan scan_profile(const ComplexMatrix& a) {
    ProfileScan ps;
    detail::SupportEvaluator ev(a);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(kProfileGrid);
    ps.pn.resize(kProfileGrid);
    for (std::size_t k = 0; k < kProfileGrid / 2; ++k) {
        ps.pn[k] = ev.part_norm(step * static_cast<double>(k));
        ps.pn[k + kProfileGrid / 2] = ps.pn[k];
    }
    const RadiusResult rad = numerical_radius(a);
    ps.w = rad.value;
    ps.theta_star = rad.theta_star;
    ps.pn_at_star = ev.part_norm(rad.theta_star);
    ps.pn_at_star_shifted = ev.part_norm(rad.theta_star - 0.5 * std::numbers::pi);
    return ps;
}

} // namespace

DiagnosticsReport check_half_norm_equality(const ComplexMatrix& a, double tol) {
    require_tol(tol);
    const double ctol = 10.0 * tol;  // consequence tolerance

    const ProfileScan ps = scan_profile(a);
    const double norm = operator_norm(a);
    const ComplexMatrix aa = matmul(adjoint(a), a);
    const ComplexMatrix a_a = matmul(a, adjoint(a));
    const double s_plus = hermitian_norm(real_part(aa + a_a));
    const double s_minus = hermitian_norm(real_part(aa - a_a));

    DiagnosticsReport r;
    r.tol = tol;
    r.case_half_norm = std::abs(ps.w - 0.5 * norm) <= tol * std::max(1.0, norm);
    r.case_kittaneh = std::abs(ps.w * ps.w - 0.25 * s_plus) <= tol * std::max(1.0, ps.w * ps.w);
    r.disk = is_origin_centered_disk(a, std::max(ctol, 1e-9));
    r.theta_profile_ok = true;
    r.norms_match = true;
    r.norm_identity_ok = true;
    r.witnesses_ok = true;

    if (r.case_half_norm) {
        const double target = 0.5 * norm;
        const double scale = std::max(1.0, norm);
        const double re = hermitian_norm(real_part(a));
        const double im = hermitian_norm(imag_part(a));
        r.norms_match = std::abs(re - target) <= ctol * scale &&
                        std::abs(im - target) <= ctol * scale;

        // ||Im(e^{i t}A)|| = ||Re(e^{i(t - pi/2)}A)|| lands back on the grid.
        for (std::size_t k = 0; k < kProfileGrid && r.theta_profile_ok; ++k) {
            const double re_k = ps.pn[k];
            const double im_k = ps.pn[(k + kProfileGrid - 90) % kProfileGrid];
            r.theta_profile_ok = std::abs(re_k - target) <= ctol * scale &&
                                 std::abs(im_k - target) <= ctol * scale &&
                                 std::abs(re_k + im_k - norm) <= ctol * scale;
        }
        if (r.theta_profile_ok) {
            r.theta_profile_ok =
                std::abs(ps.pn_at_star - target) <= ctol * scale &&
                std::abs(ps.pn_at_star + ps.pn_at_star_shifted - norm) <= ctol * scale;
        }

        const double n2 = norm * norm;
        const double scale2 = std::max(1.0, n2);
        r.norm_identity_ok = std::abs(s_plus - n2) <= ctol * scale2 &&
                             std::abs(s_minus - n2) <= ctol * scale2;
    }
    return r;
}

DiagnosticsReport check_kittaneh_equality(const ComplexMatrix& a, double tol) {
    require_tol(tol);
    const double ctol = 10.0 * tol;

    const ProfileScan ps = scan_profile(a);
    const double norm = operator_norm(a);
    const ComplexMatrix aa = matmul(adjoint(a), a);
    const ComplexMatrix a_a = matmul(a, adjoint(a));
    const double s_plus = hermitian_norm(real_part(aa + a_a));

    DiagnosticsReport r;
    r.tol = tol;
    r.case_half_norm = std::abs(ps.w - 0.5 * norm) <= tol * std::max(1.0, norm);
    r.case_kittaneh = std::abs(ps.w * ps.w - 0.25 * s_plus) <= tol * std::max(1.0, ps.w * ps.w);
    r.disk = is_origin_centered_disk(a, std::max(ctol, 1e-9));
    r.theta_profile_ok = true;
    r.norms_match = true;
    r.norm_identity_ok = true;
    r.witnesses_ok = true;

    if (r.case_kittaneh) {
        const double target = 0.5 * std::sqrt(s_plus);
        const double scale = std::max(1.0, norm);
        const HermitianMatrix re = real_part(a);
        const HermitianMatrix im = imag_part(a);
        r.norms_match = std::abs(hermitian_norm(re) - target) <= ctol * scale &&
                        std::abs(hermitian_norm(im) - target) <= ctol * scale;

        const double q = 0.25 * s_plus;
        const double scale2 = std::max(1.0, q);
        for (std::size_t k = 0; k < kProfileGrid && r.theta_profile_ok; ++k)
            r.theta_profile_ok = std::abs(ps.pn[k] * ps.pn[k] - q) <= ctol * scale2;
        if (r.theta_profile_ok)
            r.theta_profile_ok = std::abs(ps.pn_at_star * ps.pn_at_star - q) <= ctol * scale2;

        r.witness_re = crawford_witness(re, tol);
        r.witness_im = crawford_witness(im, tol);
        r.witnesses_ok = r.witness_re.has_value() && r.witness_im.has_value();
        if (r.witness_re)
            r.witnesses_ok = r.witnesses_ok &&
                             std::abs(quadratic_form(re.matrix(), *r.witness_re)) <= tol;
        if (r.witness_im)
            r.witnesses_ok = r.witnesses_ok &&
                             std::abs(quadratic_form(im.matrix(), *r.witness_im)) <= tol;
    }
    return r;
}

NormAdditivityResult norm_additivity_check(const ComplexMatrix& a, const ComplexMatrix& b,
                                           double tol) {
    require_tol(tol);
    if (a.max_abs() == 0.0 || b.max_abs() == 0.0)
        throw std::invalid_argument("norm additivity requires nonzero matrices");

    const double na = operator_norm(a);
    const double nb = operator_norm(b);
    const double nab = operator_norm(a + b);

    NormAdditivityResult r;
    r.additive = std::abs(nab - na - nb) <= tol * (na + nb);

    const SupportProfile profile = range_boundary(matmul(adjoint(a), b), 720);
    std::vector<Complex> pts;
    pts.reserve(profile.samples.size());
    for (const SupportSample& s : profile.samples) pts.push_back(s.boundary_point);
    const double d = detail::hull_distance(pts, Complex{na * nb, 0.0});
    r.membership = d <= tol * std::max(1.0, na * nb);
    r.agree = (r.additive == r.membership);
    return r;
}

CircularDiskReport circular_disk_report(const ComplexMatrix& a, double tol) {
    require_tol(tol);
    const DiskResult d = is_origin_centered_disk(a, tol);
    const double norm = operator_norm(a);
    const double s_plus = 4.0 * kittaneh_sq(a);

    CircularDiskReport r;
    r.disk = d.is_disk;
    r.radius = d.radius;
    r.matches_half_norm = d.is_disk && std::abs(d.radius - 0.5 * norm) <= tol;
    r.matches_kittaneh = d.is_disk && std::abs(d.radius - 0.5 * std::sqrt(s_plus)) <= tol;
    return r;
}

} // namespace numrad
