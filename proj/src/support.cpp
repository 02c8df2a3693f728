#include "numrad/support.hpp"

#include "numrad/golden.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace numrad {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kBracketTol = 1e-11;
constexpr std::size_t kMinGrid = 16;
constexpr std::size_t kRefineBrackets = 3;

void require_grid(std::size_t grid) {
    if (grid < kMinGrid) throw std::invalid_argument("grid must have at least 16 points");
}

double wrap_angle(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    return t;
}

// Indices whose value is >= (<=) both circular neighbours, ranked best-first
// (index ascending on ties), at most `limit` of them.
std::vector<std::size_t> top_local_extrema(const std::vector<double>& g, bool maxima,
                                           std::size_t limit) {
    const std::size_t n = g.size();
    std::vector<std::size_t> cand;
    for (std::size_t k = 0; k < n; ++k) {
        const double prev = g[(k + n - 1) % n];
        const double next = g[(k + 1) % n];
        const bool is_ext = maxima ? (g[k] >= prev && g[k] >= next)
                                   : (g[k] <= prev && g[k] <= next);
        if (is_ext) cand.push_back(k);
    }
    std::stable_sort(cand.begin(), cand.end(), [&](std::size_t x, std::size_t y) {
        if (g[x] != g[y]) return maxima ? g[x] > g[y] : g[x] < g[y];
        return x < y;
    });
    if (cand.size() > limit) cand.resize(limit);
    return cand;
}

struct Pt {
    double x, y;
};

double cross(const Pt& o, const Pt& a, const Pt& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Monotone chain; returns the hull counter-clockwise without the closing
// point. Degenerate inputs collapse to 1 or 2 vertices.
std::vector<Pt> convex_hull(std::vector<Pt> pts) {
    std::sort(pts.begin(), pts.end(), [](const Pt& a, const Pt& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const Pt& a, const Pt& b) { return a.x == b.x && a.y == b.y; }),
              pts.end());
    const std::size_t n = pts.size();
    if (n <= 2) return pts;

    std::vector<Pt> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

double dist_point_segment(const Pt& p, const Pt& a, const Pt& b) {
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double len_sq = dx * dx + dy * dy;
    double t = 0.0;
    if (len_sq > 0.0) t = std::clamp(((p.x - a.x) * dx + (p.y - a.y) * dy) / len_sq, 0.0, 1.0);
    const double px = a.x + t * dx - p.x, py = a.y + t * dy - p.y;
    return std::sqrt(px * px + py * py);
}

} // namespace

namespace detail {

SupportEvaluator::SupportEvaluator(const ComplexMatrix& a)
    : n_(a.dim()), a_(a), h_(n_ * n_), v_(), evals_() {}

void SupportEvaluator::build(double theta) {
    const Complex z{std::cos(theta), std::sin(theta)};
    const std::size_t n = n_;
    const Complex* e = a_.entries().data();
    for (std::size_t i = 0; i < n; ++i) {
        const Complex zii = z * e[i * n + i];
        h_[i * n + i] = Complex{zii.real(), 0.0};
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex v = 0.5 * (z * e[i * n + j] + std::conj(z * e[j * n + i]));
            h_[i * n + j] = v;
            h_[j * n + i] = std::conj(v);
        }
    }
}

double SupportEvaluator::lambda_max(double theta) {
    return lambda_extremes(theta).second;
}

std::pair<double, double> SupportEvaluator::lambda_extremes(double theta) {
    build(theta);
    const auto status = jacobi_hermitian(h_.data(), n_, nullptr);
    if (!status.converged) {
        throw EigenError("support scan eigensolve did not converge", status.offdiag);
    }
    double lo = h_[0].real(), hi = lo;
    for (std::size_t i = 1; i < n_; ++i) {
        const double d = h_[i * n_ + i].real();
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    return {lo, hi};
}

double SupportEvaluator::part_norm(double theta) {
    const auto [lo, hi] = lambda_extremes(theta);
    return std::max(hi, -lo);
}

SupportSample SupportEvaluator::sample(double theta) {
    std::vector<Complex> x;
    return sample_with_vector(theta, x);
}

SupportSample SupportEvaluator::sample_with_vector(double theta, std::vector<Complex>& x) {
    build(theta);
    v_.assign(n_ * n_, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < n_; ++i) v_[i * n_ + i] = Complex{1.0, 0.0};
    const auto status = jacobi_hermitian(h_.data(), n_, v_.data());
    if (!status.converged) {
        throw EigenError("support scan eigensolve did not converge", status.offdiag);
    }
    std::size_t arg = 0;
    double lo = h_[0].real(), hi = lo;
    for (std::size_t i = 1; i < n_; ++i) {
        const double d = h_[i * n_ + i].real();
        if (d > hi) {
            hi = d;
            arg = i;
        }
        lo = std::min(lo, d);
    }
    x.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) x[i] = v_[i * n_ + arg];

    SupportSample s;
    s.theta = theta;
    s.lambda_max = hi;
    s.part_norm = std::max(hi, -lo);
    s.boundary_point = quadratic_form(a_, x);
    return s;
}

} // namespace detail

SupportSample support_sample(const ComplexMatrix& a, double theta) {
    detail::SupportEvaluator ev(a);
    return ev.sample(theta);
}

RadiusResult numerical_radius(const ComplexMatrix& a, std::size_t grid) {
    require_grid(grid);
    detail::SupportEvaluator ev(a);
    const double step = kTwoPi / static_cast<double>(grid);

    // lambda_max(theta + pi) = -lambda_min(theta), so an even grid needs only
    // half the decompositions.
    std::vector<double> g(grid);
    if (grid % 2 == 0) {
        const std::size_t half = grid / 2;
        for (std::size_t k = 0; k < half; ++k) {
            const auto [lo, hi] = ev.lambda_extremes(step * static_cast<double>(k));
            g[k] = hi;
            g[k + half] = -lo;
        }
    } else {
        for (std::size_t k = 0; k < grid; ++k)
            g[k] = ev.lambda_max(step * static_cast<double>(k));
    }

    double best_f = g[0];
    double best_theta = 0.0;
    for (std::size_t k = 1; k < grid; ++k) {
        if (g[k] > best_f) {
            best_f = g[k];
            best_theta = step * static_cast<double>(k);
        }
    }

    auto consider = [&](double theta, double f) {
        const double t = wrap_angle(theta);
        if (f > best_f || (f == best_f && t < best_theta)) {
            best_f = f;
            best_theta = t;
        }
    };

    for (std::size_t k : top_local_extrema(g, true, kRefineBrackets)) {
        const double center = step * static_cast<double>(k);
        auto f = [&ev](double th) { return ev.lambda_max(th); };
        const auto [x, fx] = golden_max(f, center - step, center + step, kBracketTol);
        consider(x, fx);
    }

    RadiusResult r;
    const SupportSample s = ev.sample_with_vector(best_theta, r.attaining_vector);
    r.value = std::max(best_f, s.lambda_max);
    r.theta_star = best_theta;
    return r;
}

SupportProfile range_boundary(const ComplexMatrix& a, std::size_t n_points) {
    require_grid(n_points);
    detail::SupportEvaluator ev(a);
    const double step = kTwoPi / static_cast<double>(n_points);
    SupportProfile p;
    p.grid_size = n_points;
    p.samples.reserve(n_points);
    for (std::size_t k = 0; k < n_points; ++k)
        p.samples.push_back(ev.sample(step * static_cast<double>(k)));
    return p;
}

double crawford_hermitian(const HermitianMatrix& h) {
    const auto evals = hermitian_eigvals(h);
    const double lo = evals.front(), hi = evals.back();
    if (lo <= 0.0 && 0.0 <= hi) return 0.0;
    return std::min(std::abs(lo), std::abs(hi));
}

namespace detail {

double hull_distance(const std::vector<Complex>& points, Complex query) {
    std::vector<Pt> pts;
    pts.reserve(points.size());
    double scale = std::max(1.0, std::abs(query));
    for (const Complex& z : points) {
        pts.push_back({z.real(), z.imag()});
        scale = std::max(scale, std::abs(z));
    }
    const std::vector<Pt> hull = convex_hull(std::move(pts));
    if (hull.empty()) throw std::invalid_argument("hull of empty point set");
    const Pt p{query.real(), query.imag()};

    double dist;
    bool strictly_inside = false;
    if (hull.size() == 1) {
        dist = std::hypot(hull[0].x - p.x, hull[0].y - p.y);
    } else if (hull.size() == 2) {
        dist = dist_point_segment(p, hull[0], hull[1]);
    } else {
        strictly_inside = true;
        dist = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < hull.size(); ++i) {
            const Pt& u = hull[i];
            const Pt& w = hull[(i + 1) % hull.size()];
            if (cross(u, w, p) <= 0.0) strictly_inside = false;
            dist = std::min(dist, dist_point_segment(p, u, w));
        }
    }
    if (strictly_inside || dist <= 1e-10 * scale) return 0.0;
    return dist;
}

} // namespace detail

CrawfordResult crawford_number(const ComplexMatrix& a, std::size_t grid) {
    require_grid(grid);
    if (is_hermitian(a)) {
        const double c = crawford_hermitian(HermitianMatrix(a));
        return {c, c == 0.0};
    }

    const SupportProfile profile = range_boundary(a, grid);
    std::vector<Complex> pts;
    pts.reserve(profile.samples.size());
    for (const SupportSample& s : profile.samples) pts.push_back(s.boundary_point);
    const double d = detail::hull_distance(pts, Complex{0.0, 0.0});
    return {d, d == 0.0};
}

DiskResult is_origin_centered_disk(const ComplexMatrix& a, double tol, std::size_t grid) {
    require_grid(grid);
    if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
    detail::SupportEvaluator ev(a);
    const double step = kTwoPi / static_cast<double>(grid);

    // part_norm has period pi, so an even grid needs only half the solves.
    std::vector<double> pn(grid);
    if (grid % 2 == 0) {
        const std::size_t half = grid / 2;
        for (std::size_t k = 0; k < half; ++k) {
            pn[k] = ev.part_norm(step * static_cast<double>(k));
            pn[k + half] = pn[k];
        }
    } else {
        for (std::size_t k = 0; k < grid; ++k) pn[k] = ev.part_norm(step * static_cast<double>(k));
    }

    auto f = [&ev](double th) { return ev.part_norm(th); };
    double hi = *std::max_element(pn.begin(), pn.end());
    double lo = *std::min_element(pn.begin(), pn.end());
    for (std::size_t k : top_local_extrema(pn, true, kRefineBrackets)) {
        const double center = step * static_cast<double>(k);
        hi = std::max(hi, golden_max(f, center - step, center + step, kBracketTol).second);
    }
    for (std::size_t k : top_local_extrema(pn, false, kRefineBrackets)) {
        const double center = step * static_cast<double>(k);
        lo = std::min(lo, golden_min(f, center - step, center + step, kBracketTol).second);
    }

    DiskResult r;
    r.is_disk = (hi - lo) <= tol;
    if (r.is_disk) {
        double mean = 0.0;
        for (double v : pn) mean += v;
        r.radius = mean / static_cast<double>(grid);
    } else {
        r.radius = hi;
    }
    return r;
}

} // namespace numrad
