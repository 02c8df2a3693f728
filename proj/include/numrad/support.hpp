#pragma once

#include "numrad/complex_matrix.hpp"
#include "numrad/hermitian.hpp"

#include <cstddef>
#include <vector>

namespace numrad {

// One direction of the support scan: lambda_max is the largest eigenvalue of
// Re(e^{i theta} A), part_norm its operator norm, boundary_point = <Ax, x>
// for a top unit eigenvector x.
struct SupportSample {
    double theta;
    double lambda_max;
    double part_norm;
    Complex boundary_point;
};

struct SupportProfile {
    std::vector<SupportSample> samples;  // theta ascending in [0, 2pi)
    std::size_t grid_size;
};

struct RadiusResult {
    double value;                          // numerical radius w(A)
    double theta_star;                     // maximizing angle in [0, 2pi)
    std::vector<Complex> attaining_vector; // unit vector with |<Ax,x>| ~ w(A)
};

struct CrawfordResult {
    double value;         // distance from 0 to the numerical range
    bool origin_inside;   // 0 lies in the range (value == 0)
};

struct DiskResult {
    bool is_disk;     // support profile is constant within tol
    double radius;    // mean part_norm if is_disk, else the refined maximum
};

SupportSample support_sample(const ComplexMatrix& a, double theta);

// Coarse scan over `grid` angles (default 720) followed by golden-section
// refinement of the three best local maxima down to bracket width 1e-11.
// Deterministic; ties resolve to the smallest theta.
RadiusResult numerical_radius(const ComplexMatrix& a, std::size_t grid = 720);

// Boundary samples of the numerical range at n_points uniform angles
// (n_points >= 16).
SupportProfile range_boundary(const ComplexMatrix& a, std::size_t n_points);

// Distance from 0 to the spectrum interval [lambda_min, lambda_max].
double crawford_hermitian(const HermitianMatrix& h);

// Distance from 0 to the numerical range, via the convex hull of the
// boundary polygon (Hermitian inputs take the interval fast path).
CrawfordResult crawford_number(const ComplexMatrix& a, std::size_t grid = 720);

// Tests whether theta -> ||Re(e^{i theta} A)|| is constant within tol
// (refined max minus refined min of the profile).
DiskResult is_origin_centered_disk(const ComplexMatrix& a, double tol = 1e-6,
                                   std::size_t grid = 720);

namespace detail {

// Euclidean distance from query to the convex hull of points (0 when the
// query lies inside or within 1e-10, relative to the point scale, of the
// hull boundary).
double hull_distance(const std::vector<Complex>& points, Complex query);

// Reusable workspace for repeated evaluations of H(theta) = Re(e^{i theta} A).
// Not thread-safe; create one per thread.
class SupportEvaluator {
public:
    explicit SupportEvaluator(const ComplexMatrix& a);

    std::size_t dim() const noexcept { return n_; }

    // Largest eigenvalue of H(theta), eigenvalues-only solve.
    double lambda_max(double theta);

    // {lambda_min, lambda_max} from a single decomposition.
    std::pair<double, double> lambda_extremes(double theta);

    // ||H(theta)|| = max(lambda_max, -lambda_min).
    double part_norm(double theta);

    // Full sample including the boundary point (eigenvector solve).
    SupportSample sample(double theta);

    // Same, also returning the attaining unit eigenvector.
    SupportSample sample_with_vector(double theta, std::vector<Complex>& x);

private:
    void build(double theta);

    std::size_t n_;
    ComplexMatrix a_;
    std::vector<Complex> h_;
    std::vector<Complex> v_;
    std::vector<double> evals_;
};

} // namespace detail

} // namespace numrad
