#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cam/geometry.hpp"

namespace cam {

enum class CriticalKind { FocusFocus, EllipticElliptic, Degenerate };

// The four rank-zero points are products of poles; indices follow
//   m0 = (N,S), m1 = (S,S), m2 = (S,N), m3 = (N,N).
struct FixedPointRecord {
    int index;
    std::string label;
    PhasePoint point;
    JH value;
};

std::array<FixedPointRecord, 4> fixed_points(const SystemParams& params);

// Quadratic data at a fixed point in the tangent chart (x1,y1,x2,y2):
// restricted symplectic form, Hessians of J and H, and the linearized
// flow generators Omega^{-1} d2J, Omega^{-1} d2H.
struct HessianPencil {
    Eigen::Matrix4d omega;
    Eigen::Matrix4d d2j;
    Eigen::Matrix4d d2h;
    Eigen::Matrix4d omega_inv_d2j;
    Eigen::Matrix4d omega_inv_d2h;
};

HessianPencil hessian_pencil(const SystemParams& params, int fixed_point_index);

// Eigenvalues of a linearized-flow matrix, sorted by (Re, Im).  Uses the
// biquadratic structure of the characteristic polynomial when the odd trace
// coefficients vanish, and a dense solver otherwise.
std::array<std::complex<double>, 4> pencil_eigenvalues(const Eigen::Matrix4d& a);

struct WilliamsonVerdict {
    CriticalKind kind;
    // c in the witness A = c Omega^{-1}d2J + Omega^{-1}d2H whose spectrum
    // decided the verdict; 0 when the verdict came from the discriminant.
    double witness_combo;
    std::array<std::complex<double>, 4> eigenvalues;
    bool analytic_path;
};

WilliamsonVerdict williamson_classify(const SystemParams& params,
                                      int fixed_point_index);

// (R1^2+4R2^2) t^2 - 2 R2 (R1+2R2) t + R2^2; negative exactly when m0 is
// focus-focus, zero at the transition couplings.
double transition_discriminant(const SystemParams& params);

struct TRange {
    double t_minus;
    double t_plus;
};

// Roots t∓ = R2 / (2R2 + R1 ± 2 sqrt(R1 R2)) of the discriminant.
TRange critical_t_range(const SystemParams& params);

// Heights z1 = f(lambda), z2 = g(lambda) of the rank-one circle over the
// slope lambda of dH = lambda dJ.
double corank_f(const SystemParams& params, double lambda);
double corank_g(const SystemParams& params, double lambda);

struct Interval {
    double lo;
    double hi;
};

// Admissible slopes come in three or four closed intervals whose endpoints
// map to the vertices of the momentum-map image.  lambda0 is present only
// when the discriminant is positive (m0 elliptic-elliptic).
struct LambdaIntervals {
    std::array<double, 2> lambda1;
    std::array<double, 2> lambda2;
    std::array<double, 2> lambda3;
    std::array<double, 2> lambda0;
    bool has_lambda0;
    std::vector<Interval> intervals;
};

LambdaIntervals lambda_intervals(const SystemParams& params);

// A point of the rank-one circle over lambda; angle moves along the circle.
// DomainError when lambda is outside every admissible interval.
PhasePoint corank_one_point(const SystemParams& params, double lambda,
                            double angle);

// Image (J,H) of the rank-one circle over lambda, in closed form.
JH corank_value(const SystemParams& params, double lambda);

// Closed counterclockwise polyline bounding the momentum-map image,
// starting and ending at the image of m1.  Each smooth arc carries
// samples_per_interval Chebyshev-Lobatto nodes; shared vertices appear once.
std::vector<JH> boundary_curve(const SystemParams& params,
                               int samples_per_interval);

// Radial extent zeta = sqrt(4 r2/r1 - 1) of the pinched fiber sheets.
double fiber_rho_max(const SystemParams& params);

// Sheet profile |w|/|z| = f(rho) and opening angle
// A(rho) = arccos(((rho^2-1)/2) f(rho)) of the singular fiber.
double fiber_profile(const SystemParams& params, double rho);
double fiber_angle(const SystemParams& params, double rho);

// Sheet parametrization of the singular fiber over the focus-focus value in
// the mixed chart; eps = +1/-1 selects the sheet, rho in [0, zeta].
// Requires t = 1/2 (UnsupportedError otherwise).
StereoPoint singular_fiber_point(const SystemParams& params, int eps,
                                 double rho, double theta);

} // namespace cam
