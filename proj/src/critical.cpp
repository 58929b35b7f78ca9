#include "cam/critical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "cam/errors.hpp"

namespace cam {

namespace {

constexpr double kDegenerateTol = 1e-10;  // relative to r2^2
constexpr double kSpectralGapTol = 1e-7;  // relative to spectral radius
constexpr double kIntervalSlack = 1e-11;

// Pole signs (s1, s2) of the fixed points, in index order m0..m3.
constexpr int kPoleSigns[4][2] = {{1, -1}, {-1, -1}, {-1, 1}, {1, 1}};

double pole_z(int sign) { return sign > 0 ? 1.0 : -1.0; }

std::array<std::complex<double>, 4> sorted_spectrum(
    std::array<std::complex<double>, 4> ev) {
    std::sort(ev.begin(), ev.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return ev;
}

double spectral_radius(const std::array<std::complex<double>, 4>& ev) {
    double r = 0.0;
    for (const auto& v : ev) r = std::max(r, std::abs(v));
    return r;
}

bool is_regular(const std::array<std::complex<double>, 4>& ev) {
    const double radius = spectral_radius(ev);
    if (radius == 0.0) return false;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (std::abs(ev[i] - ev[j]) <= kSpectralGapTol * radius)
                return false;
    return true;
}

enum class SpectralPattern { FocusFocus, Elliptic, Other };

SpectralPattern pattern_of(const std::array<std::complex<double>, 4>& ev) {
    const double radius = spectral_radius(ev);
    const double tol = kSpectralGapTol * radius;
    bool all_off_axis = true;
    bool all_imaginary = true;
    for (const auto& v : ev) {
        if (std::abs(v.real()) <= tol || std::abs(v.imag()) <= tol)
            all_off_axis = false;
        if (std::abs(v.real()) > tol) all_imaginary = false;
    }
    if (all_off_axis) return SpectralPattern::FocusFocus;
    if (all_imaginary) return SpectralPattern::Elliptic;
    return SpectralPattern::Other;
}

// Witness combinations tried in order; the first with simple spectrum
// decides the type.
std::vector<double> witness_grid(const SystemParams& params) {
    std::vector<double> grid;
    grid.push_back(0.0);
    for (int k = -4; k <= 4; ++k) {
        const double c = std::ldexp(1.0, k);
        grid.push_back(c);
        grid.push_back(-c);
    }
    grid.push_back(1.0 / (2.0 * params.r2 - params.r1));
    grid.push_back(1.0);
    grid.push_back(1.0 / params.r1);
    grid.push_back(-1.0 / params.r1);
    grid.push_back(-1.0 / (params.r1 + 2.0 * params.r2));
    return grid;
}

struct ArcPoint {
    JH value;
};

// Chebyshev-Lobatto nodes on [lo, hi], endpoints included.
std::vector<double> lobatto_nodes(double lo, double hi, int n) {
    std::vector<double> nodes(n);
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    for (int k = 0; k < n; ++k)
        nodes[k] = mid - half * std::cos(k * M_PI / (n - 1));
    nodes.front() = lo;
    nodes.back() = hi;
    return nodes;
}

JH corner_value(const SystemParams& params, int index) {
    const double r1 = params.r1, r2 = params.r2, t = params.t;
    switch (index) {
        case 0: return {r1 - r2, 1.0 - 2.0 * t};
        case 1: return {-(r1 + r2), 2.0 * t - 1.0};
        case 2: return {r2 - r1, -1.0};
        default: return {r1 + r2, 1.0};
    }
}

void append_segment(std::vector<JH>& out, const JH& a, const JH& b, int n) {
    // Starting corner exact, interior nodes on the chord; the closing corner
    // belongs to the next arc.
    out.push_back(a);
    for (int k = 1; k + 1 < n; ++k) {
        const double s = 0.5 - 0.5 * std::cos(k * M_PI / (n - 1));
        out.push_back({a.j + s * (b.j - a.j), a.h + s * (b.h - a.h)});
    }
}

void append_arc(std::vector<JH>& out, const SystemParams& params,
                const Interval& iv, int start_corner, int n) {
    out.push_back(corner_value(params, start_corner));
    const auto nodes = lobatto_nodes(iv.lo, iv.hi, n);
    for (int k = 1; k + 1 < n; ++k)
        out.push_back(corank_value(params, nodes[k]));
}

}  // namespace

std::array<FixedPointRecord, 4> fixed_points(const SystemParams& params) {
    std::array<FixedPointRecord, 4> out;
    for (int i = 0; i < 4; ++i) {
        const double z1 = pole_z(kPoleSigns[i][0]);
        const double z2 = pole_z(kPoleSigns[i][1]);
        PhasePoint p = make_phase_point(0.0, 0.0, z1, 0.0, 0.0, z2);
        out[i] = {i, "m" + std::to_string(i), p, momentum_map(p, params)};
    }
    return out;
}

HessianPencil hessian_pencil(const SystemParams& params, int fixed_point_index) {
    if (fixed_point_index < 0 || fixed_point_index > 3)
        throw DomainError("critical: fixed point index out of range");
    const double s1 = pole_z(kPoleSigns[fixed_point_index][0]);
    const double s2 = pole_z(kPoleSigns[fixed_point_index][1]);
    const double t = params.t;
    const double c1 = -params.r1 * s1;
    const double c2 = -params.r2 * s2;
    const double g1 = (1.0 - t) * s1 + t * s1 * s2;
    const double g2 = t * s1 * s2;

    HessianPencil hp;
    hp.omega = Eigen::Matrix4d::Zero();
    hp.omega(0, 1) = c1;
    hp.omega(1, 0) = -c1;
    hp.omega(2, 3) = c2;
    hp.omega(3, 2) = -c2;

    hp.d2j = Eigen::Matrix4d::Zero();
    hp.d2j.diagonal() << c1, c1, c2, c2;

    hp.d2h = Eigen::Matrix4d::Zero();
    hp.d2h(0, 0) = hp.d2h(1, 1) = -g1;
    hp.d2h(2, 2) = hp.d2h(3, 3) = -g2;
    hp.d2h(0, 2) = hp.d2h(2, 0) = t;
    hp.d2h(1, 3) = hp.d2h(3, 1) = t;

    Eigen::Matrix4d omega_inv = Eigen::Matrix4d::Zero();
    omega_inv(0, 1) = -1.0 / c1;
    omega_inv(1, 0) = 1.0 / c1;
    omega_inv(2, 3) = -1.0 / c2;
    omega_inv(3, 2) = 1.0 / c2;
    hp.omega_inv_d2j = omega_inv * hp.d2j;
    hp.omega_inv_d2h = omega_inv * hp.d2h;
    return hp;
}

std::array<std::complex<double>, 4> pencil_eigenvalues(const Eigen::Matrix4d& a) {
    const double scale = a.norm();
    const double tr = a.trace();
    const double tr2 = (a * a).trace();
    const double tr3 = (a * a * a).trace();
    const double ca = -tr;
    const double cb = 0.5 * (tr * tr - tr2);
    const double cc = -(tr * tr * tr - 3.0 * tr * tr2 + 2.0 * tr3) / 6.0;
    const double cd = a.determinant();

    const bool biquadratic = std::abs(ca) <= 1e-9 * (1.0 + scale) &&
                             std::abs(cc) <= 1e-9 * (1.0 + scale * scale * scale);
    if (biquadratic) {
        // X^4 + cb X^2 + cd = 0 solved as a quadratic in X^2.
        const std::complex<double> disc =
            std::sqrt(std::complex<double>(cb * cb - 4.0 * cd, 0.0));
        const std::complex<double> yp = 0.5 * (-cb + disc);
        const std::complex<double> ym = 0.5 * (-cb - disc);
        const std::complex<double> rp = std::sqrt(yp);
        const std::complex<double> rm = std::sqrt(ym);
        return sorted_spectrum({rp, -rp, rm, -rm});
    }
    Eigen::EigenSolver<Eigen::Matrix4d> solver(a);
    std::array<std::complex<double>, 4> ev;
    for (int i = 0; i < 4; ++i) ev[i] = solver.eigenvalues()(i);
    return sorted_spectrum(ev);
}

double transition_discriminant(const SystemParams& params) {
    const double r1 = params.r1, r2 = params.r2, t = params.t;
    return (r1 * r1 + 4.0 * r2 * r2) * t * t - 2.0 * r2 * (r1 + 2.0 * r2) * t +
           r2 * r2;
}

TRange critical_t_range(const SystemParams& params) {
    const double r1 = params.r1, r2 = params.r2;
    const double root = 2.0 * std::sqrt(r1 * r2);
    return {r2 / (2.0 * r2 + r1 + root), r2 / (2.0 * r2 + r1 - root)};
}

WilliamsonVerdict williamson_classify(const SystemParams& params,
                                      int fixed_point_index) {
    const HessianPencil hp = hessian_pencil(params, fixed_point_index);

    // The transition at m0 is detected analytically before any spectral
    // test: near the transition couplings the pencil spectra collide and
    // the verdict would depend on rounding.
    if (fixed_point_index == 0) {
        const double disc = transition_discriminant(params);
        if (std::abs(disc) < kDegenerateTol * params.r2 * params.r2) {
            return {CriticalKind::Degenerate, 0.0,
                    pencil_eigenvalues(hp.omega_inv_d2h), true};
        }
    }

    for (double c : witness_grid(params)) {
        const Eigen::Matrix4d a = c * hp.omega_inv_d2j + hp.omega_inv_d2h;
        const auto ev = pencil_eigenvalues(a);
        if (!is_regular(ev)) continue;
        switch (pattern_of(ev)) {
            case SpectralPattern::FocusFocus:
                return {CriticalKind::FocusFocus, c, ev, false};
            case SpectralPattern::Elliptic:
                return {CriticalKind::EllipticElliptic, c, ev, false};
            case SpectralPattern::Other:
                continue;
        }
    }

    // No witness had simple spectrum; fall back to the analytic type.
    const auto ev = pencil_eigenvalues(hp.omega_inv_d2h);
    if (fixed_point_index == 0) {
        const double disc = transition_discriminant(params);
        const CriticalKind kind = disc < 0.0 ? CriticalKind::FocusFocus
                                             : CriticalKind::EllipticElliptic;
        return {kind, 0.0, ev, true};
    }
    return {CriticalKind::EllipticElliptic, 0.0, ev, true};
}

double corank_f(const SystemParams& params, double lambda) {
    const double r1 = params.r1, r2 = params.r2, t = params.t;
    const double p = 1.0 - t - r1 * lambda;
    const double num =
        (t * t + r2 * r2 * lambda * lambda) * p * p - t * t * r2 * r2 * lambda * lambda;
    return num / (2.0 * t * r2 * lambda * p * p);
}

double corank_g(const SystemParams& params, double lambda) {
    const double r1 = params.r1, r2 = params.r2, t = params.t;
    const double p = 1.0 - t - r1 * lambda;
    const double num =
        (t * t - r2 * r2 * lambda * lambda) * p * p - t * t * r2 * r2 * lambda * lambda;
    return num / (2.0 * t * r2 * r2 * lambda * lambda * p);
}

LambdaIntervals lambda_intervals(const SystemParams& params) {
    const double r1 = params.r1, r2 = params.r2, t = params.t;
    if (t == 0.0)
        throw UnsupportedError(
            "corank: slope parametrization undefined at t=0 (dH and dJ are "
            "nowhere proportional on the rank-one set)");

    LambdaIntervals out;
    const double denom = 2.0 * r1 * r2;

    const double b1 = (1.0 - 2.0 * t) * r2 - t * r1;
    const double d1 = std::sqrt(b1 * b1 + 4.0 * r1 * r2 * t * (1.0 - t));
    out.lambda1 = {(b1 - d1) / denom, (b1 + d1) / denom};

    const double b2 = r2 - t * r1;
    const double d2 = std::sqrt(b2 * b2 + 4.0 * r1 * r2 * t * (1.0 - t));
    out.lambda2 = {(b2 - d2) / denom, (b2 + d2) / denom};

    const double b3 = t * r1 + r2;
    const double d3 = std::sqrt(b2 * b2 + 4.0 * t * t * r1 * r2);
    out.lambda3 = {(b3 - d3) / denom, (b3 + d3) / denom};

    const double disc = transition_discriminant(params);
    out.has_lambda0 = disc > kDegenerateTol * r2 * r2;
    if (out.has_lambda0) {
        const double b0 = (1.0 - 2.0 * t) * r2 + t * r1;
        const double d0 = std::sqrt(disc);
        out.lambda0 = {(b0 - d0) / denom, (b0 + d0) / denom};
    } else {
        out.lambda0 = {0.0, 0.0};
    }

    if (t == 1.0) {
        // Two of the four intervals collapse to the single inadmissible
        // slope 0; only the outer pair survives.
        out.intervals = {{out.lambda1[0], out.lambda0[0]},
                         {out.lambda2[1], out.lambda3[1]}};
        return out;
    }

    if (!out.has_lambda0) {
        out.intervals = {{out.lambda1[0], out.lambda2[0]},
                         {out.lambda3[0], out.lambda1[1]},
                         {out.lambda2[1], out.lambda3[1]}};
    } else if (t < 0.5) {
        out.intervals = {{out.lambda1[0], out.lambda2[0]},
                         {out.lambda3[0], out.lambda0[0]},
                         {out.lambda0[1], out.lambda1[1]},
                         {out.lambda2[1], out.lambda3[1]}};
    } else {
        out.intervals = {{out.lambda1[0], out.lambda0[0]},
                         {out.lambda0[1], out.lambda2[0]},
                         {out.lambda3[0], out.lambda1[1]},
                         {out.lambda2[1], out.lambda3[1]}};
    }
    return out;
}

PhasePoint corank_one_point(const SystemParams& params, double lambda,
                            double angle) {
    const double t = params.t;
    if (lambda == 0.0 || 1.0 - t - params.r1 * lambda == 0.0)
        throw DomainError("corank: slope hits a pole of the parametrization");

    const LambdaIntervals iv = lambda_intervals(params);
    bool admissible = false;
    for (const auto& in : iv.intervals) {
        const double slack = kIntervalSlack * (1.0 + std::abs(in.lo) + std::abs(in.hi));
        if (lambda >= in.lo - slack && lambda <= in.hi + slack) {
            admissible = true;
            break;
        }
    }
    if (!admissible) throw DomainError("corank: slope outside admissible intervals");

    const double f = corank_f(params, lambda);
    const double g = corank_g(params, lambda);
    const double mu = (1.0 - t - params.r1 * lambda) / (params.r2 * lambda);
    const double s = std::sqrt(std::max(0.0, 1.0 - f * f));
    const double x1 = s * std::cos(angle);
    const double y1 = s * std::sin(angle);
    PhasePoint p = make_phase_point(x1, y1, f, mu * x1, mu * y1, g);

    // Consistency: the two tangent-projected differentials must be parallel.
    const auto gj = gradient(Component::J, p, params);
    const auto gh = gradient(Component::H, p, params);
    Eigen::Matrix<double, 2, 6> m;
    const double n1[3] = {p.x1, p.y1, p.z1};
    const double n2[3] = {p.x2, p.y2, p.z2};
    for (int row = 0; row < 2; ++row) {
        const auto& grad = row == 0 ? gj : gh;
        double dot1 = 0.0, dot2 = 0.0;
        for (int i = 0; i < 3; ++i) {
            dot1 += grad[i] * n1[i];
            dot2 += grad[3 + i] * n2[i];
        }
        for (int i = 0; i < 3; ++i) {
            m(row, i) = grad[i] - dot1 * n1[i];
            m(row, 3 + i) = grad[3 + i] - dot2 * n2[i];
        }
    }
    Eigen::JacobiSVD<Eigen::Matrix<double, 2, 6>> svd(m);
    const double sigma1 = svd.singularValues()(0);
    const double sigma2 = svd.singularValues()(1);
    if (sigma2 > 1e-9 * (1.0 + sigma1))
        throw ConvergenceError("corank: tangent differentials not parallel");
    return p;
}

JH corank_value(const SystemParams& params, double lambda) {
    const double r1 = params.r1, r2 = params.r2, t = params.t;
    if (t == 0.0)
        throw UnsupportedError("corank: slope parametrization undefined at t=0");
    if (lambda == 0.0 || 1.0 - t - r1 * lambda == 0.0)
        throw DomainError("corank: slope hits a pole of the parametrization");
    const double f = corank_f(params, lambda);
    const double j =
        (t * (1.0 - t) * f - r2 * (1.0 - t) * lambda + r1 * r2 * lambda * lambda) /
        (t * lambda);
    const double h =
        (t * (1.0 - t) - t * r1 * lambda + r1 * r2 * lambda * lambda * f) /
        (r2 * lambda);
    return {j, h};
}

std::vector<JH> boundary_curve(const SystemParams& params,
                               int samples_per_interval) {
    if (samples_per_interval < 2)
        throw DomainError("boundary: need at least two samples per arc");
    const int n = samples_per_interval;
    std::vector<JH> out;

    if (params.t == 0.0) {
        // Toric end: the image is the quadrilateral c1 c2 c3 c0.
        const int chain[4] = {1, 2, 3, 0};
        for (int k = 0; k < 4; ++k)
            append_segment(out, corner_value(params, chain[k]),
                           corner_value(params, chain[(k + 1) % 4]), n);
        out.push_back(corner_value(params, 1));
        return out;
    }

    const LambdaIntervals iv = lambda_intervals(params);

    if (params.t == 1.0) {
        // Toric end: two parabolic arcs joined by horizontal segments.
        append_arc(out, params, iv.intervals[0], 1, n);
        append_segment(out, corner_value(params, 0), corner_value(params, 2), n);
        append_arc(out, params, iv.intervals[1], 2, n);
        append_segment(out, corner_value(params, 3), corner_value(params, 1), n);
        out.push_back(corner_value(params, 1));
        return out;
    }

    if (!iv.has_lambda0) {
        const Interval chain[3] = {iv.intervals[0], iv.intervals[2],
                                   iv.intervals[1]};
        const int corners[3] = {1, 2, 3};
        for (int k = 0; k < 3; ++k)
            append_arc(out, params, chain[k], corners[k], n);
    } else if (params.t < 0.5) {
        const Interval chain[4] = {iv.intervals[0], iv.intervals[3],
                                   iv.intervals[1], iv.intervals[2]};
        const int corners[4] = {1, 2, 3, 0};
        for (int k = 0; k < 4; ++k)
            append_arc(out, params, chain[k], corners[k], n);
    } else {
        const Interval chain[4] = {iv.intervals[0], iv.intervals[1],
                                   iv.intervals[3], iv.intervals[2]};
        const int corners[4] = {1, 0, 2, 3};
        for (int k = 0; k < 4; ++k)
            append_arc(out, params, chain[k], corners[k], n);
    }
    out.push_back(corner_value(params, 1));
    return out;
}

double fiber_rho_max(const SystemParams& params) {
    return std::sqrt(4.0 * params.r2 / params.r1 - 1.0);
}

double fiber_profile(const SystemParams& params, double rho) {
    return std::sqrt(params.r1 /
                     (params.r2 + (params.r2 - params.r1) * rho * rho));
}

double fiber_angle(const SystemParams& params, double rho) {
    double arg = 0.5 * (rho * rho - 1.0) * fiber_profile(params, rho);
    if (std::abs(arg) > 1.0) {
        if (std::abs(arg) > 1.0 + 1e-9)
            throw DomainError("fiber: angle argument outside [-1,1]");
        arg = arg > 0.0 ? 1.0 : -1.0;
    }
    return std::acos(arg);
}

StereoPoint singular_fiber_point(const SystemParams& params, int eps,
                                 double rho, double theta) {
    if (std::abs(params.t - 0.5) > 1e-12)
        throw UnsupportedError("fiber: sheet parametrization requires t=1/2");
    if (eps != 1 && eps != -1)
        throw DomainError("fiber: sheet sign must be +1 or -1");
    const double zeta = fiber_rho_max(params);
    if (rho < 0.0 || rho > zeta * (1.0 + 1e-12))
        throw DomainError("fiber: radius outside [0, zeta]");
    rho = std::min(rho, zeta);

    const double alpha = fiber_angle(params, rho);
    const std::complex<double> z = std::polar(rho, theta);
    const std::complex<double> w =
        std::polar(rho * fiber_profile(params, rho), eps * alpha - theta);
    return {z, w};
}

} // namespace cam
