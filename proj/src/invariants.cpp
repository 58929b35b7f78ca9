#include "cam/invariants.hpp"

#include <cmath>
#include <vector>

#include "cam/critical.hpp"
#include "cam/errors.hpp"
#include "cam/quadrature.hpp"

namespace cam {

namespace {

constexpr double kHalfCouplingTol = 1e-12;
constexpr double kExtrapolationTol = 1e-5;
constexpr int kRhoLevels = 7;  // rho_m = 0.1 * 2^-m

void require_half_coupling(const SystemParams& params, const char* what) {
    if (std::abs(params.t - 0.5) > kHalfCouplingTol)
        throw UnsupportedError(std::string(what) + " requires t=1/2");
}

// Richardson table for sequences with O(rho^2) error on a ratio-2 rho grid.
double richardson(std::vector<double> column, double* residual) {
    const std::size_t n = column.size();
    double prev_best = column.back();
    for (std::size_t k = 1; k < n; ++k) {
        const double w = std::ldexp(1.0, 2 * static_cast<int>(k));  // 4^k
        for (std::size_t i = 0; i + k < n; ++i)
            column[i] = (w * column[i + 1] - column[i]) / (w - 1.0);
        if (k + 1 < n) prev_best = column[0];
    }
    if (residual) *residual = std::abs(column[0] - prev_best);
    return column[0];
}

std::vector<double> rho_sequence() {
    std::vector<double> rho(kRhoLevels);
    for (int m = 0; m < kRhoLevels; ++m) rho[m] = 0.1 * std::ldexp(1.0, -m);
    return rho;
}

}  // namespace

double height_closed_form(const SystemParams& params) {
    require_half_coupling(params, "height invariant");
    const double r1 = params.r1;
    const double th = params.theta();
    const double s = std::sqrt(4.0 * th - 1.0);
    const double pre = 2.0 * r1 * (th - 1.0) / M_PI;
    return (2.0 * r1 / M_PI) * std::acos(1.0 / (2.0 * std::sqrt(th))) +
           (r1 / M_PI) * s - pre * std::atan(2.0 * th - 1.0) +
           pre * std::atan(((2.0 * th * th - 2.0 * th + 1.0) * s - 2.0 * th * th) /
                           ((2.0 * th - 1.0) * (2.0 * th - 1.0)));
}

double height_quadrature(const SystemParams& params) {
    require_half_coupling(params, "height invariant");
    const double r1 = params.r1;
    const double zeta = fiber_rho_max(params);
    // rho = zeta - u^2 removes the square-root behaviour of the opening
    // angle at the outer radius.
    const auto integrand = [&](double u) {
        const double rho = zeta - u * u;
        const double measure =
            4.0 * r1 * rho / (2.0 * M_PI * (1.0 + rho * rho) * (1.0 + rho * rho));
        return measure * (2.0 * M_PI - 2.0 * fiber_angle(params, rho)) * 2.0 * u;
    };
    const double wedge =
        integrate_or_throw(integrand, 0.0, std::sqrt(zeta), QuadratureOptions{});
    // Beyond zeta the sublevel set covers the whole reduced circle; that
    // tail integrates exactly.
    return wedge + r1 * r1 / (2.0 * params.r2);
}

StereoPoint radial_loop(const SystemParams& params, int eps, double rho) {
    const double theta = eps * 0.5 * fiber_angle(params, rho);
    return singular_fiber_point(params, eps, rho, theta);
}

double radial_loop_kappa(const SystemParams& params, const EliassonFrame& frame,
                         int eps, double rho) {
    require_half_coupling(params, "radial loop");
    if (eps != 1 && eps != -1)
        throw DomainError("radial loop: sheet sign must be +1 or -1");
    const double b22 = frame.b_matrix(1, 1);
    return eps * b22 * rho * std::sin(fiber_angle(params, rho)) /
           (2.0 * params.r2 * fiber_profile(params, rho));
}

double time_form_integral(const SystemParams& params,
                          const EliassonFrame& frame, double rho) {
    require_half_coupling(params, "time form");
    const double zeta = fiber_rho_max(params);
    if (rho <= 0.0 || rho >= zeta)
        throw DomainError("time form: truncation radius outside (0, zeta)");
    // Substituted as rho' = zeta - u^2: the factor 1/sin(A) of the inverse
    // collinearity factor is 1/sqrt(zeta - rho')-singular at the gluing
    // radius and the substitution flattens it.
    const auto integrand = [&](double u) {
        const double rp = zeta - u * u;
        return (-1.0 / radial_loop_kappa(params, frame, 1, rp)) * 2.0 * u;
    };
    const double one_sheet =
        integrate_or_throw(integrand, 0.0, std::sqrt(zeta - rho), QuadratureOptions{});
    return 2.0 * one_sheet;
}

LoopEndpoints loop_endpoints(const SystemParams& params,
                             const EliassonFrame& frame, double rho) {
    const auto local = [&](int eps) {
        const StereoPoint s = radial_loop(params, eps, rho);
        const PhasePoint p = stereo_inverse(s);
        const Eigen::Vector4d chart(p.x1, p.y1, p.x2, p.y2);
        return Eigen::Vector4d(frame.basis.partialPivLu().solve(chart));
    };
    const Eigen::Vector4d ua = local(1);
    const Eigen::Vector4d ub = local(-1);
    LoopEndpoints out;
    out.r_a = std::hypot(ua(0), ua(1));
    out.nu_a = std::atan2(ua(1), ua(0));
    out.sigma_b = std::hypot(ub(2), ub(3));
    out.mu_b = std::atan2(ub(3), ub(2));
    return out;
}

double taylor_a2(const SystemParams& params, const EliassonFrame& frame) {
    require_half_coupling(params, "Taylor coefficients");
    std::vector<double> values;
    for (double rho : rho_sequence()) {
        const LoopEndpoints ends = loop_endpoints(params, frame, rho);
        values.push_back(time_form_integral(params, frame, rho) +
                         std::log(ends.r_a * ends.sigma_b));
    }
    double residual = 0.0;
    const double a2 = richardson(values, &residual);
    if (residual > kExtrapolationTol)
        throw ConvergenceError("taylor a2: extrapolation did not settle");
    return a2;
}

double taylor_a1(const SystemParams& params, const EliassonFrame& frame) {
    require_half_coupling(params, "Taylor coefficients");
    std::vector<double> values;
    for (double rho : rho_sequence()) {
        const LoopEndpoints ends = loop_endpoints(params, frame, rho);
        double d = ends.nu_a - ends.mu_b;
        if (!values.empty()) {
            // The angle difference is only defined mod 2*pi; keep the
            // sequence on one branch for the extrapolation.
            d -= 2.0 * M_PI * std::round((d - values.back()) / (2.0 * M_PI));
        }
        values.push_back(d);
    }
    double residual = 0.0;
    double a1 = richardson(values, &residual);
    if (residual > kExtrapolationTol)
        throw ConvergenceError("taylor a1: extrapolation did not settle");
    a1 = std::fmod(a1, 2.0 * M_PI);
    if (a1 < 0.0) a1 += 2.0 * M_PI;
    return a1;
}

double taylor_a2(const SystemParams& params) {
    return taylor_a2(params, eliasson_frame(params));
}

double taylor_a1(const SystemParams& params) {
    return taylor_a1(params, eliasson_frame(params));
}

} // namespace cam
