#pragma once

#include "cam/eliasson.hpp"
#include "cam/geometry.hpp"

namespace cam {

// Volume of the reduced space below the focus-focus level, in closed form
// and by adaptive quadrature of the reduced-area integral.  Both require
// t = 1/2 (UnsupportedError otherwise); the two routes agree to 1e-9.
double height_closed_form(const SystemParams& params);
double height_quadrature(const SystemParams& params);

// Point of the radial loop (the fiber trace with collinear factors) on the
// eps sheet at radius rho.  Requires t = 1/2.
StereoPoint radial_loop(const SystemParams& params, int eps, double rho);

// Collinearity factor: the model vector field X_q2 equals kappa times the
// loop tangent modulo the circle direction.
double radial_loop_kappa(const SystemParams& params, const EliassonFrame& frame,
                         int eps, double rho);

// Integral of the q2 time form over the loop truncated at radius rho on
// both sheets; diverges like -2 ln rho as rho -> 0.
double time_form_integral(const SystemParams& params,
                          const EliassonFrame& frame, double rho);

// Polar coordinates of the truncation endpoints in the Eliasson frame:
// (r_a, nu_a) in the (u1,u2) plane on the +1 sheet, (sigma_b, mu_b) in the
// (xi1,xi2) plane on the -1 sheet.
struct LoopEndpoints {
    double r_a;
    double nu_a;
    double sigma_b;
    double mu_b;
};

LoopEndpoints loop_endpoints(const SystemParams& params,
                             const EliassonFrame& frame, double rho);

// Leading Taylor coefficients of the focus-focus fiber invariant, by
// Richardson extrapolation of the regularized quantities over a dyadic
// rho sequence.  a1 is reported in [0, 2*pi).  ConvergenceError when the
// extrapolation residual exceeds 1e-5.
double taylor_a2(const SystemParams& params, const EliassonFrame& frame);
double taylor_a1(const SystemParams& params, const EliassonFrame& frame);

// Convenience overloads building the frame internally.
double taylor_a2(const SystemParams& params);
double taylor_a1(const SystemParams& params);

} // namespace cam
