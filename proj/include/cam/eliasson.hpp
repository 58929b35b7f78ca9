#pragma once

#include <Eigen/Dense>

#include "cam/geometry.hpp"

namespace cam {

// Linear symplectic frame at the focus-focus point carrying the Hessian
// pair of (J,H) to the model functions q1 = u1 xi2 - u2 xi1 and
// q2 = u1 xi1 + u2 xi2.  Columns of basis are (Y1, Y2, Z1, Z2) in the
// tangent chart (x1, y1, x2, y2); b_matrix maps (quad J, quad H) to
// (q1, q2).  The frame is normalized so that the eigenvector component of
// largest modulus is real positive; only frame-independent quantities
// (b_matrix, alpha, beta and downstream invariants) are pinned by tests.
struct EliassonFrame {
    Eigen::Matrix4d basis;
    Eigen::Matrix2d b_matrix;
    double alpha;
    double beta;
};

// Hessians of the model functions in the order (u1, u2, xi1, xi2).
Eigen::Matrix4d model_hessian_q1();
Eigen::Matrix4d model_hessian_q2();

// Block form of the linearized X_H flow in the frame.
Eigen::Matrix4d focus_block(double alpha, double beta);

// Builds the frame at m0.  UnsupportedError when m0 is not focus-focus,
// ConvergenceError when the verification residuals exceed 1e-10.
EliassonFrame eliasson_frame(const SystemParams& params);

} // namespace cam
