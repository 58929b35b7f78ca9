#include "cam/eliasson.hpp"

#include <cmath>
#include <complex>

#include <Eigen/Eigenvalues>

#include "cam/critical.hpp"
#include "cam/errors.hpp"

namespace cam {

namespace {

constexpr double kResidualTol = 1e-10;
constexpr double kEigenPairTol = 1e-8;

using Vector4c = Eigen::Vector4cd;

// Deterministic representative: unit norm, largest-modulus component real
// positive, first index breaking ties.
Vector4c phase_fixed(Vector4c v) {
    v.normalize();
    int pick = 0;
    double best = 0.0;
    for (int i = 0; i < 4; ++i) {
        const double m = std::abs(v(i));
        if (m > best * (1.0 + 1e-12)) {
            best = m;
            pick = i;
        }
    }
    const std::complex<double> phase = v(pick) / std::abs(v(pick));
    return v / phase;
}

}  // namespace

Eigen::Matrix4d model_hessian_q1() {
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    m(0, 3) = m(3, 0) = 1.0;
    m(1, 2) = m(2, 1) = -1.0;
    return m;
}

Eigen::Matrix4d model_hessian_q2() {
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    m(0, 2) = m(2, 0) = 1.0;
    m(1, 3) = m(3, 1) = 1.0;
    return m;
}

Eigen::Matrix4d focus_block(double alpha, double beta) {
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    m(0, 0) = -alpha;
    m(0, 1) = beta;
    m(1, 0) = -beta;
    m(1, 1) = -alpha;
    m(2, 2) = alpha;
    m(2, 3) = beta;
    m(3, 2) = -beta;
    m(3, 3) = alpha;
    return m;
}

EliassonFrame eliasson_frame(const SystemParams& params) {
    const WilliamsonVerdict verdict = williamson_classify(params, 0);
    if (verdict.kind != CriticalKind::FocusFocus)
        throw UnsupportedError("eliasson: m0 is not focus-focus for these parameters");

    const HessianPencil hp = hessian_pencil(params, 0);
    const Eigen::Matrix4d& a = hp.omega_inv_d2h;
    const Eigen::Matrix4d& aj = hp.omega_inv_d2j;

    Eigen::EigenSolver<Eigen::Matrix4d> solver(a);
    if (solver.info() != Eigen::Success)
        throw ConvergenceError("eliasson: eigensolver failed on the linearized flow");
    const auto& values = solver.eigenvalues();
    const auto& vectors = solver.eigenvectors();

    // The distinguished eigenvalue has positive real part and its
    // eigenvector rotates with the circle action: (Omega^{-1}d2J) X = iX.
    int star = -1;
    for (int i = 0; i < 4; ++i) {
        if (values(i).real() <= 0.0) continue;
        const Vector4c v = vectors.col(i);
        if ((aj * v - std::complex<double>(0.0, 1.0) * v).norm() <=
            kEigenPairTol * v.norm()) {
            star = i;
            break;
        }
    }
    if (star < 0)
        throw ConvergenceError("eliasson: no eigenvector with the required rotation sense");
    const std::complex<double> lambda = values(star);

    int mirror = -1;
    for (int i = 0; i < 4; ++i) {
        if (std::abs(values(i) + lambda) > kEigenPairTol * std::abs(lambda)) continue;
        const Vector4c v = vectors.col(i);
        if ((aj * v + std::complex<double>(0.0, 1.0) * v).norm() <=
            kEigenPairTol * v.norm()) {
            mirror = i;
            break;
        }
    }
    if (mirror < 0)
        throw ConvergenceError("eliasson: opposite eigenvector not found");

    const Vector4c x = phase_fixed(vectors.col(star));
    const Vector4c w = phase_fixed(vectors.col(mirror));
    const Eigen::Vector4d y1 = 2.0 * x.real();
    const Eigen::Vector4d y2 = 2.0 * x.imag();
    const Eigen::Vector4d w1 = 2.0 * w.real();
    const Eigen::Vector4d w2 = 2.0 * w.imag();

    // Normalize the second pair by the symplectic pairing with the first.
    Eigen::Matrix2d m;
    m(0, 0) = y1.dot(hp.omega * w1);
    m(0, 1) = y1.dot(hp.omega * w2);
    m(1, 0) = y2.dot(hp.omega * w1);
    m(1, 1) = y2.dot(hp.omega * w2);
    if (std::abs(m.determinant()) < 1e-14)
        throw ConvergenceError("eliasson: degenerate symplectic pairing");
    const Eigen::Matrix<double, 4, 2> z =
        (Eigen::Matrix<double, 4, 2>() << w1, w2).finished() * m.inverse();

    EliassonFrame frame;
    frame.alpha = -lambda.real();
    frame.beta = lambda.imag();
    frame.basis.col(0) = y1;
    frame.basis.col(1) = y2;
    frame.basis.col(2) = z.col(0);
    frame.basis.col(3) = z.col(1);
    frame.b_matrix << 1.0, 0.0, -frame.beta / frame.alpha, 1.0 / frame.alpha;

    // Verification against the model: symplectic, conjugated flow, Hessians.
    const Eigen::Matrix4d& p = frame.basis;
    Eigen::Matrix4d omega0 = Eigen::Matrix4d::Zero();
    omega0(0, 2) = omega0(1, 3) = 1.0;
    omega0(2, 0) = omega0(3, 1) = -1.0;
    const double scale = 1.0 + p.squaredNorm();
    if ((p.transpose() * hp.omega * p - omega0).cwiseAbs().maxCoeff() >
        kResidualTol * scale)
        throw ConvergenceError("eliasson: frame is not symplectic");
    const Eigen::Matrix4d p_inv = p.inverse();
    if ((p_inv * a * p - focus_block(frame.alpha, frame.beta)).cwiseAbs().maxCoeff() >
        kResidualTol * scale)
        throw ConvergenceError("eliasson: conjugated flow misses the block form");
    if ((p.transpose() * hp.d2j * p - model_hessian_q1()).cwiseAbs().maxCoeff() >
        kResidualTol * scale)
        throw ConvergenceError("eliasson: J Hessian does not flatten to q1");
    const Eigen::Matrix4d hmodel =
        frame.beta * model_hessian_q1() + frame.alpha * model_hessian_q2();
    if ((p.transpose() * hp.d2h * p - hmodel).cwiseAbs().maxCoeff() >
        kResidualTol * scale)
        throw ConvergenceError("eliasson: H Hessian does not flatten to beta q1 + alpha q2");

    return frame;
}

} // namespace cam
