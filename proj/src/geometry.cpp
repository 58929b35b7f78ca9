#include "cam/geometry.hpp"

#include "cam/errors.hpp"

#include <cmath>

namespace cam {

namespace {

using cplx = std::complex<double>;

constexpr double kSphereTol = 1e-9;
constexpr double kPoleTol = 1e-12;

double norm3(double x, double y, double z) {
    return std::sqrt(x * x + y * y + z * z);
}

// Wirtinger derivative d(f o chart_inverse)/d(xi) of a function with ambient
// gradient (gx,gy,gz) on one sphere factor.  north selects the pole.
cplx wirtinger(const cplx& xi, bool north, double gx, double gy, double gz) {
    double d = 1.0 + std::norm(xi);
    cplx xib = std::conj(xi);
    cplx dx = (1.0 - xib * xib) / (d * d);
    cplx dy = cplx(0.0, north ? -1.0 : 1.0) * (1.0 + xib * xib) / (d * d);
    cplx dz = (north ? 2.0 : -2.0) * xib / (d * d);
    return gx * dx + gy * dy + gz * dz;
}

cplx factor_chart(double x, double y, double z, bool north) {
    if (north) return cplx(x, y) / (1.0 - z);
    return cplx(x, -y) / (1.0 + z);
}

} // namespace

SystemParams::SystemParams(double r1_, double r2_, double t_)
    : r1(r1_), r2(r2_), t(t_) {
    if (!(r1 > 0.0) || !(r2 > r1))
        throw DomainError("system params: require r2 > r1 > 0");
    if (!(t >= 0.0) || !(t <= 1.0))
        throw DomainError("system params: require t in [0,1]");
}

PhasePoint renormalized(const PhasePoint& p) {
    double n1 = norm3(p.x1, p.y1, p.z1);
    double n2 = norm3(p.x2, p.y2, p.z2);
    if (std::abs(n1 - 1.0) > kSphereTol || std::abs(n2 - 1.0) > kSphereTol)
        throw DomainError("phase point: factor off the unit sphere");
    PhasePoint q;
    q.x1 = p.x1 / n1;
    q.y1 = p.y1 / n1;
    q.z1 = p.z1 / n1;
    q.x2 = p.x2 / n2;
    q.y2 = p.y2 / n2;
    q.z2 = p.z2 / n2;
    return q;
}

PhasePoint make_phase_point(double x1, double y1, double z1,
                            double x2, double y2, double z2) {
    PhasePoint p;
    p.x1 = x1;
    p.y1 = y1;
    p.z1 = z1;
    p.x2 = x2;
    p.y2 = y2;
    p.z2 = z2;
    return renormalized(p);
}

JH momentum_map(const PhasePoint& raw, const SystemParams& params) {
    PhasePoint p = renormalized(raw);
    double j = params.r1 * p.z1 + params.r2 * p.z2;
    double h = (1.0 - params.t) * p.z1 +
               params.t * (p.x1 * p.x2 + p.y1 * p.y2 + p.z1 * p.z2);
    return {j, h};
}

std::array<double, 6> gradient(Component which, const PhasePoint& p,
                               const SystemParams& params) {
    if (which == Component::J)
        return {0.0, 0.0, params.r1, 0.0, 0.0, params.r2};
    double t = params.t;
    return {t * p.x2, t * p.y2, (1.0 - t) + t * p.z2,
            t * p.x1, t * p.y1, t * p.z1};
}

StereoPoint stereo_forward(const PhasePoint& raw) {
    PhasePoint p = renormalized(raw);
    if (1.0 + p.z1 <= kPoleTol)
        throw DomainError("stereo chart: first factor at the south pole");
    if (1.0 - p.z2 <= kPoleTol)
        throw DomainError("stereo chart: second factor at the north pole");
    StereoPoint s;
    s.z = cplx(p.x1, -p.y1) / (1.0 + p.z1);
    s.w = cplx(p.x2, p.y2) / (1.0 - p.z2);
    return s;
}

PhasePoint stereo_inverse(const StereoPoint& s) {
    double dz = 1.0 + std::norm(s.z);
    double dw = 1.0 + std::norm(s.w);
    PhasePoint p;
    p.x1 = 2.0 * s.z.real() / dz;
    p.y1 = -2.0 * s.z.imag() / dz;
    p.z1 = (1.0 - std::norm(s.z)) / dz;
    p.x2 = 2.0 * s.w.real() / dw;
    p.y2 = 2.0 * s.w.imag() / dw;
    p.z2 = (std::norm(s.w) - 1.0) / dw;
    return renormalized(p);
}

ChartVectorField hamiltonian_vector_field(Component which, const StereoPoint& s,
                                          const SystemParams& params) {
    const cplx z = s.z;
    const cplx w = s.w;
    const cplx i(0.0, 1.0);
    ChartVectorField v;
    if (which == Component::J) {
        v.dz = -i * z;
        v.dw = i * w;
    } else {
        double t = params.t;
        double dz_ = 1.0 + std::norm(z);
        double dw_ = 1.0 + std::norm(w);
        cplx zb = std::conj(z);
        cplx wb = std::conj(w);
        cplx lambda1 = (-2.0 * (1.0 - t) * z * dw_ +
                        2.0 * t * (wb - z * z * w - z * std::norm(w) + z)) /
                       (params.r1 * dw_);
        cplx lambda2 = 2.0 * t * (zb + w - w * std::norm(z) - z * w * w) /
                       (params.r2 * dz_);
        v.dz = (i / 2.0) * lambda1;
        v.dw = (i / 2.0) * lambda2;
    }
    v.dz_conj = std::conj(v.dz);
    v.dw_conj = std::conj(v.dw);
    return v;
}

double poisson_bracket_functions(const PhasePoint& raw, const SystemParams& params,
                                 const std::array<double, 6>& grad_f,
                                 const std::array<double, 6>& grad_g) {
    PhasePoint p = renormalized(raw);
    // Per-factor pole selection keeps the chart denominators >= 1.
    bool n1 = p.z1 < 0.0;
    bool n2 = !(p.z2 > 0.0);
    cplx xi1 = factor_chart(p.x1, p.y1, p.z1, n1);
    cplx xi2 = factor_chart(p.x2, p.y2, p.z2, n2);
    double d1 = 1.0 + std::norm(xi1);
    double d2 = 1.0 + std::norm(xi2);
    cplx f1 = wirtinger(xi1, n1, grad_f[0], grad_f[1], grad_f[2]);
    cplx g1 = wirtinger(xi1, n1, grad_g[0], grad_g[1], grad_g[2]);
    cplx f2 = wirtinger(xi2, n2, grad_f[3], grad_f[4], grad_f[5]);
    cplx g2 = wirtinger(xi2, n2, grad_g[3], grad_g[4], grad_g[5]);
    return d1 * d1 / params.r1 * std::imag(f1 * std::conj(g1)) +
           d2 * d2 / params.r2 * std::imag(f2 * std::conj(g2));
}

double poisson_bracket(const PhasePoint& p, const SystemParams& params) {
    PhasePoint q = renormalized(p);
    return poisson_bracket_functions(q, params, gradient(Component::J, q, params),
                                     gradient(Component::H, q, params));
}

} // namespace cam
