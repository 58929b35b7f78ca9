#pragma once

#include <array>
#include <complex>

namespace cam {

// Parameters of the coupled angular momenta system on S^2 x S^2 with
// symplectic form -(r1 w_S2 (+) r2 w_S2).  Requires r2 > r1 > 0 and
// t in [0,1]; the constructor throws DomainError otherwise.
struct SystemParams {
    SystemParams(double r1, double r2, double t);

    double r1;
    double r2;
    double t;

    double theta() const { return r2 / r1; }
};

// Ambient coordinates of a point of S^2 x S^2.  Both triples are kept
// exactly unit length; construction goes through make_phase_point.
struct PhasePoint {
    double x1 = 0.0;
    double y1 = 0.0;
    double z1 = 1.0;
    double x2 = 0.0;
    double y2 = 0.0;
    double z2 = 1.0;
};

// Validates the sphere-product constraint (each factor within 1e-9 of unit
// norm, otherwise DomainError) and renormalizes both factors exactly.
PhasePoint make_phase_point(double x1, double y1, double z1,
                            double x2, double y2, double z2);
PhasePoint renormalized(const PhasePoint& p);

struct JH {
    double j;
    double h;
};

// (J,H) = (r1 z1 + r2 z2, (1-t) z1 + t (x1 x2 + y1 y2 + z1 z2)).
JH momentum_map(const PhasePoint& p, const SystemParams& params);

enum class Component { J, H };

// Ambient gradient of J or H as a function on R^6.
std::array<double, 6> gradient(Component which, const PhasePoint& p,
                               const SystemParams& params);

// Mixed stereographic chart: z is the south-pole projection of the first
// factor, w the north-pole projection of the second.  The chart is centered
// at (0,0,1,0,0,-1) which maps to (0,0).
struct StereoPoint {
    std::complex<double> z;
    std::complex<double> w;
};

// Requires z1 > -1 and z2 < 1 with margin 1e-12; DomainError at the poles.
StereoPoint stereo_forward(const PhasePoint& p);
PhasePoint stereo_inverse(const StereoPoint& s);

// Coefficients of a vector field in the frame (d/dz, d/dzbar, d/dw, d/dwbar)
// of the mixed chart.  Real fields satisfy dz_conj = conj(dz).
struct ChartVectorField {
    std::complex<double> dz;
    std::complex<double> dz_conj;
    std::complex<double> dw;
    std::complex<double> dw_conj;

    std::array<std::complex<double>, 4> coefficients() const {
        return {dz, dz_conj, dw, dw_conj};
    }
};

// Hamiltonian vector field of J or H expressed in the mixed chart.
ChartVectorField hamiltonian_vector_field(Component which, const StereoPoint& s,
                                          const SystemParams& params);

// {f,g}(p) for functions given by their ambient gradients at p.  Evaluated
// in per-factor stereographic charts chosen away from the poles, so every
// sphere-product point is in the domain.
double poisson_bracket_functions(const PhasePoint& p, const SystemParams& params,
                                 const std::array<double, 6>& grad_f,
                                 const std::array<double, 6>& grad_g);

// {J,H}(p); vanishes identically, the numerical contract is |result| <= 1e-10.
double poisson_bracket(const PhasePoint& p, const SystemParams& params);

} // namespace cam
