#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cam/eliasson.hpp"
#include "cam/geometry.hpp"
#include "cam/tridiag.hpp"

namespace cam {

// Semiclassical parameters: both spins must quantize, i.e. 2*k*r1 and
// 2*k*r2 integers (DomainError otherwise).
struct QuantumParams {
    QuantumParams(const SystemParams& system, int k);

    SystemParams system;
    int k;
    std::int64_t p1;  // 2 k r1
    std::int64_t p2;  // 2 k r2
};

// lambda_j = r1 + r2 - (j+1)/k for j = 0 .. p1+p2-2, descending.
std::vector<double> j_eigenvalues(const QuantumParams& qp);

// One invariant block of the quantized pair: the second operator restricted
// to the lambda_j eigenspace, tridiagonal in the spin product basis ordered
// by increasing first-factor index starting at ell_offset.
struct SpectralBlock {
    int j;
    double lambda_j;
    TridiagMatrix matrix;
    std::int64_t ell_offset;
};

SpectralBlock assemble_block(const QuantumParams& qp, int j);

struct JointSpectrum {
    int k;
    // (lambda_J, lambda_H) sorted by block (j ascending), then by
    // lambda_H ascending within a block.
    std::vector<std::array<double, 2>> points;
};

JointSpectrum joint_spectrum(const QuantumParams& qp, int threads = 1);

// Index of the block at lambda_j = 0.  UnsupportedError when k(r1+r2) is
// not an integer (zero is then absent from the first operator's spectrum).
int kernel_block_index(const QuantumParams& qp);

// k times the smallest consecutive eigenvalue gap of the kernel block.
double min_gap_kernel(const QuantumParams& qp);

// Semiclassical prediction 2 pi alpha / (ln k + a2 + ln 2 + gamma) for the
// scaled kernel gap, with alpha = |B^{-1} (0,1)^T|.
double gap_law_prediction(const QuantumParams& qp, double a2,
                          const EliassonFrame& frame);

// Negative-eigenvalue count of the kernel block over k; converges to the
// height invariant.  Uses the Sturm counter, no full solve.
double weyl_height(const QuantumParams& qp);

} // namespace cam
