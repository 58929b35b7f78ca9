#include "cam/quantum.hpp"

#include <cmath>

#include "cam/errors.hpp"
#include "cam/parallel.hpp"

namespace cam {

namespace {

constexpr double kEulerMascheroni = 0.57721566490153286061;

std::int64_t quantized_spin(double r, int k, const char* name) {
    const double value = 2.0 * k * r;
    const double rounded = std::round(value);
    if (std::abs(value - rounded) > 1e-9)
        throw DomainError(std::string("quantum: 2*k*") + name +
                          " must be an integer (spin quantization)");
    return static_cast<std::int64_t>(rounded);
}

int block_count(const QuantumParams& qp) {
    return static_cast<int>(qp.p1 + qp.p2 - 1);
}

double lambda_of_block(const QuantumParams& qp, int j) {
    // r1 + r2 - (j+1)/k with an integer numerator, so the kernel block
    // lands on exact zero.
    return static_cast<double>(qp.p1 + qp.p2 - 2 * (j + 1)) / (2.0 * qp.k);
}

}  // namespace

QuantumParams::QuantumParams(const SystemParams& system_, int k_)
    : system(system_), k(k_) {
    if (k < 1) throw DomainError("quantum: k must be a positive integer");
    p1 = quantized_spin(system.r1, k, "r1");
    p2 = quantized_spin(system.r2, k, "r2");
}

std::vector<double> j_eigenvalues(const QuantumParams& qp) {
    const int n = block_count(qp);
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(j)] = lambda_of_block(qp, j);
    return out;
}

SpectralBlock assemble_block(const QuantumParams& qp, int j) {
    if (j < 0 || j >= block_count(qp))
        throw DomainError("quantum: block index out of range");
    const std::int64_t p1 = qp.p1, p2 = qp.p2;
    const double t = qp.system.t;
    const double denom = static_cast<double>(p1) * static_cast<double>(p2);

    const std::int64_t lo = std::max<std::int64_t>(0, j - p2 + 1);
    const std::int64_t hi = std::min<std::int64_t>(p1 - 1, j);
    const std::size_t dim = static_cast<std::size_t>(hi - lo + 1);

    SpectralBlock block;
    block.j = j;
    block.lambda_j = lambda_of_block(qp, j);
    block.ell_offset = lo;
    block.matrix.diag.resize(dim);
    block.matrix.offdiag.resize(dim - 1);

    for (std::size_t i = 0; i < dim; ++i) {
        const std::int64_t ell = lo + static_cast<std::int64_t>(i);
        const std::int64_t m = j - ell;
        block.matrix.diag[i] = static_cast<double>(p1 - 2 * ell - 1) *
                               (static_cast<double>(p2) - (2 * m + 1) * t) / denom;
        if (i + 1 < dim) {
            // Product of four nonnegative integers taken exactly before the
            // single square root; each factor is < p1 or < p2.
            const __int128 prod = static_cast<__int128>(ell + 1) *
                                  (p1 - 1 - ell) * (j - ell) * (p2 - (j - ell));
            block.matrix.offdiag[i] =
                2.0 * t * std::sqrt(static_cast<double>(prod)) / denom;
        }
    }
    return block;
}

JointSpectrum joint_spectrum(const QuantumParams& qp, int threads) {
    const int n = block_count(qp);
    std::vector<std::vector<double>> slots(static_cast<std::size_t>(n));
    parallel_for(static_cast<std::size_t>(n), threads, [&](std::size_t j) {
        slots[j] = eigenvalues(assemble_block(qp, static_cast<int>(j)).matrix);
    });

    JointSpectrum out;
    out.k = qp.k;
    out.points.reserve(static_cast<std::size_t>(qp.p1) * static_cast<std::size_t>(qp.p2));
    for (int j = 0; j < n; ++j) {
        const double lj = lambda_of_block(qp, j);
        for (double lh : slots[static_cast<std::size_t>(j)])
            out.points.push_back({lj, lh});
    }
    return out;
}

int kernel_block_index(const QuantumParams& qp) {
    if ((qp.p1 + qp.p2) % 2 != 0)
        throw UnsupportedError(
            "quantum: zero is not an eigenvalue of the first operator; "
            "k*(r1+r2) must be an integer");
    // Block through the focus-focus value of J: lambda_j = r1 - r2 at
    // j = p2 - 1, which is where the gap law and the Weyl count live.
    return static_cast<int>(qp.p2 - 1);
}

double min_gap_kernel(const QuantumParams& qp) {
    const SpectralBlock block = assemble_block(qp, kernel_block_index(qp));
    if (block.matrix.size() < 2)
        throw UnsupportedError("quantum: kernel block has dimension < 2");
    const std::vector<double> ev = eigenvalues(block.matrix);
    double min_gap = ev[1] - ev[0];
    for (std::size_t i = 1; i + 1 < ev.size(); ++i)
        min_gap = std::min(min_gap, ev[i + 1] - ev[i]);
    return qp.k * min_gap;
}

double gap_law_prediction(const QuantumParams& qp, double a2,
                          const EliassonFrame& frame) {
    const Eigen::Vector2d col = frame.b_matrix.inverse() * Eigen::Vector2d(0.0, 1.0);
    const double alpha = col.norm();
    return 2.0 * M_PI * alpha /
           (std::log(static_cast<double>(qp.k)) + a2 + std::log(2.0) +
            kEulerMascheroni);
}

double weyl_height(const QuantumParams& qp) {
    const SpectralBlock block = assemble_block(qp, kernel_block_index(qp));
    return static_cast<double>(count_below(block.matrix, 0.0)) / qp.k;
}

} // namespace cam
