#include "cam/tridiag.hpp"

#include "cam/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cam {

namespace {

struct Block {
    const double* d;
    const double* e; // e[i] couples d[i] and d[i+1]; size n-1
    std::size_t n;
};

void validate(const TridiagMatrix& m) {
    if (m.diag.empty()) throw DomainError("tridiag: empty matrix");
    if (m.offdiag.size() + 1 != m.diag.size())
        throw DomainError("tridiag: offdiag size must be n-1");
    for (double v : m.diag)
        if (!std::isfinite(v)) throw DomainError("tridiag: non-finite entry");
    for (double v : m.offdiag)
        if (!std::isfinite(v)) throw DomainError("tridiag: non-finite entry");
}

double pivmin_for(const Block& b) {
    double emax2 = 0.0;
    for (std::size_t i = 0; i + 1 < b.n; ++i)
        emax2 = std::max(emax2, b.e[i] * b.e[i]);
    double safemin = std::numeric_limits<double>::min();
    return std::max(safemin, emax2 * safemin);
}

// Number of negative LDL^T pivots of m - x I; equals the number of
// eigenvalues at most x (ties pushed below by the pivot floor).
std::size_t negcount(const Block& b, double x, double pivmin) {
    std::size_t count = 0;
    double d = b.d[0] - x;
    for (std::size_t i = 0;; ++i) {
        if (std::abs(d) <= pivmin) d = -pivmin;
        if (d < 0.0) ++count;
        if (i + 1 == b.n) break;
        d = (b.d[i + 1] - x) - (b.e[i] * b.e[i]) / d;
    }
    return count;
}

void gershgorin(const Block& b, double* lo, double* hi) {
    *lo = std::numeric_limits<double>::infinity();
    *hi = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < b.n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(b.e[i - 1]);
        if (i + 1 < b.n) r += std::abs(b.e[i]);
        *lo = std::min(*lo, b.d[i] - r);
        *hi = std::max(*hi, b.d[i] + r);
    }
}

// Characteristic polynomial p_n(x) of the leading principal minors and its
// x-derivative, with joint rescaling to dodge overflow.
void char_poly(const Block& b, double x, double* p, double* dp) {
    double pm1 = 1.0, pm1d = 0.0; // p_0
    double pc = b.d[0] - x, pcd = -1.0;
    for (std::size_t i = 1; i < b.n; ++i) {
        double e2 = b.e[i - 1] * b.e[i - 1];
        double pn = (b.d[i] - x) * pc - e2 * pm1;
        double pnd = -pc + (b.d[i] - x) * pcd - e2 * pm1d;
        pm1 = pc;
        pm1d = pcd;
        pc = pn;
        pcd = pnd;
        double mag = std::max(std::abs(pc), std::abs(pm1));
        if (mag > 1e100) {
            double s = 1e-100;
            pc *= s;
            pm1 *= s;
            pcd *= s;
            pm1d *= s;
        }
    }
    *p = pc;
    *dp = pcd;
}

void block_eigenvalues(const Block& b, std::vector<double>& out) {
    if (b.n == 1) {
        out.push_back(b.d[0]);
        return;
    }
    double glo, ghi;
    gershgorin(b, &glo, &ghi);
    double radius = std::max({std::abs(glo), std::abs(ghi),
                              std::numeric_limits<double>::min()});
    double pivmin = pivmin_for(b);
    double tol = 1e-14 * radius;
    double lo0 = glo - 2.0 * tol - pivmin;
    double hi0 = ghi + 2.0 * tol + pivmin;
    double prev = lo0;
    for (std::size_t idx = 0; idx < b.n; ++idx) {
        // Invariant: negcount(a) <= idx < negcount(b2), eigenvalue in [a, b2].
        double a = prev, b2 = hi0;
        for (int it = 0; it < 200 && (b2 - a) > tol; ++it) {
            double mid = 0.5 * (a + b2);
            if (negcount(b, mid, pivmin) <= idx)
                a = mid;
            else
                b2 = mid;
        }
        double x = 0.5 * (a + b2);
        for (int it = 0; it < 3; ++it) {
            double p, dp;
            char_poly(b, x, &p, &dp);
            if (dp == 0.0) break;
            double xn = x - p / dp;
            if (!(xn > a && xn < b2)) break;
            x = xn;
        }
        out.push_back(x);
        prev = a;
    }
}

template <typename Fn>
void for_each_block(const TridiagMatrix& m, Fn&& fn) {
    std::size_t start = 0;
    for (std::size_t i = 0; i + 1 < m.diag.size(); ++i) {
        if (m.offdiag[i] == 0.0) {
            fn(Block{m.diag.data() + start, m.offdiag.data() + start, i + 1 - start});
            start = i + 1;
        }
    }
    fn(Block{m.diag.data() + start, m.offdiag.data() + start,
             m.diag.size() - start});
}

} // namespace

std::vector<double> eigenvalues(const TridiagMatrix& m) {
    validate(m);
    std::vector<double> out;
    out.reserve(m.diag.size());
    for_each_block(m, [&](const Block& b) { block_eigenvalues(b, out); });
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t count_below(const TridiagMatrix& m, double threshold) {
    validate(m);
    if (!std::isfinite(threshold)) throw DomainError("tridiag: non-finite threshold");
    // Strict count: a threshold that collides with an eigenvalue to double
    // rounding must not include it, so the sweep runs a relative hair lower.
    double radius = 0.0;
    for (std::size_t i = 0; i < m.diag.size(); ++i) {
        double r = std::abs(m.diag[i]);
        if (i > 0) r += std::abs(m.offdiag[i - 1]);
        if (i + 1 < m.diag.size()) r += std::abs(m.offdiag[i]);
        radius = std::max(radius, r);
    }
    const double shifted =
        threshold - 1e-13 * std::max({radius, std::abs(threshold), 1.0});
    std::size_t total = 0;
    for_each_block(m, [&](const Block& b) {
        total += negcount(b, shifted, pivmin_for(b));
    });
    return total;
}

} // namespace cam
