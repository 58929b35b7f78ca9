// End-to-end acceptance run.  Each criterion prints one PASS/FAIL line with
// its runtime; the process exits nonzero if any criterion fails.  Tolerances
// and runtime caps are fixed here on purpose: loosening them is a library
// regression, not a test problem.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cam/critical.hpp"
#include "cam/eliasson.hpp"
#include "cam/geometry.hpp"
#include "cam/invariants.hpp"
#include "cam/polygon.hpp"
#include "cam/quantum.hpp"
#include "cam/rational.hpp"
#include "cam/tridiag.hpp"
#include "oracles.hpp"

namespace {

const cam::SystemParams kRef(1.0, 2.5, 0.5);

struct Check {
    bool ok = true;
    std::string why;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            why = what;
        }
    }
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// --- 1. classification thresholds and the regime diagram ------------------

void criterion_thresholds(Check& c) {
    const auto range = cam::critical_t_range(kRef);
    const double tm = 5.0 / (2.0 * (6.0 + std::sqrt(10.0)));
    const double tp = 5.0 / (2.0 * (6.0 - std::sqrt(10.0)));
    c.expect(std::fabs(range.t_minus - tm) <= 1e-12,
             "t_minus != 5/(2(6+sqrt(10)))");
    c.expect(std::fabs(range.t_plus - tp) <= 1e-12,
             "t_plus != 5/(2(6-sqrt(10)))");

    for (int i = 0; i < 50; ++i) {
        const double t = static_cast<double>(i) / 49.0;
        const cam::SystemParams p(1.0, 2.5, t);
        const auto v0 = cam::williamson_classify(p, 0);
        const bool inside = t > tm + 1e-9 && t < tp - 1e-9;
        if (inside)
            c.expect(v0.kind == cam::CriticalKind::FocusFocus,
                     "expected focus-focus at t=" + fmt(t));
        else
            c.expect(v0.kind == cam::CriticalKind::EllipticElliptic,
                     "expected elliptic-elliptic at t=" + fmt(t));
        for (int idx = 1; idx < 4; ++idx) {
            const auto v = cam::williamson_classify(p, idx);
            c.expect(v.kind == cam::CriticalKind::EllipticElliptic,
                     "corner " + std::to_string(idx) +
                         " not elliptic-elliptic at t=" + fmt(t));
        }
    }

    for (const double t : {range.t_minus, range.t_plus}) {
        const auto v = cam::williamson_classify(cam::SystemParams(1.0, 2.5, t), 0);
        c.expect(v.kind == cam::CriticalKind::Degenerate,
                 "expected degenerate at transition t=" + fmt(t));
        c.expect(v.analytic_path, "transition not decided analytically");
    }
}

// --- 2. height invariant: closed form against quadrature ------------------

void criterion_height(Check& c) {
    for (int n = 3; n <= 20; ++n) {
        const double theta = 0.5 * n;
        const cam::SystemParams p(1.0, theta, 0.5);
        const double closed = cam::height_closed_form(p);
        const double quad = cam::height_quadrature(p);
        c.expect(std::fabs(closed - quad) <= 1e-9,
                 "closed vs quadrature gap " + fmt(std::fabs(closed - quad)) +
                     " at theta=" + fmt(theta));
    }
    const double h = cam::height_closed_form(kRef);
    c.expect(std::fabs(h - 1.136) <= 1e-3,
             "h(1, 5/2) = " + fmt(h) + ", expected 1.136 +- 1e-3");
}

// --- 3. Taylor series coefficients ----------------------------------------

void criterion_taylor(Check& c) {
    const double a2 = cam::taylor_a2(kRef);
    const double a2_exact =
        3.5 * std::log(2.0) + 3.0 * std::log(3.0) - 1.5 * std::log(5.0);
    c.expect(std::fabs(a2 - a2_exact) <= 1e-4,
             "a2 = " + fmt(a2) + ", expected " + fmt(a2_exact));
    const double a1 = cam::taylor_a1(kRef);
    c.expect(std::fabs(a1 - std::numbers::pi) <= 1e-6,
             "a1 = " + fmt(a1) + ", expected pi");
}

// --- 4. Eliasson frame at the focus-focus point ----------------------------

void criterion_frame(Check& c) {
    const auto frame = cam::eliasson_frame(kRef);
    const double b_expected[2][2] = {{1.0, 0.0}, {1.0 / 3.0, -10.0 / 3.0}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            c.expect(std::fabs(frame.b_matrix(i, j) - b_expected[i][j]) <= 1e-10,
                     "B(" + std::to_string(i) + "," + std::to_string(j) +
                         ") = " + fmt(frame.b_matrix(i, j)));
    c.expect(std::fabs(frame.alpha + 0.3) <= 1e-10, "alpha = " + fmt(frame.alpha));
    c.expect(std::fabs(frame.beta - 0.1) <= 1e-10, "beta = " + fmt(frame.beta));

    const auto pencil = cam::hessian_pencil(kRef, 0);
    Eigen::Matrix4d omega0 = Eigen::Matrix4d::Zero();
    omega0(0, 2) = 1.0;
    omega0(1, 3) = 1.0;
    omega0(2, 0) = -1.0;
    omega0(3, 1) = -1.0;
    const double residual =
        (frame.basis.transpose() * pencil.omega * frame.basis - omega0)
            .cwiseAbs()
            .maxCoeff();
    c.expect(residual <= 1e-10, "symplecticity residual " + fmt(residual));
}

// --- 5. polygon representatives and the group action -----------------------

void criterion_polygons(Check& c) {
    using cam::Rational;
    std::mt19937_64 rng(20260814);
    for (int rep = 0; rep < 10; ++rep) {
        const int n1 = 1 + static_cast<int>(rng() % 19);
        const int n2 = n1 + 1 + static_cast<int>(rng() % (20 - n1));
        const cam::SystemParams p(0.5 * n1, 0.5 * n2, 0.5);
        const Rational r1(n1, 2), r2(n2, 2);
        const Rational sum = r1 + r2, diff = r1 - r2, h = Rational(2) * r1;
        const Rational zero(0);

        const auto reps = cam::polygons(p);
        const std::string tag =
            " for (r1,r2)=(" + r1.str() + "," + r2.str() + ")";

        const std::vector<cam::RationalPoint> up = {
            {-sum, zero}, {diff, h}, {sum, h}, {-diff, zero}};
        const std::vector<cam::RationalPoint> down = {
            {-sum, zero}, {sum, zero}, {-diff, -h}, {diff, -h}};
        c.expect(reps[0].vertices == up && reps[0].eps == 1 &&
                     reps[0].twist_offset == 0 && reps[0].cut_abscissa == diff,
                 "first representative wrong" + tag);
        c.expect(reps[1].vertices == down && reps[1].eps == -1 &&
                     reps[1].twist_offset == -1 && reps[1].cut_abscissa == diff,
                 "second representative wrong" + tag);

        const auto moved = cam::polygon_group_action(reps[0], -1, -1, -sum);
        c.expect(moved == reps[1], "group action identity fails" + tag);
    }
}

// --- 6. quantum bookkeeping -------------------------------------------------

void criterion_bookkeeping(Check& c) {
    for (int n1 = 1; n1 <= 20 && c.ok; ++n1)
        for (int n2 = n1 + 1; n2 <= 20 && c.ok; ++n2)
            for (int k = 1; k <= 20; ++k) {
                const cam::QuantumParams q(
                    cam::SystemParams(0.5 * n1, 0.5 * n2, 0.5), k);
                std::size_t total = 0;
                for (std::int64_t j = 0; j < q.p1 + q.p2 - 1; ++j)
                    total += cam::assemble_block(q, static_cast<int>(j))
                                 .matrix.size();
                const auto expected =
                    static_cast<std::size_t>(k) * k * n1 * n2;  // 4 k^2 r1 r2
                if (total != expected) {
                    c.expect(false, "block dims sum to " +
                                        std::to_string(total) + ", expected " +
                                        std::to_string(expected) + " at k=" +
                                        std::to_string(k));
                    break;
                }
            }

    const auto dense = oracle::dense_operators(cam::QuantumParams(kRef, 2));
    double max_entry = 0.0;
    const std::size_t n = dense.n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double commutator = 0.0;
            for (std::size_t l = 0; l < n; ++l)
                commutator += dense.j_op[i * n + l] * dense.h_op[l * n + j] -
                              dense.h_op[i * n + l] * dense.j_op[l * n + j];
            max_entry = std::max(max_entry, std::fabs(commutator));
        }
    c.expect(max_entry <= 1e-14, "commutator max-norm " + fmt(max_entry));
}

// --- 7. tridiagonal eigensolver against the dense oracle -------------------

void criterion_eigensolver(Check& c) {
    std::mt19937_64 rng(555000111);
    std::uniform_real_distribution<double> entry(-2.0, 2.0);
    std::uniform_int_distribution<int> size_dist(1, 200);

    for (int rep = 0; rep < 100; ++rep) {
        const int n = size_dist(rng);
        cam::TridiagMatrix m;
        m.diag.resize(n);
        m.offdiag.assign(n > 0 ? n - 1 : 0, 0.0);
        for (double& d : m.diag) d = entry(rng);
        for (double& e : m.offdiag) e = entry(rng);

        double norm = 0.0;  // row-sum norm
        for (int i = 0; i < n; ++i) {
            double row = std::fabs(m.diag[i]);
            if (i > 0) row += std::fabs(m.offdiag[i - 1]);
            if (i + 1 < n) row += std::fabs(m.offdiag[i]);
            norm = std::max(norm, row);
        }

        std::vector<double> dense(static_cast<std::size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i) {
            dense[static_cast<std::size_t>(i) * n + i] = m.diag[i];
            if (i + 1 < n) {
                dense[static_cast<std::size_t>(i) * n + i + 1] = m.offdiag[i];
                dense[static_cast<std::size_t>(i + 1) * n + i] = m.offdiag[i];
            }
        }
        const auto got = cam::eigenvalues(m);
        const auto ref = oracle::jacobi_eigenvalues(dense, n);
        for (int i = 0; i < n; ++i)
            c.expect(std::fabs(got[static_cast<std::size_t>(i)] -
                               ref[static_cast<std::size_t>(i)]) <=
                         1e-12 * std::max(norm, 1.0),
                     "eigenvalue " + std::to_string(i) + " off at n=" +
                         std::to_string(n) + ", rep " + std::to_string(rep));

        // Sturm counts at probes away from the spectrum.
        std::vector<double> probes = {-norm - 1.0, norm + 1.0};
        for (int q = 1; q < 4; ++q) {
            const int i = (n * q) / 4;
            if (i + 1 < n && ref[i + 1] > ref[i])
                probes.push_back(0.5 * (ref[i] + ref[i + 1]));
        }
        for (const double theta : probes) {
            std::size_t below = 0;
            for (const double v : ref)
                if (v < theta) ++below;
            c.expect(cam::count_below(m, theta) == below,
                     "sturm count mismatch at n=" + std::to_string(n));
        }
        if (!c.ok) return;
    }
}

// --- 8. scaled kernel gap against the logarithmic law ----------------------

void criterion_gap_law(Check& c) {
    const auto frame = cam::eliasson_frame(kRef);
    const double a2 = cam::taylor_a2(kRef, frame);
    const double euler = 0.57721566490153286;

    const std::vector<int> ks = {100, 200, 400, 600, 800, 1000};
    const double cap_lo = 0.12, cap_hi = 0.06;  // at k=100 and k=1000
    double rel_first = 0.0, rel_last = 0.0;

    for (const int k : ks) {
        const cam::QuantumParams qp(kRef, k);
        const double measured = cam::min_gap_kernel(qp);
        const double law =
            3.0 * std::numbers::pi / (5.0 * (std::log(k) + 4.000842 + euler));
        const double predicted = cam::gap_law_prediction(qp, a2, frame);
        c.expect(std::fabs(predicted - law) / law <= 1e-5,
                 "prediction drifts from the closed-form law at k=" +
                     std::to_string(k));

        const double rel = std::fabs(measured - law) / law;
        // log-linear envelope between the stated caps
        const double s = (std::log(k) - std::log(100.0)) /
                         (std::log(1000.0) - std::log(100.0));
        const double cap = cap_lo + (cap_hi - cap_lo) * s;
        c.expect(rel <= cap, "relative error " + fmt(rel) + " exceeds cap " +
                                 fmt(cap) + " at k=" + std::to_string(k));
        if (k == 100) rel_first = rel;
        if (k == 1000) rel_last = rel;
    }
    c.expect(rel_last < rel_first,
             "no improvement from k=100 (" + fmt(rel_first) + ") to k=1000 (" +
                 fmt(rel_last) + ")");
}

// --- 9. Weyl counting recovers the height ----------------------------------

void criterion_weyl(Check& c) {
    for (int n = 3; n <= 20; ++n) {
        const cam::SystemParams p(1.0, 0.5 * n, 0.5);
        const double h = cam::height_closed_form(p);
        const double est = cam::weyl_height(cam::QuantumParams(p, 500));
        c.expect(std::fabs(est - h) <= 2e-2,
                 "weyl estimate " + fmt(est) + " vs height " + fmt(h) +
                     " at r2=" + fmt(0.5 * n));
    }
}

// --- 10. joint spectrum sits inside the classical image --------------------

double segment_distance(const cam::JH& p, const cam::JH& a, const cam::JH& b) {
    const double vx = b.j - a.j, vy = b.h - a.h;
    const double wx = p.j - a.j, wy = p.h - a.h;
    const double vv = vx * vx + vy * vy;
    double s = vv > 0.0 ? (wx * vx + wy * vy) / vv : 0.0;
    s = std::clamp(s, 0.0, 1.0);
    const double dx = wx - s * vx, dy = wy - s * vy;
    return std::hypot(dx, dy);
}

bool inside_closed_curve(const cam::JH& p, const std::vector<cam::JH>& curve) {
    // even-odd rule on the closed polyline (last vertex repeats the first)
    bool inside = false;
    for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
        const auto& a = curve[i];
        const auto& b = curve[i + 1];
        if ((a.h > p.h) != (b.h > p.h)) {
            const double x = a.j + (p.h - a.h) / (b.h - a.h) * (b.j - a.j);
            if (x > p.j) inside = !inside;
        }
    }
    return inside;
}

void criterion_spectrum_geometry(Check& c) {
    const auto range = cam::critical_t_range(kRef);
    const double ts[] = {0.0,           0.2, range.t_minus, 0.4, 0.5,
                         0.7, range.t_plus, 0.9,           1.0};
    const int k = 5;
    const double margin = 2.0 / k;

    for (const double t : ts) {
        const cam::SystemParams p(1.0, 2.5, t);
        const auto curve = cam::boundary_curve(p, 256);
        const auto spec = cam::joint_spectrum(cam::QuantumParams(p, k));
        for (const auto& pt : spec.points) {
            const cam::JH value{pt[0], pt[1]};
            if (inside_closed_curve(value, curve)) continue;
            double dist = 1e300;
            for (std::size_t i = 0; i + 1 < curve.size(); ++i)
                dist = std::min(dist,
                                segment_distance(value, curve[i], curve[i + 1]));
            c.expect(dist <= margin + 1e-12,
                     "point (" + fmt(value.j) + "," + fmt(value.h) + ") sits " +
                         fmt(dist) + " outside the image at t=" + fmt(t));
            if (!c.ok) return;
        }
    }
}

}  // namespace

int main() {
    struct Entry {
        const char* name;
        void (*fn)(Check&);
        double time_cap;  // seconds; 0 = uncapped
    };
    const Entry entries[] = {
        {"classification thresholds and regimes", criterion_thresholds, 1.0},
        {"height invariant closed form vs quadrature", criterion_height, 1.0},
        {"Taylor coefficients a1, a2", criterion_taylor, 10.0},
        {"Eliasson frame and B-matrix", criterion_frame, 0.0},
        {"polygon representatives and group action", criterion_polygons, 0.0},
        {"quantum block bookkeeping", criterion_bookkeeping, 0.0},
        {"tridiagonal eigensolver vs dense oracle", criterion_eigensolver, 0.0},
        {"kernel gap law", criterion_gap_law, 60.0},
        {"Weyl counting recovers the height", criterion_weyl, 120.0},
        {"joint spectrum inside the classical image", criterion_spectrum_geometry,
         0.0},
    };

    int passed = 0;
    int number = 0;
    for (const Entry& entry : entries) {
        ++number;
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            entry.fn(check);
        } catch (const std::exception& e) {
            check.expect(false, std::string("exception: ") + e.what());
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count();
        if (entry.time_cap > 0.0 && seconds > entry.time_cap) {
            check.ok = false;
            check.why = "runtime " + fmt(seconds) + "s exceeds cap " +
                        fmt(entry.time_cap) + "s";
        }
        if (check.ok) {
            ++passed;
            std::printf("[PASS] %2d. %s (%.2fs)\n", number, entry.name, seconds);
        } else {
            std::printf("[FAIL] %2d. %s (%.2fs): %s\n", number, entry.name,
                        seconds, check.why.c_str());
        }
        std::fflush(stdout);
    }
    std::printf("%d/10 criteria passed\n", passed);
    return passed == 10 ? 0 : 1;
}
