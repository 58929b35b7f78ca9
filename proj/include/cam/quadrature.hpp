#pragma once

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "cam/errors.hpp"

namespace cam {

struct QuadratureOptions {
    double abs_tol = 1e-11;
    double rel_tol = 0.0;
    int max_intervals = 4000;
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;      // estimated absolute error
    int evaluations = 0;
    bool converged = false;
};

namespace detail {

// Gauss-Kronrod 7-15 nodes and weights on [-1,1] (positive half; symmetric).
// Even indices of kXgk are the embedded 7-point Gauss nodes.
inline constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
inline constexpr double kWgk[8] = {
    0.0229353220105292, 0.0630920926299785, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};
inline constexpr double kWg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694};

struct Interval {
    double a, b;
    double value;
    double error;
    bool operator<(const Interval& o) const { return error < o.error; }
};

// One Gauss-Kronrod 7-15 panel. Error scaling follows the usual
// (200 |K15-G7| / resasc)^{3/2} damping so that the estimate is not
// wildly pessimistic on smooth integrands.
template <typename F>
Interval gk15(F&& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);

    const double fc = f(c);
    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    double fv[8][2];
    for (int i = 0; i < 7; ++i) {
        const double x = h * kXgk[i];
        fv[i][0] = f(c - x);
        fv[i][1] = f(c + x);
        const double sum = fv[i][0] + fv[i][1];
        resk += kWgk[i] * sum;
        if (i % 2 == 1) resg += kWg[i / 2] * sum;
    }
    const double reskh = resk * 0.5;
    double resasc = kWgk[7] * std::abs(fc - reskh);
    for (int i = 0; i < 7; ++i)
        resasc += kWgk[i] * (std::abs(fv[i][0] - reskh) + std::abs(fv[i][1] - reskh));
    resasc *= std::abs(h);

    double err = std::abs((resk - resg) * h);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    return Interval{a, b, resk * h, err};
}

} // namespace detail

// Globally adaptive Gauss-Kronrod 7-15 on [a, b]: repeatedly bisects the
// interval with the largest error estimate. Endpoint values are never
// evaluated, so integrable endpoint singularities are handled by refinement.
template <typename F>
QuadratureResult integrate(F&& f, double a, double b, QuadratureOptions opt = {}) {
    QuadratureResult res;
    if (a == b) { res.converged = true; return res; }

    std::priority_queue<detail::Interval> heap;
    heap.push(detail::gk15(f, a, b));
    res.evaluations = 15;
    double total = heap.top().value;
    double total_err = heap.top().error;

    int n_intervals = 1;
    while (total_err > std::max(opt.abs_tol, opt.rel_tol * std::abs(total)) &&
           n_intervals < opt.max_intervals) {
        const detail::Interval worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) { heap.push(worst); break; } // fp limit
        const detail::Interval left = detail::gk15(f, worst.a, mid);
        const detail::Interval right = detail::gk15(f, mid, worst.b);
        res.evaluations += 30;
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++n_intervals;
    }

    // Re-sum from the heap for a cleaner value than the running update.
    total = 0.0;
    total_err = 0.0;
    while (!heap.empty()) {
        total += heap.top().value;
        total_err += heap.top().error;
        heap.pop();
    }
    res.value = total;
    res.error = total_err;
    res.converged = total_err <= std::max(opt.abs_tol, opt.rel_tol * std::abs(total));
    return res;
}

template <typename F>
double integrate_or_throw(F&& f, double a, double b, QuadratureOptions opt = {}) {
    const QuadratureResult r = integrate(std::forward<F>(f), a, b, opt);
    if (!r.converged)
        throw ConvergenceError("quadrature did not reach tolerance (estimated error " +
                               std::to_string(r.error) + ")");
    return r.value;
}

} // namespace cam
