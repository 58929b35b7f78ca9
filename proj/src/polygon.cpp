#include "cam/polygon.hpp"

#include <algorithm>
#include <cmath>

#include "cam/errors.hpp"

namespace cam {

namespace {

Rational cross(const RationalPoint& o, const RationalPoint& a,
               const RationalPoint& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool lex_less(const RationalPoint& a, const RationalPoint& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

// Canonical form: drop collinear vertices, orient clockwise, start at the
// lexicographically smallest vertex.  DomainError when not strictly convex.
std::vector<RationalPoint> canonical_cw(std::vector<RationalPoint> vs) {
    const Rational zero(0);

    // Drop repeated and collinear vertices (cyclically) until stable.
    bool changed = true;
    while (changed && vs.size() > 2) {
        changed = false;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            const std::size_t prev = (i + vs.size() - 1) % vs.size();
            const std::size_t next = (i + 1) % vs.size();
            if (vs[i] == vs[next] ||
                cross(vs[prev], vs[i], vs[next]) == zero) {
                vs.erase(vs.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    if (vs.size() < 3) throw DomainError("polygon: fewer than three vertices");

    Rational area(0);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const auto& a = vs[i];
        const auto& b = vs[(i + 1) % vs.size()];
        area = area + (a.x * b.y - b.x * a.y);
    }
    if (area > zero) std::reverse(vs.begin(), vs.end());

    const auto smallest = std::min_element(vs.begin(), vs.end(), lex_less);
    std::rotate(vs.begin(), smallest, vs.end());

    for (std::size_t i = 0; i < vs.size(); ++i) {
        const auto& o = vs[i];
        const auto& a = vs[(i + 1) % vs.size()];
        const auto& b = vs[(i + 2) % vs.size()];
        if (!(cross(o, a, b) < zero))
            throw DomainError("polygon: vertices are not strictly convex");
    }
    return vs;
}

}  // namespace

bool operator==(const WeightedPolygon& a, const WeightedPolygon& b) {
    return a.vertices == b.vertices && a.cut_abscissa == b.cut_abscissa &&
           a.eps == b.eps && a.twist_offset == b.twist_offset;
}

bool operator!=(const WeightedPolygon& a, const WeightedPolygon& b) {
    return !(a == b);
}

std::array<WeightedPolygon, 2> polygons(const SystemParams& params) {
    if (std::abs(params.t - 0.5) > 1e-12)
        throw UnsupportedError("polygon: representatives computed at t=1/2 only");
    const Rational r1 = Rational::from_double(params.r1);
    const Rational r2 = Rational::from_double(params.r2);
    const Rational zero(0);
    const Rational height = Rational(2) * r1;

    WeightedPolygon upper;
    upper.vertices = {{-(r1 + r2), zero},
                      {r1 - r2, height},
                      {r1 + r2, height},
                      {r2 - r1, zero}};
    upper.cut_abscissa = r1 - r2;
    upper.eps = 1;
    upper.twist_offset = 0;

    WeightedPolygon lower;
    lower.vertices = {{-(r1 + r2), zero},
                      {r1 + r2, zero},
                      {r2 - r1, -height},
                      {r1 - r2, -height}};
    lower.cut_abscissa = r1 - r2;
    lower.eps = -1;
    lower.twist_offset = -1;

    upper.vertices = canonical_cw(upper.vertices);
    lower.vertices = canonical_cw(lower.vertices);
    return {upper, lower};
}

WeightedPolygon polygon_group_action(const WeightedPolygon& wp, int delta,
                                     int k_shift, const Rational& v_shift) {
    if (delta != 1 && delta != -1)
        throw DomainError("polygon: cut sign must be +1 or -1");
    if (wp.eps != 1 && wp.eps != -1)
        throw DomainError("polygon: input cut sign must be +1 or -1");

    const Rational lambda = wp.cut_abscissa;
    const Rational shear(k_shift);
    const int n = (wp.eps - delta) / 2;

    std::vector<RationalPoint> vs;
    vs.reserve(wp.vertices.size() + 2);
    for (const auto& v : wp.vertices)
        vs.push_back({v.x, shear * v.x + v.y + v_shift});

    // The unwinding is piecewise linear with a kink on the cut line; edges
    // crossing it gain a vertex there so they map to edge pairs.
    if (n != 0) {
        std::vector<RationalPoint> with_cuts;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            const auto& a = vs[i];
            const auto& b = vs[(i + 1) % vs.size()];
            with_cuts.push_back(a);
            const bool spans = (a.x < lambda && lambda < b.x) ||
                               (b.x < lambda && lambda < a.x);
            if (spans) {
                const Rational y =
                    a.y + (b.y - a.y) * (lambda - a.x) / (b.x - a.x);
                with_cuts.push_back({lambda, y});
            }
        }
        vs = std::move(with_cuts);
        const Rational jump(n);
        for (auto& v : vs)
            if (v.x > lambda) v.y = v.y + jump * (v.x - lambda);
    }

    WeightedPolygon out;
    out.vertices = canonical_cw(std::move(vs));
    out.cut_abscissa = lambda;
    out.eps = delta;
    out.twist_offset = wp.twist_offset + k_shift;
    return out;
}

} // namespace cam
