#pragma once

#include <array>
#include <vector>

#include "cam/geometry.hpp"
#include "cam/rational.hpp"

namespace cam {

// Convex rational polygon with a marked vertical cut line.  Vertices are
// stored clockwise starting from the lexicographically smallest one, with
// no collinear triples; eps gives the cut direction and twist_offset the
// integer attached to this representative.
struct WeightedPolygon {
    std::vector<RationalPoint> vertices;
    Rational cut_abscissa;
    int eps;
    int twist_offset;
};

bool operator==(const WeightedPolygon& a, const WeightedPolygon& b);
bool operator!=(const WeightedPolygon& a, const WeightedPolygon& b);

// The two unwound representatives of the momentum-map image at t = 1/2
// (UnsupportedError otherwise), exact in rational arithmetic.
std::array<WeightedPolygon, 2> polygons(const SystemParams& params);

// Action of (delta, tau) with tau = vertical translation by v_shift
// composed with the shear (x,y) -> (x, y + k_shift * x): applies tau, then
// unwinds the cut by n = (eps - delta)/2, flips the sign to delta and adds
// k_shift to the twist offset.  DomainError when the result is not convex.
WeightedPolygon polygon_group_action(const WeightedPolygon& wp, int delta,
                                     int k_shift, const Rational& v_shift);

} // namespace cam
