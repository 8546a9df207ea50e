#pragma once

#include <array>
#include <optional>
#include <vector>

#include "tdoa/interval.hpp"

namespace tdoa {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
double norm(Vec2 v);

/// Pair of foci (a,b) defining f(x) = ||x-a|| - ||x-b||. The range of f
/// over the whole plane is [-||a-b||, +||a-b||].
struct TdoaConstraint {
    Vec2 a;
    Vec2 b;
    double focal_distance() const { return norm(a - b); }
    bool coincident() const;
};

/// f(x) = ||x-a|| - ||x-b||. Defined everywhere, including at the foci.
double tdoa_eval(Vec2 x, const TdoaConstraint& c);

/// Analytic gradient of f; undefined (returns nullopt) at a focus.
std::optional<Vec2> tdoa_grad(Vec2 x, const TdoaConstraint& c);

/// Critical ordinate x2 on a vertical edge at abscissa x1: solves
/// df/dx2 = 0 subject to the sign condition checked by the caller.
/// nullopt when the denominator |x1-b1|-|x1-a1| vanishes (relative
/// threshold 1e-12*(1+|x1|)).
std::optional<double> phi1(double x1, const TdoaConstraint& c);

/// Symmetric counterpart on horizontal edges (abscissa from ordinate).
std::optional<double> phi2(double x2, const TdoaConstraint& c);

// Edge ids: 0 = left (x1 = lo), 1 = right, 2 = bottom (x2 = lo), 3 = top.
struct EdgePoint {
    Vec2 p;
    int edge = 0;
    bool differentiable = true;  // false when p coincides with a focus
};

struct CriticalPointSet {
    std::array<Vec2, 4> corners{};
    std::vector<EdgePoint> edge_points;  // stationary points on edges
    std::vector<Vec2> ray_points;        // boundary hits of the exterior half-lines
    bool coincident_foci = false;
};

/// Candidate extremum locations of f over a 2-D box: the corners, the
/// stationary edge points (sign condition enforced), and the crossings
/// of the exterior half-lines of the focal axis with the box boundary.
CriticalPointSet critical_points(const IntervalBox& box, const TdoaConstraint& c);

/// Exact range of f over the box: hull of f over the critical points.
/// Coincident foci yield [0,0]; EMPTY in, EMPTY out.
Interval minimal_range(const IntervalBox& box, const TdoaConstraint& c);

/// Natural interval extension of f; always contains minimal_range.
Interval natural_range(const IntervalBox& box, const TdoaConstraint& c);

enum class RangeMethod { Kkt, Natural };

/// FALSE when range([x]) misses [y], TRUE when range([x]) is inside [y],
/// MAYBE otherwise. Minimal when method is Kkt.
BoolInterval inclusion_test(const IntervalBox& box, const Interval& y,
                            const TdoaConstraint& c, RangeMethod method);

}  // namespace tdoa
