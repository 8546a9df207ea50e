#include "tdoa/tdoa.hpp"

#include <algorithm>
#include <cmath>

namespace tdoa {

namespace {
constexpr double kSignSlack = 1e-12;   // relaxed sign-condition threshold
constexpr double kRayTol = 1e-12;      // slack on the exterior parameter

double clamp(double v, double lo, double hi) { return std::min(std::max(v, lo), hi); }

bool near_focus(Vec2 p, const TdoaConstraint& c) {
    return norm(p - c.a) < 1e-12 || norm(p - c.b) < 1e-12;
}

// Newton polish of the vertical-edge stationarity equation df/dx2 = 0
// at fixed x1, keeping x2 inside [lo,hi].
double polish_vertical(double x1, double x2, double lo, double hi,
                       const TdoaConstraint& c) {
    for (int it = 0; it < 3; ++it) {
        const double dxa = x1 - c.a.x, dya = x2 - c.a.y;
        const double dxb = x1 - c.b.x, dyb = x2 - c.b.y;
        const double da = std::hypot(dxa, dya), db = std::hypot(dxb, dyb);
        if (da < 1e-12 || db < 1e-12) break;
        const double g = dya / da - dyb / db;
        const double gp = dxa * dxa / (da * da * da) - dxb * dxb / (db * db * db);
        if (std::fabs(g) < 1e-15 || gp == 0.0) break;
        const double step = g / gp;
        if (!std::isfinite(step)) break;
        x2 = clamp(x2 - step, lo, hi);
    }
    return x2;
}

double polish_horizontal(double x2, double x1, double lo, double hi,
                         const TdoaConstraint& c) {
    TdoaConstraint sw{{c.a.y, c.a.x}, {c.b.y, c.b.x}};
    return polish_vertical(x2, x1, lo, hi, sw);
}
}  // namespace

double norm(Vec2 v) { return std::hypot(v.x, v.y); }

bool TdoaConstraint::coincident() const { return a.x == b.x && a.y == b.y; }

double tdoa_eval(Vec2 x, const TdoaConstraint& c) {
    return norm(x - c.a) - norm(x - c.b);
}

std::optional<Vec2> tdoa_grad(Vec2 x, const TdoaConstraint& c) {
    const double da = norm(x - c.a), db = norm(x - c.b);
    if (da < 1e-12 || db < 1e-12) return std::nullopt;
    return Vec2{(x.x - c.a.x) / da - (x.x - c.b.x) / db,
                (x.y - c.a.y) / da - (x.y - c.b.y) / db};
}

std::optional<double> phi1(double x1, const TdoaConstraint& c) {
    const double db = std::fabs(x1 - c.b.x);
    const double da = std::fabs(x1 - c.a.x);
    const double den = db - da;
    if (std::fabs(den) <= 1e-12 * (1.0 + std::fabs(x1))) return std::nullopt;
    return (c.a.y * db - c.b.y * da) / den;
}

std::optional<double> phi2(double x2, const TdoaConstraint& c) {
    const double db = std::fabs(x2 - c.b.y);
    const double da = std::fabs(x2 - c.a.y);
    const double den = db - da;
    if (std::fabs(den) <= 1e-12 * (1.0 + std::fabs(x2))) return std::nullopt;
    return (c.a.x * db - c.b.x * da) / den;
}

CriticalPointSet critical_points(const IntervalBox& box, const TdoaConstraint& c) {
    CriticalPointSet cs;
    cs.coincident_foci = c.coincident();
    const Interval& X1 = box[0];
    const Interval& X2 = box[1];
    cs.corners = {Vec2{X1.lo(), X2.lo()}, Vec2{X1.lo(), X2.hi()},
                  Vec2{X1.hi(), X2.lo()}, Vec2{X1.hi(), X2.hi()}};
    if (cs.coincident_foci) return cs;

    // Vertical edges: stationary ordinate from phi1, subject to the sign
    // condition (x2-a2)(x2-b2) >= 0 coming from the squared derivation.
    const double vx[2] = {X1.lo(), X1.hi()};
    for (int e = 0; e < 2; ++e) {
        if (e == 1 && vx[1] == vx[0]) break;
        if (auto x2 = phi1(vx[e], c)) {
            const double tol = 1e-9 * (1.0 + X2.width());
            if (*x2 >= X2.lo() - tol && *x2 <= X2.hi() + tol &&
                (*x2 - c.a.y) * (*x2 - c.b.y) >= -kSignSlack) {
                double v = clamp(*x2, X2.lo(), X2.hi());
                Vec2 p{vx[e], v};
                bool diff = !near_focus(p, c);
                if (diff) p.y = polish_vertical(p.x, p.y, X2.lo(), X2.hi(), c);
                cs.edge_points.push_back({p, e, diff});
            }
        }
    }
    // Horizontal edges via phi2 with the symmetric sign condition.
    const double hy[2] = {X2.lo(), X2.hi()};
    for (int e = 0; e < 2; ++e) {
        if (e == 1 && hy[1] == hy[0]) break;
        if (auto x1 = phi2(hy[e], c)) {
            const double tol = 1e-9 * (1.0 + X1.width());
            if (*x1 >= X1.lo() - tol && *x1 <= X1.hi() + tol &&
                (*x1 - c.a.x) * (*x1 - c.b.x) >= -kSignSlack) {
                double v = clamp(*x1, X1.lo(), X1.hi());
                Vec2 p{v, hy[e]};
                bool diff = !near_focus(p, c);
                if (diff) p.x = polish_horizontal(p.y, p.x, X1.lo(), X1.hi(), c);
                cs.edge_points.push_back({p, 2 + e, diff});
            }
        }
    }
    // Exterior half-lines of the focal axis (t <= 0 beyond a, t >= 1
    // beyond b) crossing the box boundary; f is constant -+||a-b|| there.
    const Vec2 d = c.b - c.a;
    for (int e = 0; e < 2; ++e) {
        if (d.x != 0.0) {
            const double t = (vx[e] - c.a.x) / d.x;
            if (t <= kRayTol || t >= 1.0 - kRayTol) {
                const double y = c.a.y + t * d.y;
                if (y >= X2.lo() && y <= X2.hi())
                    cs.ray_points.push_back({vx[e], y});
            }
        }
        if (d.y != 0.0) {
            const double t = (hy[e] - c.a.y) / d.y;
            if (t <= kRayTol || t >= 1.0 - kRayTol) {
                const double x = c.a.x + t * d.x;
                if (x >= X1.lo() && x <= X1.hi())
                    cs.ray_points.push_back({x, hy[e]});
            }
        }
    }
    return cs;
}

Interval minimal_range(const IntervalBox& box, const TdoaConstraint& c) {
    if (box.is_empty()) return Interval::empty();
    if (c.coincident()) return Interval(0.0, 0.0);
    if (box.width() == 0.0)
        return Interval::point(tdoa_eval({box[0].lo(), box[1].lo()}, c));
    const CriticalPointSet cs = critical_points(box, c);
    Interval r = Interval::empty();
    for (const Vec2& p : cs.corners) r = hull(r, Interval::point(tdoa_eval(p, c)));
    for (const EdgePoint& ep : cs.edge_points)
        r = hull(r, Interval::point(tdoa_eval(ep.p, c)));
    // f is exactly -+||a-b|| on the exterior half-lines; classify each
    // crossing by its projection onto the focal axis.
    if (!cs.ray_points.empty()) {
        const Vec2 d = c.b - c.a;
        const double dd = d.x * d.x + d.y * d.y;
        const double dist = c.focal_distance();
        for (const Vec2& p : cs.ray_points) {
            const double t = ((p.x - c.a.x) * d.x + (p.y - c.a.y) * d.y) / dd;
            r = hull(r, Interval::point(t < 0.5 ? -dist : dist));
        }
    }
    return r;
}

Interval natural_range(const IntervalBox& box, const TdoaConstraint& c) {
    if (box.is_empty()) return Interval::empty();
    const Interval dxa = sub(box[0], Interval::point(c.a.x));
    const Interval dya = sub(box[1], Interval::point(c.a.y));
    const Interval dxb = sub(box[0], Interval::point(c.b.x));
    const Interval dyb = sub(box[1], Interval::point(c.b.y));
    return sub(tdoa::sqrt(add(sqr(dxa), sqr(dya))),
               tdoa::sqrt(add(sqr(dxb), sqr(dyb))));
}

BoolInterval inclusion_test(const IntervalBox& box, const Interval& y,
                            const TdoaConstraint& c, RangeMethod method) {
    const Interval r = method == RangeMethod::Kkt ? minimal_range(box, c)
                                                  : natural_range(box, c);
    if (!r.intersects(y)) return BoolInterval::False;
    if (y.contains(r)) return BoolInterval::True;
    return BoolInterval::Maybe;
}

}  // namespace tdoa
