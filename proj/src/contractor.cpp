#include "tdoa/contractor.hpp"

#include <cmath>
#include <stdexcept>

namespace tdoa {

Contractor binary_contractor(InclusionTestFn test) {
    return [test = std::move(test)](const IntervalBox& box) -> IntervalBox {
        if (box.is_empty()) return IntervalBox::empty(box.size());
        if (test(box) == BoolInterval::False) return IntervalBox::empty(box.size());
        return box;
    };
}

Separator separator_from_test(InclusionTestFn test) {
    InclusionTestFn comp = [test](const IntervalBox& b) { return complement(test(b)); };
    return Separator{binary_contractor(std::move(comp)),
                     binary_contractor(std::move(test))};
}

Correspondence Correspondence::from_microphones(const std::vector<Vec2>& mics) {
    if (mics.size() < 2)
        throw std::invalid_argument("correspondence needs at least 2 microphones");
    Correspondence F;
    for (std::size_t i = 0; i + 1 < mics.size(); ++i)
        F.constraints.push_back(TdoaConstraint{mics[i], mics[i + 1]});
    return F;
}

IntervalBox Correspondence::global_y_box() const {
    std::vector<Interval> d;
    d.reserve(constraints.size());
    for (const auto& c : constraints) {
        const double r = c.focal_distance();
        d.emplace_back(-r, r);
    }
    return IntervalBox(std::move(d));
}

std::vector<double> Correspondence::eval(Vec2 x) const {
    std::vector<double> y;
    y.reserve(constraints.size());
    for (const auto& c : constraints) y.push_back(tdoa_eval(x, c));
    return y;
}

std::pair<IntervalBox, IntervalBox> contract_pair(const Correspondence& F,
                                                  const IntervalBox& xbox,
                                                  const IntervalBox& ybox) {
    const std::size_t p = F.y_dim();
    if (xbox.is_empty() || ybox.is_empty())
        return {IntervalBox::empty(2), IntervalBox::empty(p)};
    std::vector<Interval> yc(p);
    for (std::size_t i = 0; i < p; ++i) {
        yc[i] = intersect(ybox[i], minimal_range(xbox, F.constraints[i]));
        if (yc[i].is_empty())
            return {IntervalBox::empty(2), IntervalBox::empty(p)};
    }
    return {xbox, IntervalBox(std::move(yc))};
}

IntervalBox forward(const Correspondence& F, const IntervalBox& xbox,
                    const IntervalBox& ybox) {
    return contract_pair(F, xbox, ybox).second;
}

IntervalBox backward(const Correspondence& F, const IntervalBox& xbox,
                     const IntervalBox& ybox) {
    return contract_pair(F, xbox, ybox).first;
}

BoolInterval disk_test(const IntervalBox& box, const DiskSet& d) {
    if (box.is_empty()) return BoolInterval::False;
    const double c[2] = {d.center.x, d.center.y};
    double dmin2 = 0.0, dmax2 = 0.0;
    for (std::size_t i = 0; i < box.size() && i < 2; ++i) {
        const double lo = box[i].lo(), hi = box[i].hi();
        const double below = c[i] - hi, above = lo - c[i];
        const double gap = std::max({below, above, 0.0});
        dmin2 += gap * gap;
        const double far = std::max(std::fabs(c[i] - lo), std::fabs(hi - c[i]));
        dmax2 += far * far;
    }
    const double r2 = d.radius * d.radius;
    if (dmin2 > r2) return BoolInterval::False;
    if (dmax2 <= r2) return BoolInterval::True;
    return BoolInterval::Maybe;
}

Separator disk_separator(const DiskSet& d) {
    return separator_from_test(
        [d](const IntervalBox& b) { return disk_test(b, d); });
}

Separator sep_union(const Separator& s1, const Separator& s2) {
    Separator s;
    s.outer = [o1 = s1.outer, o2 = s2.outer](const IntervalBox& b) {
        return hull(o1(b), o2(b));
    };
    s.inner = [i1 = s1.inner, i2 = s2.inner](const IntervalBox& b) {
        return intersect(i1(b), i2(b));
    };
    return s;
}

Separator sep_intersection(const Separator& s1, const Separator& s2) {
    Separator s;
    s.outer = [o1 = s1.outer, o2 = s2.outer](const IntervalBox& b) {
        return intersect(o1(b), o2(b));
    };
    s.inner = [i1 = s1.inner, i2 = s2.inner](const IntervalBox& b) {
        return hull(i1(b), i2(b));
    };
    return s;
}

Separator act_inverse(const Correspondence& F, const Separator& sY,
                      const IntervalBox& frame) {
    const IntervalBox yglobal = F.global_y_box();
    Separator s;
    s.outer = [F, out = sY.outer, yglobal](const IntervalBox& xbox) -> IntervalBox {
        if (xbox.is_empty()) return IntervalBox::empty(2);
        const IntervalBox yhat = forward(F, xbox, yglobal);
        if (yhat.is_empty()) return IntervalBox::empty(2);
        const IntervalBox yo = out(yhat);
        if (yo.is_empty()) return IntervalBox::empty(2);
        return backward(F, xbox, yo);
    };
    // dom F = R^2 for TDoA, so the [x]\dom term only fires for boxes
    // escaping the frame that stands in for R^2.
    s.inner = [F, in = sY.inner, yglobal, frame](const IntervalBox& xbox) -> IntervalBox {
        if (xbox.is_empty()) return IntervalBox::empty(2);
        const IntervalBox domterm = box_minus_hull(xbox, frame);
        const IntervalBox yhat = forward(F, xbox, yglobal);
        IntervalBox composed = IntervalBox::empty(2);
        if (!yhat.is_empty()) {
            const IntervalBox yi = in(yhat);
            if (!yi.is_empty()) composed = backward(F, xbox, yi);
        }
        return hull(domterm, composed);
    };
    return s;
}

Separator act_forward(const Correspondence& F, const Separator& sX,
                      const IntervalBox& frame) {
    // Hull of F . R^2 realized over the frame.
    std::vector<Interval> rng(F.y_dim());
    for (std::size_t i = 0; i < F.y_dim(); ++i)
        rng[i] = minimal_range(frame, F.constraints[i]);
    const IntervalBox rangebox(std::move(rng));
    Separator s;
    s.outer = [F, out = sX.outer, frame](const IntervalBox& ybox) -> IntervalBox {
        const std::size_t p = F.y_dim();
        if (ybox.is_empty()) return IntervalBox::empty(p);
        const IntervalBox xb = backward(F, frame, ybox);
        if (xb.is_empty()) return IntervalBox::empty(p);
        const IntervalBox xo = out(xb);
        if (xo.is_empty()) return IntervalBox::empty(p);
        return forward(F, xo, ybox);
    };
    s.inner = [F, in = sX.inner, frame, rangebox](const IntervalBox& ybox) -> IntervalBox {
        const std::size_t p = F.y_dim();
        if (ybox.is_empty()) return IntervalBox::empty(p);
        const IntervalBox diffterm = box_minus_hull(ybox, rangebox);
        IntervalBox composed = IntervalBox::empty(p);
        const IntervalBox xb = backward(F, frame, ybox);
        if (!xb.is_empty()) {
            const IntervalBox xi = in(xb);
            if (!xi.is_empty()) composed = forward(F, xi, ybox);
        }
        return hull(diffterm, composed);
    };
    return s;
}

}  // namespace tdoa
