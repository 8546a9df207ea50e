#include "tdoa/interval.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace tdoa {

namespace {
double g_inflation = 0.0;

Interval inflate(double lo, double hi) {
    if (lo > hi) return Interval::empty();
    const double e = g_inflation;
    if (e > 0.0) {
        lo -= e * (1.0 + std::fabs(lo));
        hi += e * (1.0 + std::fabs(hi));
    }
    return Interval(lo, hi);
}

// 0 * inf = 0 under the set-image convention.
double prod(double a, double b) {
    if (a == 0.0 || b == 0.0) return 0.0;
    return a * b;
}
}  // namespace

double interval_inflation() { return g_inflation; }
void set_interval_inflation(double eps) { g_inflation = eps; }

Interval add(const Interval& a, const Interval& b) {
    if (a.is_empty() || b.is_empty()) return Interval::empty();
    return inflate(a.lo() + b.lo(), a.hi() + b.hi());
}

Interval sub(const Interval& a, const Interval& b) {
    if (a.is_empty() || b.is_empty()) return Interval::empty();
    return inflate(a.lo() - b.hi(), a.hi() - b.lo());
}

Interval neg(const Interval& a) {
    if (a.is_empty()) return Interval::empty();
    return Interval(-a.hi(), -a.lo());
}

Interval mul(const Interval& a, const Interval& b) {
    if (a.is_empty() || b.is_empty()) return Interval::empty();
    const double p[4] = {prod(a.lo(), b.lo()), prod(a.lo(), b.hi()),
                         prod(a.hi(), b.lo()), prod(a.hi(), b.hi())};
    return inflate(*std::min_element(p, p + 4), *std::max_element(p, p + 4));
}

Interval sqr(const Interval& a) {
    if (a.is_empty()) return Interval::empty();
    const double l = std::fabs(a.lo()), h = std::fabs(a.hi());
    const double m = std::max(l, h);
    const double lo = a.contains(0.0) ? 0.0 : std::min(l, h);
    return inflate(lo * lo, m * m);
}

Interval sqrt(const Interval& a) {
    const Interval d = intersect(a, Interval(0.0, kInf));
    if (d.is_empty()) return Interval::empty();
    return inflate(std::sqrt(d.lo()), std::sqrt(d.hi()));
}

Interval abs(const Interval& a) {
    if (a.is_empty()) return Interval::empty();
    const double l = std::fabs(a.lo()), h = std::fabs(a.hi());
    return Interval(a.contains(0.0) ? 0.0 : std::min(l, h), std::max(l, h));
}

Interval intersect(const Interval& a, const Interval& b) {
    if (a.is_empty() || b.is_empty()) return Interval::empty();
    const double lo = std::max(a.lo(), b.lo());
    const double hi = std::min(a.hi(), b.hi());
    if (lo > hi) return Interval::empty();
    return Interval(lo, hi);
}

Interval hull(const Interval& a, const Interval& b) {
    if (a.is_empty()) return b;
    if (b.is_empty()) return a;
    return Interval(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

Interval set_minus_hull(const Interval& y, const Interval& a) {
    if (y.is_empty()) return Interval::empty();
    if (a.is_empty() || !y.intersects(a)) return y;
    const bool left = y.lo() < a.lo();    // piece below a
    const bool right = y.hi() > a.hi();   // piece above a
    if (left && right) return y;
    if (left) return Interval(y.lo(), a.lo());
    if (right) return Interval(a.hi(), y.hi());
    return Interval::empty();  // y inside a
}

std::string to_string(const Interval& x) {
    if (x.is_empty()) return "EMPTY";
    char buf[96];
    std::snprintf(buf, sizeof buf, "[%.17g,%.17g]", x.lo(), x.hi());
    return buf;
}

IntervalBox IntervalBox::empty(std::size_t n) {
    return IntervalBox(std::vector<Interval>(n, Interval::empty()));
}

bool IntervalBox::is_empty() const {
    if (dims_.empty()) return true;
    for (const auto& d : dims_)
        if (d.is_empty()) return true;
    return false;
}

double IntervalBox::width() const {
    if (is_empty()) return 0.0;
    double w = 0.0;
    for (const auto& d : dims_) w = std::max(w, d.width());
    return w;
}

bool IntervalBox::contains(const std::vector<double>& p) const {
    if (is_empty() || p.size() != dims_.size()) return false;
    for (std::size_t i = 0; i < dims_.size(); ++i)
        if (!dims_[i].contains(p[i])) return false;
    return true;
}

bool IntervalBox::contains(const IntervalBox& o) const {
    if (o.is_empty()) return true;
    if (is_empty() || o.size() != size()) return false;
    for (std::size_t i = 0; i < dims_.size(); ++i)
        if (!dims_[i].contains(o.dims_[i])) return false;
    return true;
}

bool IntervalBox::operator==(const IntervalBox& o) const {
    if (is_empty() || o.is_empty()) return is_empty() && o.is_empty();
    if (size() != o.size()) return false;
    for (std::size_t i = 0; i < dims_.size(); ++i)
        if (dims_[i] != o.dims_[i]) return false;
    return true;
}

IntervalBox intersect(const IntervalBox& a, const IntervalBox& b) {
    std::vector<Interval> d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = intersect(a[i], b[i]);
    return IntervalBox(std::move(d));
}

IntervalBox hull(const IntervalBox& a, const IntervalBox& b) {
    if (a.is_empty()) return b;
    if (b.is_empty()) return a;
    std::vector<Interval> d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = hull(a[i], b[i]);
    return IntervalBox(std::move(d));
}

std::pair<IntervalBox, IntervalBox> bisect(const IntervalBox& box) {
    if (box.is_empty()) throw std::invalid_argument("bisect: empty box");
    std::size_t k = 0;
    double w = -1.0;
    for (std::size_t i = 0; i < box.size(); ++i) {
        if (box[i].width() > w) { w = box[i].width(); k = i; }
    }
    if (w <= 0.0) throw std::invalid_argument("bisect: degenerate box");
    const double m = box[k].mid();
    IntervalBox left = box, right = box;
    left[k] = Interval(box[k].lo(), m);
    right[k] = Interval(m, box[k].hi());
    return {left, right};
}

std::vector<IntervalBox> box_diff(const IntervalBox& box, const IntervalBox& sub) {
    std::vector<IntervalBox> out;
    if (box.is_empty()) return out;
    if (sub.is_empty()) { out.push_back(box); return out; }
    IntervalBox rem = box;
    for (std::size_t i = 0; i < box.size(); ++i) {
        if (sub[i].lo() > rem[i].lo()) {
            IntervalBox piece = rem;
            piece[i] = Interval(rem[i].lo(), sub[i].lo());
            out.push_back(piece);
        }
        if (sub[i].hi() < rem[i].hi()) {
            IntervalBox piece = rem;
            piece[i] = Interval(sub[i].hi(), rem[i].hi());
            out.push_back(piece);
        }
        rem[i] = sub[i];
    }
    return out;
}

IntervalBox box_minus_hull(const IntervalBox& box, const IntervalBox& sub) {
    if (box.is_empty()) return IntervalBox::empty(box.size());
    if (sub.is_empty()) return box;
    // The difference is the union over i of the slabs where component i
    // escapes sub; each slab's hull is box with dim i clipped.
    IntervalBox acc = IntervalBox::empty(box.size());
    for (std::size_t i = 0; i < box.size(); ++i) {
        Interval di = set_minus_hull(box[i], sub[i]);
        if (di.is_empty()) continue;
        IntervalBox piece = box;
        piece[i] = di;
        acc = hull(acc, piece);
    }
    return acc;
}

std::string to_string(const IntervalBox& b) {
    std::ostringstream os;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i) os << "x";
        os << to_string(b[i]);
    }
    return os.str();
}

std::string to_string(BoolInterval t) {
    switch (t) {
        case BoolInterval::False: return "FALSE";
        case BoolInterval::True: return "TRUE";
        default: return "MAYBE";
    }
}

}  // namespace tdoa
