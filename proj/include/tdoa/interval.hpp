#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tdoa {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Optional outward inflation applied to every arithmetic result
// (relative, per endpoint). Default 0: plain double endpoints.
double interval_inflation();
void set_interval_inflation(double eps);

/// Closed real interval with extended endpoints. EMPTY is a first-class
/// value (lo > hi) and is absorbing under intersection and arithmetic.
class Interval {
public:
    Interval() : lo_(kInf), hi_(-kInf) {}
    Interval(double lo, double hi) : lo_(lo), hi_(hi) {
        if (std::isnan(lo) || std::isnan(hi)) { lo_ = kInf; hi_ = -kInf; }
    }

    static Interval empty() { return Interval(); }
    static Interval entire() { return Interval(-kInf, kInf); }
    static Interval point(double v) { return Interval(v, v); }

    bool is_empty() const { return lo_ > hi_; }
    double lo() const { return lo_; }
    double hi() const { return hi_; }
    double width() const { return is_empty() ? 0.0 : hi_ - lo_; }
    double mid() const { return 0.5 * (lo_ + hi_); }

    bool contains(double v) const { return !is_empty() && lo_ <= v && v <= hi_; }
    bool contains(const Interval& o) const {
        return o.is_empty() || (!is_empty() && lo_ <= o.lo_ && o.hi_ <= hi_);
    }
    bool intersects(const Interval& o) const {
        return !is_empty() && !o.is_empty() && lo_ <= o.hi_ && o.lo_ <= hi_;
    }
    bool operator==(const Interval& o) const {
        if (is_empty() || o.is_empty()) return is_empty() && o.is_empty();
        return lo_ == o.lo_ && hi_ == o.hi_;
    }
    bool operator!=(const Interval& o) const { return !(*this == o); }

private:
    double lo_, hi_;
};

Interval add(const Interval& a, const Interval& b);
Interval sub(const Interval& a, const Interval& b);
Interval neg(const Interval& a);
Interval mul(const Interval& a, const Interval& b);
Interval sqr(const Interval& a);
Interval sqrt(const Interval& a);
Interval abs(const Interval& a);
Interval intersect(const Interval& a, const Interval& b);
Interval hull(const Interval& a, const Interval& b);

inline Interval operator+(const Interval& a, const Interval& b) { return add(a, b); }
inline Interval operator-(const Interval& a, const Interval& b) { return sub(a, b); }
inline Interval operator-(const Interval& a) { return neg(a); }
inline Interval operator*(const Interval& a, const Interval& b) { return mul(a, b); }

/// Interval hull of the set difference {v in y | v not in a}.
Interval set_minus_hull(const Interval& y, const Interval& a);

/// Renders as "[lo,hi]" with 17 significant digits, or "EMPTY".
std::string to_string(const Interval& x);

/// Axis-aligned box: ordered product of intervals. EMPTY iff any
/// component is EMPTY; width is the max component width (inf-norm).
class IntervalBox {
public:
    IntervalBox() = default;
    explicit IntervalBox(std::vector<Interval> dims) : dims_(std::move(dims)) {}
    IntervalBox(const Interval& x1, const Interval& x2) : dims_{x1, x2} {}

    static IntervalBox empty(std::size_t n);

    std::size_t size() const { return dims_.size(); }
    const Interval& operator[](std::size_t i) const { return dims_[i]; }
    Interval& operator[](std::size_t i) { return dims_[i]; }
    const std::vector<Interval>& dims() const { return dims_; }

    bool is_empty() const;
    double width() const;
    bool contains(const std::vector<double>& p) const;
    bool contains(const IntervalBox& o) const;
    bool operator==(const IntervalBox& o) const;

private:
    std::vector<Interval> dims_;
};

IntervalBox intersect(const IntervalBox& a, const IntervalBox& b);
IntervalBox hull(const IntervalBox& a, const IntervalBox& b);

/// Splits the widest component at its midpoint (ties: lowest index).
/// Throws std::invalid_argument on empty or zero-width boxes.
std::pair<IntervalBox, IntervalBox> bisect(const IntervalBox& box);

/// Peels box \ sub into disjoint boxes (empty list when sub == box).
/// sub must be contained in box or EMPTY.
std::vector<IntervalBox> box_diff(const IntervalBox& box, const IntervalBox& sub);

/// Smallest box enclosing {p in box | p not in sub}.
IntervalBox box_minus_hull(const IntervalBox& box, const IntervalBox& sub);

std::string to_string(const IntervalBox& b);

/// Three-valued verdict of an inclusion test: [0,0], [1,1], [0,1].
enum class BoolInterval { False, True, Maybe };

inline BoolInterval complement(BoolInterval t) {
    switch (t) {
        case BoolInterval::False: return BoolInterval::True;
        case BoolInterval::True: return BoolInterval::False;
        default: return BoolInterval::Maybe;
    }
}

std::string to_string(BoolInterval t);

}  // namespace tdoa
