#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "tdoa/interval.hpp"
#include "tdoa/tdoa.hpp"

namespace tdoa {

/// A contractor maps a box to a sub-box without discarding any point of
/// its associated set.
using Contractor = std::function<IntervalBox(const IntervalBox&)>;

using InclusionTestFn = std::function<BoolInterval(const IntervalBox&)>;

/// Pair of contractors: outer keeps the set, inner keeps its complement.
struct Separator {
    Contractor inner;
    Contractor outer;
};

/// Contractor that maps a box to EMPTY when the test answers FALSE and
/// leaves it untouched otherwise (binary contractor).
Contractor binary_contractor(InclusionTestFn test);

/// Separator built from an inclusion test: outer = binary contractor of
/// the test, inner = binary contractor of the complement test.
Separator separator_from_test(InclusionTestFn test);

/// System of TDoA constraints linking x in R^2 to a pseudo-distance
/// vector y in R^p; constraint i is ||x-m(i)|| - ||x-m(i+1)|| = y_i.
struct Correspondence {
    std::vector<TdoaConstraint> constraints;

    static Correspondence from_microphones(const std::vector<Vec2>& mics);
    std::size_t y_dim() const { return constraints.size(); }
    /// Componentwise global range of y over all of R^2.
    IntervalBox global_y_box() const;
    /// Pointwise image F(x).
    std::vector<double> eval(Vec2 x) const;
};

/// Contracts (xbox, ybox) against the correspondence: each y_i is
/// intersected with the exact range of constraint i over xbox; the x
/// side is binary (unchanged or EMPTY).
std::pair<IntervalBox, IntervalBox> contract_pair(const Correspondence& F,
                                                  const IntervalBox& xbox,
                                                  const IntervalBox& ybox);

/// y-projection of contract_pair.
IntervalBox forward(const Correspondence& F, const IntervalBox& xbox,
                    const IntervalBox& ybox);

/// x-projection of contract_pair.
IntervalBox backward(const Correspondence& F, const IntervalBox& xbox,
                     const IntervalBox& ybox);

struct DiskSet {
    Vec2 center;
    double radius = 0.0;
};

/// Exact verdict for box vs disk via min/max corner distances.
BoolInterval disk_test(const IntervalBox& box, const DiskSet& d);

/// Minimal binary separator for a disk.
Separator disk_separator(const DiskSet& d);

Separator sep_union(const Separator& s1, const Separator& s2);
Separator sep_intersection(const Separator& s1, const Separator& s2);

/// Separator for X = F# . Y from a separator for Y; the frame box
/// stands in for R^n in the unbounded contractor arguments.
Separator act_inverse(const Correspondence& F, const Separator& sY,
                      const IntervalBox& frame);

/// Separator for Y = F . X from a separator for X, including the
/// [[y] \ F.R^n] hull term computed from the frame's exact ranges.
Separator act_forward(const Correspondence& F, const Separator& sX,
                      const IntervalBox& frame);

}  // namespace tdoa
