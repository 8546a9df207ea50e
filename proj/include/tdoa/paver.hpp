#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "tdoa/contractor.hpp"
#include "tdoa/interval.hpp"

namespace tdoa {

struct PavingStats {
    std::size_t n_inside = 0;
    std::size_t n_outside = 0;
    std::size_t n_boundary = 0;
    std::size_t n_bisections = 0;
    double wall_time = 0.0;  // seconds
};

/// Classified box cover of a frame: inside / outside / boundary leaves.
struct Paving {
    std::vector<IntervalBox> inside;
    std::vector<IntervalBox> outside;
    std::vector<IntervalBox> boundary;
    double eps = 0.0;
    IntervalBox frame;
    PavingStats stats;
};

/// SIVIA-style paver: applies the separator's outer then inner
/// contractor to each box; removed portions are classified OUT / IN;
/// what remains is bisected until its width drops to eps. Output lists
/// are sorted lexicographically by lower corners, so the result is
/// deterministic regardless of thread count.
Paving pave(const Separator& s, const IntervalBox& frame, double eps,
            int threads = 1);

enum class PointClass { In, Out, Maybe };

/// Class of the leaf containing x; ties on shared faces go to the
/// lexicographically first box. Throws std::out_of_range outside frame.
PointClass paving_contains(const Paving& p, Vec2 x);

// Text format: header "# paving v1 eps=<..> frame=<..>", then one line
// per leaf: "CLASS x1lo x1hi x2lo x2hi" with 17 significant digits.
void write_paving(std::ostream& os, const Paving& p);
Paving read_paving(std::istream& is);

void write_svg(std::ostream& os, const Paving& p);
void write_svg_layers(std::ostream& os, const std::vector<Paving>& levels);

}  // namespace tdoa
