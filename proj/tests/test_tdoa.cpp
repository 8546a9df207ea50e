#include <doctest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "tdoa/tdoa.hpp"

using namespace tdoa;

namespace {
const TdoaConstraint kPaper{{-1, -2}, {2, 3}};  // ||a-b|| = sqrt(34)

struct RandomConfig {
    TdoaConstraint c;
    IntervalBox box;
};

RandomConfig random_config(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> F(-10.0, 10.0);
    std::uniform_real_distribution<double> W(0.01, 20.0);
    std::uniform_real_distribution<double> U01(0.0, 1.0);
    RandomConfig rc;
    do {
        rc.c = TdoaConstraint{{F(rng), F(rng)}, {F(rng), F(rng)}};
    } while (rc.c.focal_distance() < 1e-3);
    std::vector<Interval> dims;
    for (int i = 0; i < 2; ++i) {
        const double w = W(rng);
        const double lo = -20.0 + U01(rng) * (40.0 - w);
        dims.emplace_back(lo, lo + w);
    }
    rc.box = IntervalBox(std::move(dims));
    return rc;
}
}  // namespace

TEST_CASE("tdoa_eval") {
    CHECK(tdoa_eval(kPaper.a, kPaper) == doctest::Approx(-std::sqrt(34.0)).epsilon(1e-15));
    CHECK(tdoa_eval({0.5, 0.5}, kPaper) == doctest::Approx(0.0).epsilon(1e-15));
    // independent two-norm computation
    const Vec2 x{10, 10};
    const double ref = std::sqrt(11.0 * 11.0 + 12.0 * 12.0) -
                       std::sqrt(8.0 * 8.0 + 7.0 * 7.0);
    CHECK(tdoa_eval(x, kPaper) == doctest::Approx(ref).epsilon(1e-15));
    CHECK(std::fabs(tdoa_eval(x, kPaper)) <= kPaper.focal_distance() + 1e-12);
}

TEST_CASE("phi1 / phi2") {
    const TdoaConstraint axis{{-1, 0}, {1, 0}};
    CHECK(phi1(3.0, axis).has_value());
    CHECK(*phi1(3.0, axis) == doctest::Approx(0.0));

    // equidistant abscissa: |x1-b1| == |x1-a1| at x1 = 0.5
    CHECK(!phi1(0.5, kPaper).has_value());

    // golden-section oracle on the vertical line x1 = 15
    const double x2 = *phi1(15.0, kPaper);
    auto g = [&](double t) { return tdoa_eval({15.0, t}, kPaper); };
    const auto e = oracle::extremes_1d(g, -60.0, 60.0, 4096);
    const bool matches_min = std::fabs(x2 - e.argmin) < 1e-5;
    const bool matches_max = std::fabs(x2 - e.argmax) < 1e-5;
    CHECK((matches_min || matches_max));

    const TdoaConstraint vaxis{{0, -1}, {0, 1}};
    CHECK(*phi2(3.0, vaxis) == doctest::Approx(0.0));
    CHECK(!phi2(0.5, TdoaConstraint{{-2, -1}, {3, 2}}).has_value());

    const double x1 = *phi2(-15.0, kPaper);
    auto h = [&](double t) { return tdoa_eval({t, -15.0}, kPaper); };
    const auto eh = oracle::extremes_1d(h, -60.0, 60.0, 4096);
    CHECK((std::fabs(x1 - eh.argmin) < 1e-5 || std::fabs(x1 - eh.argmax) < 1e-5));
}

TEST_CASE("critical points on the paper frame") {
    const IntervalBox frame(Interval(-15, 15), Interval(-15, 15));
    const CriticalPointSet cs = critical_points(frame, kPaper);
    for (const auto& p : cs.corners) {
        CHECK(((p.x == -15.0 || p.x == 15.0) && (p.y == -15.0 || p.y == 15.0)));
    }
    for (const auto& ep : cs.edge_points) {
        REQUIRE(ep.differentiable);
        const auto g = tdoa_grad(ep.p, kPaper);
        REQUIRE(g.has_value());
        if (ep.edge < 2)
            CHECK(std::fabs(g->y) <= 1e-9);  // vertical edge: df/dx2 = 0
        else
            CHECK(std::fabs(g->x) <= 1e-9);
    }
    // frame contains both exterior rays, so both global extrema appear
    CHECK(cs.ray_points.size() >= 2);
    for (const auto& p : cs.ray_points) {
        const bool on_edge = p.x == -15.0 || p.x == 15.0 || p.y == -15.0 || p.y == 15.0;
        CHECK(on_edge);
    }
}

TEST_CASE("critical points: no interior edge extremum") {
    // box far off to one side of both foci
    const IntervalBox box(Interval(10, 11), Interval(-0.2, 0.2));
    const CriticalPointSet cs = critical_points(box, kPaper);
    for (const auto& ep : cs.edge_points) {
        // any accepted point must genuinely be stationary on its edge
        const auto g = tdoa_grad(ep.p, kPaper);
        REQUIRE(g.has_value());
        CHECK(std::fabs(ep.edge < 2 ? g->y : g->x) <= 1e-9);
    }
    // dense edge sampling: extrema sit on corners here
    const Interval mr = minimal_range(box, kPaper);
    const Interval ref = oracle::boundary_range(box, kPaper, 4096);
    CHECK(mr.lo() == doctest::Approx(ref.lo()).epsilon(1e-9));
    CHECK(mr.hi() == doctest::Approx(ref.hi()).epsilon(1e-9));
}

TEST_CASE("box straddling the exterior ray attains +||a-b||") {
    // beyond b = (2,3) along direction (3,5): point (3.5, 5.5)
    const IntervalBox box(Interval(3, 4), Interval(5, 6));
    const Interval mr = minimal_range(box, kPaper);
    CHECK(mr.hi() == doctest::Approx(std::sqrt(34.0)).epsilon(1e-12));
}

TEST_CASE("minimal_range basics") {
    const IntervalBox frame(Interval(-15, 15), Interval(-15, 15));
    const Interval mr = minimal_range(frame, kPaper);
    CHECK(mr.lo() == doctest::Approx(-std::sqrt(34.0)).epsilon(1e-14));
    CHECK(mr.hi() == doctest::Approx(std::sqrt(34.0)).epsilon(1e-14));

    const IntervalBox far(Interval(10, 11), Interval(10, 11));
    const Interval mf = minimal_range(far, kPaper);
    const Interval ref = oracle::boundary_range(far, kPaper, 4096);
    CHECK(std::fabs(mf.lo() - ref.lo()) < 1e-6);
    CHECK(std::fabs(mf.hi() - ref.hi()) < 1e-6);

    const IntervalBox pt(Interval(0.5, 0.5), Interval(0.5, 0.5));
    CHECK(minimal_range(pt, kPaper) == Interval(0, 0));

    CHECK(minimal_range(IntervalBox::empty(2), kPaper).is_empty());

    // coincident foci
    const TdoaConstraint degenerate{{1, 1}, {1, 1}};
    CHECK(minimal_range(frame, degenerate) == Interval(0, 0));
}

TEST_CASE("natural_range basics") {
    const IntervalBox pt(Interval(3.5, 3.5), Interval(-2, -2));
    const Interval nr = natural_range(pt, kPaper);
    const double v = tdoa_eval({3.5, -2}, kPaper);
    CHECK(nr.lo() == doctest::Approx(v).epsilon(1e-12));
    CHECK(nr.hi() == doctest::Approx(v).epsilon(1e-12));

    const IntervalBox far(Interval(10, 11), Interval(10, 11));
    const Interval mr = minimal_range(far, kPaper);
    const Interval na = natural_range(far, kPaper);
    CHECK(na.lo() <= mr.lo() + 1e-12);
    CHECK(na.hi() >= mr.hi() - 1e-12);
    CHECK(na.width() > mr.width());  // strictly wider off-axis

    const IntervalBox frame(Interval(-15, 15), Interval(-15, 15));
    const Interval nf = natural_range(frame, kPaper);
    CHECK(nf.lo() <= -std::sqrt(34.0));
    CHECK(nf.hi() >= std::sqrt(34.0));
}

TEST_CASE("inclusion_test") {
    const IntervalBox frame(Interval(-15, 15), Interval(-15, 15));
    CHECK(inclusion_test(frame, Interval(-10, 10), kPaper, RangeMethod::Kkt) ==
          BoolInterval::True);
    const IntervalBox mid(Interval(0.4, 0.6), Interval(0.4, 0.6));
    CHECK(inclusion_test(mid, Interval(3, 5), kPaper, RangeMethod::Kkt) ==
          BoolInterval::False);
    CHECK(inclusion_test(frame, Interval(3, 5), kPaper, RangeMethod::Kkt) ==
          BoolInterval::Maybe);
}

TEST_CASE("exactness and dominance on random configurations") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> U01(0.0, 1.0);
    for (int k = 0; k < 200; ++k) {
        const RandomConfig rc = random_config(rng);
        const Interval mr = minimal_range(rc.box, rc.c);
        const Interval ref = oracle::boundary_range(rc.box, rc.c, 1024);
        REQUIRE(std::fabs(mr.lo() - ref.lo()) < 1e-6);
        REQUIRE(std::fabs(mr.hi() - ref.hi()) < 1e-6);
        for (int i = 0; i < 1000; ++i) {
            const Vec2 p{rc.box[0].lo() + U01(rng) * rc.box[0].width(),
                         rc.box[1].lo() + U01(rng) * rc.box[1].width()};
            const double v = tdoa_eval(p, rc.c);
            REQUIRE(v >= mr.lo() - 1e-9);
            REQUIRE(v <= mr.hi() + 1e-9);
        }
        const Interval na = natural_range(rc.box, rc.c);
        REQUIRE(na.lo() <= mr.lo() + 1e-12);
        REQUIRE(na.hi() >= mr.hi() - 1e-12);
    }
}

TEST_CASE("stationarity certificates vs finite differences") {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 300; ++k) {
        const RandomConfig rc = random_config(rng);
        const CriticalPointSet cs = critical_points(rc.box, rc.c);
        for (const auto& ep : cs.edge_points) {
            if (!ep.differentiable) continue;
            const auto g = tdoa_grad(ep.p, rc.c);
            REQUIRE(g.has_value());
            const double analytic = ep.edge < 2 ? g->y : g->x;
            REQUIRE(std::fabs(analytic) <= 1e-9);
            const double h = 1e-6;
            double fd;
            if (ep.edge < 2)
                fd = (tdoa_eval({ep.p.x, ep.p.y + h}, rc.c) -
                      tdoa_eval({ep.p.x, ep.p.y - h}, rc.c)) / (2 * h);
            else
                fd = (tdoa_eval({ep.p.x + h, ep.p.y}, rc.c) -
                      tdoa_eval({ep.p.x - h, ep.p.y}, rc.c)) / (2 * h);
            REQUIRE(std::fabs(fd - analytic) <= 1e-4);
        }
    }
}

TEST_CASE("focus swap antisymmetry is exact") {
    std::mt19937_64 rng(31);
    for (int k = 0; k < 300; ++k) {
        const RandomConfig rc = random_config(rng);
        const Interval r1 = minimal_range(rc.box, rc.c);
        const Interval r2 = minimal_range(rc.box, TdoaConstraint{rc.c.b, rc.c.a});
        REQUIRE(r1.lo() == -r2.hi());
        REQUIRE(r1.hi() == -r2.lo());
    }
}

TEST_CASE("translation equivariance") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> T(-5.0, 5.0);
    for (int k = 0; k < 200; ++k) {
        const RandomConfig rc = random_config(rng);
        const Vec2 t{T(rng), T(rng)};
        const TdoaConstraint ct{rc.c.a + t, rc.c.b + t};
        const IntervalBox bt(
            Interval(rc.box[0].lo() + t.x, rc.box[0].hi() + t.x),
            Interval(rc.box[1].lo() + t.y, rc.box[1].hi() + t.y));
        const Interval r1 = minimal_range(rc.box, rc.c);
        const Interval r2 = minimal_range(bt, ct);
        REQUIRE(std::fabs(r1.lo() - r2.lo()) <= 1e-12 * (1.0 + std::fabs(r1.lo())));
        REQUIRE(std::fabs(r1.hi() - r2.hi()) <= 1e-12 * (1.0 + std::fabs(r1.hi())));
    }
}

TEST_CASE("degenerate boxes stay total") {
    // vertical segment
    const IntervalBox seg(Interval(4, 4), Interval(-3, 3));
    const Interval mr = minimal_range(seg, kPaper);
    const Interval ref = oracle::boundary_range(seg, kPaper, 4096);
    CHECK(std::fabs(mr.lo() - ref.lo()) < 1e-6);
    CHECK(std::fabs(mr.hi() - ref.hi()) < 1e-6);
    // point box at a focus
    const IntervalBox pb(Interval(-1, -1), Interval(-2, -2));
    CHECK(minimal_range(pb, kPaper) ==
          Interval(-kPaper.focal_distance(), -kPaper.focal_distance()));
}
