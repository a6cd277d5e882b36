#include <doctest.h>

#include <cmath>

#include "hopspan/geom.hpp"
#include "hopspan/random.hpp"
#include "oracles.hpp"

using namespace hopspan;

TEST_CASE("orientation of small triangles") {
    CHECK(orientation({0, 0}, {1, 0}, {0, 1}) == Orientation::counterclockwise);
    CHECK(orientation({0, 0}, {1, 1}, {2, 2}) == Orientation::collinear);
    CHECK(orientation({0, 0}, {1, 0}, {0.5, -1e-12}) == Orientation::clockwise);
}

TEST_CASE("orient_sign matches rationals near degeneracy") {
    Rng rng(11);
    for (int i = 0; i < 20000; ++i) {
        const Point2 a{rng.uniform(-1, 1), rng.uniform(-1, 1)};
        const Point2 b{rng.uniform(-1, 1), rng.uniform(-1, 1)};
        // c on the line ab up to rounding, optionally nudged by a few ulps
        const double t = rng.uniform(-2, 2);
        Point2 c{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
        for (int k = static_cast<int>(rng.below(4)); k > 0; --k) c.x = std::nextafter(c.x, 2.0);
        const int expected = oracle::orient(a, b, c);
        REQUIRE(orient_sign(a, b, c) == expected);
        REQUIRE(orient_sign(b, a, c) == -expected);
        REQUIRE(orient_sign(b, c, a) == expected);
    }
}

TEST_CASE("incircle matches rationals near cocircularity") {
    Rng rng(12);
    for (int i = 0; i < 20000; ++i) {
        const double cx = rng.uniform(-1, 1), cy = rng.uniform(-1, 1), r = rng.uniform(0.1, 2);
        auto on_circle = [&] {
            const double th = rng.uniform(0, 6.283185307179586);
            return Point2{cx + r * std::cos(th), cy + r * std::sin(th)};
        };
        const Point2 a = on_circle(), b = on_circle(), c = on_circle();
        Point2 d = on_circle();
        if (rng.coin(0.5)) d.y = std::nextafter(d.y, rng.coin(0.5) ? 10.0 : -10.0);
        REQUIRE(incircle_sign(a, b, c, d) == oracle::incircle(a, b, c, d));
    }
}

TEST_CASE("in_circumcircle") {
    const Point2 a{0, 0}, b{1, 0}, c{0.5, 1};
    CHECK(in_circumcircle(a, b, c, {0.5, 0.3}) == CirclePosition::inside);
    CHECK(in_circumcircle(a, b, c, {100, 100}) == CirclePosition::outside);
    CHECK(in_circumcircle({0, 0}, {1, 0}, {0, 1}, {1, 1}) == CirclePosition::on);
    // orientation of abc does not matter
    CHECK(in_circumcircle(b, a, c, {0.5, 0.3}) == CirclePosition::inside);
    CHECK_THROWS_AS(in_circumcircle({0, 0}, {1, 1}, {2, 2}, {0, 1}), DegenerateError);
}

TEST_CASE("segments_properly_cross") {
    CHECK(segments_properly_cross(Segment({0, 0}, {1, 1}), Segment({0, 1}, {1, 0})));
    CHECK_FALSE(segments_properly_cross(Segment({0, 0}, {1, 0}), Segment({1, 0}, {2, 0})));
    CHECK(segments_properly_cross(Segment({0, 0}, {2, 0}), Segment({1, 0}, {1, 1})));
    // collinear overlap and collinear touching
    CHECK(segments_properly_cross(Segment({0, 0}, {2, 0}), Segment({1, 0}, {3, 0})));
    CHECK_FALSE(segments_properly_cross(Segment({0, 0}, {1, 0}), Segment({2, 0}, {3, 0})));
    // shared endpoint at an angle
    CHECK_FALSE(segments_properly_cross(Segment({0, 0}, {1, 0}), Segment({0, 0}, {0, 1})));
    CHECK_THROWS_AS(Segment({1, 1}, {1, 1}), DegenerateError);
}

TEST_CASE("segments_properly_cross is symmetric") {
    Rng rng(13);
    for (int i = 0; i < 5000; ++i) {
        auto pt = [&] { return Point2{double(rng.below(5)), double(rng.below(5))}; };
        const Point2 a = pt(), b = pt(), c = pt(), d = pt();
        if (a == b || c == d) continue;
        const bool x = segments_properly_cross(a, b, c, d);
        REQUIRE(x == segments_properly_cross(c, d, a, b));
        REQUIRE(x == segments_properly_cross(b, a, d, c));
    }
}

TEST_CASE("diametral disks") {
    Disk d = diametral_disk({0, 0}, {1, 0});
    CHECK(d.center == Point2{0.5, 0});
    CHECK(d.radius == 0.5);
    d = diametral_disk({0, 0}, {0, 1});
    CHECK(d.center == Point2{0, 0.5});
    d = diametral_disk({1, 1}, {2, 2});
    CHECK(d.center == Point2{1.5, 1.5});
    CHECK(d.radius == doctest::Approx(std::sqrt(2.0) / 2));
    CHECK_THROWS_AS(diametral_disk({1, 1}, {1, 1}), DegenerateError);

    Rng rng(14);
    for (int i = 0; i < 2000; ++i) {
        const Point2 p{rng.uniform(-3, 3), rng.uniform(-3, 3)}, q{rng.uniform(-3, 3), rng.uniform(-3, 3)};
        REQUIRE(in_diametral_disk(p, q, p));
        REQUIRE(in_diametral_disk(p, q, q));
        const Point2 x{rng.uniform(-3, 3), rng.uniform(-3, 3)};
        // (x-p).(x-q) <= 0 exactly
        const mpq_class f = (oracle::q(x.x) - oracle::q(p.x)) * (oracle::q(x.x) - oracle::q(q.x)) +
                            (oracle::q(x.y) - oracle::q(p.y)) * (oracle::q(x.y) - oracle::q(q.y));
        REQUIRE(in_diametral_disk(p, q, x) == (oracle::sign_of(f) <= 0));
    }
}

TEST_CASE("convex_reach_bound") {
    CHECK(convex_reach_bound(0.5, 1) == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK(convex_reach_bound(0, 1) == 0.5);
    CHECK(convex_reach_bound(1, 0.6) == doctest::Approx(std::sqrt(1.09)));
    CHECK_THROWS_AS(convex_reach_bound(-1, 1), PreconditionError);
}

TEST_CASE("squared distance comparisons are exact") {
    CHECK(compare_squared_distance({0, 0}, {1, 0}, 1.0) == 0);
    CHECK(compare_squared_distance({0, 0}, {std::nextafter(1.0, 2.0), 0}, 1.0) == 1);
    CHECK(compare_squared_distance({0, 0}, {0.6, 0.8}, {0, 0}, {0.8, 0.6}) == 0);
    Rng rng(15);
    for (int i = 0; i < 5000; ++i) {
        const Point2 a{rng.uniform(-1, 1), rng.uniform(-1, 1)}, b{rng.uniform(-1, 1), rng.uniform(-1, 1)};
        Point2 c = b;
        c.x = std::nextafter(c.x, rng.coin(0.5) ? 5.0 : -5.0);
        const int expected = oracle::sign_of(oracle::sq_dist(a, b) - oracle::sq_dist(a, c));
        REQUIRE(compare_squared_distance(a, b, a, c) == expected);
    }
}
