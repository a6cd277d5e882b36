#include <doctest.h>

#include <cmath>
#include <set>

#include "hopspan/geom.hpp"
#include "hopspan/hexgrid.hpp"
#include "hopspan/random.hpp"

using namespace hopspan;

TEST_CASE("hex centres map to their cell") {
    const HexGridConfig h{{0.1, -0.2}};
    for (int q = -4; q <= 4; ++q)
        for (int r = -4; r <= 4; ++r) CHECK(hex_cell_of(h.center({q, r}), h) == HexCoord{q, r});
}

TEST_CASE("hexagons have diameter one") {
    const HexGridConfig h{};
    const auto v = h.vertices({2, -1});
    double diam = 0;
    for (const Point2& a : v)
        for (const Point2& b : v) diam = std::max(diam, distance(a, b));
    CHECK(diam == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("hex cell of random points is the nearest centre") {
    Rng rng(4);
    const HexGridConfig h{{0.37, 0.11}};
    for (int i = 0; i < 20000; ++i) {
        const Point2 p{rng.uniform(-5, 5), rng.uniform(-5, 5)};
        const HexCoord c = hex_cell_of(p, h);
        const double d = squared_distance(p, h.center(c));
        for (int dq = -2; dq <= 2; ++dq)
            for (int dr = -2; dr <= 2; ++dr) {
                if (dq == 0 && dr == 0) continue;
                REQUIRE(d < squared_distance(p, h.center(c + HexCoord{dq, dr})));
            }
    }
}

TEST_CASE("boundary points are rejected") {
    const HexGridConfig h{};
    const Point2 mid{0.5 * (h.center({0, 0}).x + h.center({1, 0}).x),
                     0.5 * (h.center({0, 0}).y + h.center({1, 0}).y)};
    CHECK_THROWS_AS(hex_cell_of(mid, h), BoundaryError);
    const std::vector<Point2> pts{mid, {0.3, 0.3}};
    const HexGridConfig g = choose_hex_offset(pts);
    CHECK_NOTHROW(hex_cell_of(mid, g));
    CHECK(hex_boundary_margin(mid, g) >= 1e-9);
}

TEST_CASE("eighteen hex neighbours") {
    CHECK(hex_neighborhood_pairs_bound() == 18);
    const auto& n = hex_neighborhood_offsets();
    const std::set<HexCoord> set(n.begin(), n.end());
    for (HexCoord d : {HexCoord{1, 0}, HexCoord{1, -1}, HexCoord{0, -1}, HexCoord{-1, 0}, HexCoord{-1, 1},
                       HexCoord{0, 1}}) {
        CHECK(set.count(d) == 1);
        CHECK(hex_cell_gap(d) == 0.0);
    }
    // second ring: 12 cells, all closer than 1
    CHECK(set.count({2, -1}) == 1);
    CHECK(set.count({2, 0}) == 1);
    CHECK(set.count({3, 0}) == 0);
    CHECK(hex_cell_gap({2, -1}) == doctest::Approx(0.5));
    CHECK(hex_cell_gap({2, 0}) == doctest::Approx(std::sqrt(3.0) / 2));
}

TEST_CASE("close pairs in distinct hex cells are within the neighbourhood") {
    Rng rng(6);
    const auto& n = hex_neighborhood_offsets();
    const std::set<HexCoord> set(n.begin(), n.end());
    const HexGridConfig h{{0.2, 0.05}};
    for (int i = 0; i < 20000; ++i) {
        const Point2 p{rng.uniform(-4, 4), rng.uniform(-4, 4)};
        const double th = rng.uniform(0, 6.283185307179586);
        const Point2 q{p.x + std::cos(th), p.y + std::sin(th)};
        const HexCoord a = hex_cell_of(p, h), b = hex_cell_of(q, h);
        if (a == b) continue;
        REQUIRE(set.count({b.q - a.q, b.r - a.r}) == 1);
    }
}
