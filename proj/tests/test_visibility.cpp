#include <doctest.h>

#include "hopspan/random.hpp"
#include "hopspan/visibility.hpp"
#include "oracles.hpp"

using namespace hopspan;

TEST_CASE("single vertex and single edge") {
    const PointSet one({{0, 0}, {3, 4}});
    const std::vector<int> v{0};
    const VisibilityIndex a(one, v, {});
    CHECK(a.closest_visible({3, 4}) == 0);

    const PointSet seg({{0, 0}, {1, 0}, {0.2, 0.5}});
    const std::vector<int> vs{0, 1};
    const std::vector<Edge> es{Edge(0, 1)};
    const VisibilityIndex b(seg, vs, es);
    CHECK(b.closest_visible(seg[2]) == 0);
    CHECK(b.visible(seg[2], 1));
}

TEST_CASE("a blocked nearest vertex is skipped") {
    // v0 is nearest, but the edge v1-v2 lies between p and v0.
    const PointSet ps({{0, 0}, {-1, 0.5}, {1, 0.5}, {0, 3}, {0, 1}});
    const std::vector<int> vs{0, 1, 2, 3};
    const std::vector<Edge> es{Edge(1, 2)};
    const VisibilityIndex idx(ps, vs, es);
    CHECK_FALSE(idx.visible(ps[4], 0));
    CHECK(idx.closest_visible(ps[4]) == 1);  // v1 and v2 tie; lower index wins
    CHECK(oracle::closest_visible(ps.points, vs, es, ps[4]) == 1);
}

TEST_CASE("contact rules") {
    const PointSet ps({{0, 0}, {2, 0}, {1, 1}, {1, 0}, {4, 0}});
    const std::vector<int> vs{0, 1, 2};
    const std::vector<Edge> es{Edge(0, 1), Edge(1, 2)};
    const VisibilityIndex idx(ps, vs, es);
    // segment from (4,0) to v1 touches edge 0-1 only at v1
    CHECK(idx.visible(ps[4], 1));
    // segment from (4,0) to v0 runs along edge 0-1
    CHECK_FALSE(idx.visible(ps[4], 0));
    // a point on an edge sees nothing
    CHECK_THROWS_AS(idx.closest_visible(ps[3]), DegenerateError);
    CHECK_THROWS_AS(idx.closest_visible(ps[0]), PreconditionError);
}

TEST_CASE("closest visible vertex equals the naive oracle") {
    Rng rng(41);
    int queries = 0;
    while (queries < 1000) {
        const int n = 5 + int(rng.below(80));
        std::vector<Point2> p;
        const double side = rng.uniform(1, 6);
        for (int i = 0; i < n; ++i) p.push_back({rng.uniform(0, side), rng.uniform(0, side)});
        const PointSet ps(p);
        std::vector<int> graph, free;
        for (int i = 0; i < n; ++i) (rng.coin(0.5) ? graph : free).push_back(i);
        if (graph.empty() || free.empty()) continue;
        const TruncatedDT dt = truncate_unit(delaunay(ps, graph), ps);
        const VisibilityIndex idx(ps, graph, dt.edges);
        for (int f : free) {
            REQUIRE(idx.closest_visible(ps[f]) == oracle::closest_visible(ps.points, graph, dt.edges, ps[f]));
            REQUIRE(closest_visible_vertex(ps, ps[f], dt) == idx.closest_visible(ps[f]));
            ++queries;
        }
    }
}

TEST_CASE("visibility with far-away and long edges") {
    Rng rng(42);
    for (int k = 0; k < 30; ++k) {
        std::vector<Point2> p;
        for (int i = 0; i < 40; ++i) p.push_back({rng.uniform(0, 200), rng.uniform(0, 200)});
        const PointSet ps(p);
        std::vector<int> graph, free;
        for (int i = 0; i < 40; ++i) (i % 4 ? graph : free).push_back(i);
        // full Delaunay keeps the long edges
        const Triangulation t = delaunay(ps, graph);
        const VisibilityIndex idx(ps, graph, t.edges);
        for (int f : free) {
            REQUIRE(idx.closest_visible(ps[f]) == oracle::closest_visible(ps.points, graph, t.edges, ps[f]));
        }
    }
}
