#include <doctest.h>

#include <set>

#include "hopspan/random.hpp"
#include "hopspan/geom.hpp"
#include "hopspan/udg.hpp"
#include "oracles.hpp"

using namespace hopspan;

namespace {

PointSet random_set(Rng& rng, int n, double side) {
    std::vector<Point2> p;
    for (int i = 0; i < n; ++i) p.push_back({rng.uniform(0, side), rng.uniform(0, side)});
    return PointSet(std::move(p));
}

}  // namespace

TEST_CASE("unit disk graph on tiny inputs") {
    CHECK(build_udg(PointSet({{0, 0}, {0.9, 0}})).edge_count() == 1);
    CHECK(build_udg(PointSet({{0, 0}, {1.01, 0}})).edge_count() == 0);
    CHECK(build_udg(PointSet({{0, 0}, {1, 0}})).edge_count() == 1);  // inclusive
    CHECK(build_udg(PointSet({{0, 0}, {0.5, 0.5}, {0.9, 0.1}})).edge_count() == 3);
    CHECK_THROWS_AS(PointSet({{0, std::nan("")}}), PreconditionError);
}

TEST_CASE("bucketed unit disk graph equals all pairs") {
    Rng rng(21);
    for (int k = 0; k < 100; ++k) {
        const int n = 1 + static_cast<int>(rng.below(200));
        const PointSet ps = random_set(rng, n, rng.uniform(0.5, 8));
        const Graph g = build_udg(ps);
        const std::set<Edge> got(g.edges().begin(), g.edges().end());
        REQUIRE(got == oracle::udg_edges(ps.points));
    }
}

TEST_CASE("graph construction validates edges") {
    CHECK_THROWS_AS(Graph(2, {Edge(0, 2)}), PreconditionError);
    const Graph g(3, {Edge(0, 1), Edge(1, 0), Edge(1, 2)});
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(g.neighbors(1).size() == 2);
}

TEST_CASE("hop distances") {
    const PointSet chain({{0, 0}, {0.9, 0}, {1.8, 0}});
    const Graph g = build_udg(chain);
    CHECK(hop_distance(g, 0, 0) == 0);
    CHECK(hop_distance(g, 0, 2) == 2);
    CHECK(hop_distance(g, 0, 2, 1) == std::nullopt);
    const Graph split = build_udg(PointSet({{0, 0}, {5, 5}}));
    CHECK(hop_distance(split, 0, 1) == std::nullopt);
}

TEST_CASE("hop distance is a metric on random graphs") {
    Rng rng(22);
    const PointSet ps = random_set(rng, 150, 6);
    const Graph g = build_udg(ps);
    std::vector<std::vector<int>> d;
    for (int v = 0; v < ps.size(); ++v) d.push_back(bfs_hops(g, v));
    for (int i = 0; i < 3000; ++i) {
        const int a = int(rng.below(150)), b = int(rng.below(150)), c = int(rng.below(150));
        REQUIRE(d[a][b] == d[b][a]);
        if (d[a][b] == kUnboundedHops || d[b][c] == kUnboundedHops) continue;
        REQUIRE(d[a][c] <= d[a][b] + d[b][c]);
        REQUIRE(d[a][b] == oracle::bfs_hops(ps.size(), {g.edges().begin(), g.edges().end()}, a, b));
    }
}

TEST_CASE("shortest inter-cell edges") {
    const GridConfig grid{};
    SUBCASE("one cross edge") {
        const PointSet ps({{0.2, 0.2}, {0.9, 0.2}});
        const auto m = shortest_intercell_edges(ps, build_udg(ps), grid);
        REQUIRE(m.size() == 1);
        CHECK(m.begin()->second == Edge(0, 1));
    }
    SUBCASE("shorter edge wins") {
        const PointSet ps({{0.2, 0.2}, {0.65, 0.2}, {1.1, 0.2}, {1.55, 0.2}});
        // 0-2 length 0.9, 1-2 length 0.45
        const auto m = shortest_intercell_edges(ps, build_udg(ps), grid);
        CHECK(m.at(make_cell_pair({0, 0}, {1, 0})) == Edge(1, 2));
    }
    SUBCASE("ties go to the lexicographically smaller edge") {
        std::vector<Point2> p(8, Point2{30, 30});
        for (int i = 0; i < 8; ++i) p[i] = {30.0 + i * 3, 30};
        p[2] = {0.2, 0.2};
        p[7] = {0.8, 0.2};
        p[3] = {0.2, 0.5};
        p[5] = {0.8, 0.5};
        const PointSet ps(p);
        const auto m = shortest_intercell_edges(ps, build_udg(ps), grid);
        CHECK(m.at(make_cell_pair({0, 0}, {1, 0})) == Edge(2, 7));
        CHECK(shorter_edge(ps, Edge(2, 7), Edge(3, 5)));
        CHECK_FALSE(shorter_edge(ps, Edge(3, 5), Edge(2, 7)));
    }
    SUBCASE("values are short and join the claimed cells") {
        Rng rng(23);
        const PointSet ps = random_set(rng, 300, 7);
        const GridConfig g = choose_offset(ps.points);
        for (const auto& [key, e] : shortest_intercell_edges(ps, build_udg(ps), g)) {
            REQUIRE(compare_squared_distance(ps[e.u], ps[e.v], 1.0) <= 0);
            REQUIRE(make_cell_pair(cell_of(ps[e.u], g), cell_of(ps[e.v], g)) == key);
        }
    }
}

TEST_CASE("general position report") {
    auto r = check_general_position(PointSet({{0, 0}, {1, 0}, {2, 0}}));
    CHECK(r.collinear_count == 1);
    CHECK(r.cocircular_count == 0);
    r = check_general_position(PointSet({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
    CHECK(r.cocircular_count == 1);
    CHECK(r.collinear_count == 0);
    CHECK(r.cocircular.at(0) == std::array<int, 4>{0, 1, 2, 3});
    r = check_general_position(PointSet({{0, 0}, {0, 0}, {1, 1}}));
    CHECK(r.duplicate_count == 1);
    Rng rng(24);
    CHECK(check_general_position(random_set(rng, 3, 1)).clean());
    // four collinear points: C(4,3) triples
    CHECK(check_general_position(PointSet({{0, 0}, {1, 1}, {2, 2}, {5, 5}})).collinear_count == 4);
}

TEST_CASE("general position counts match brute force") {
    Rng rng(25);
    for (int k = 0; k < 20; ++k) {
        std::vector<Point2> p;
        const int n = 5 + int(rng.below(25));
        for (int i = 0; i < n; ++i) p.push_back({double(rng.below(5)), double(rng.below(5))});
        std::sort(p.begin(), p.end(), [](auto a, auto b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });
        p.erase(std::unique(p.begin(), p.end()), p.end());
        const int m = int(p.size());
        std::size_t col = 0, coc = 0;
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b)
                for (int c = b + 1; c < m; ++c) {
                    if (oracle::orient(p[a], p[b], p[c]) == 0) ++col;
                    for (int d = c + 1; d < m; ++d) {
                        const bool all_collinear = oracle::orient(p[a], p[b], p[c]) == 0 &&
                                                   oracle::orient(p[a], p[b], p[d]) == 0;
                        if (!all_collinear && oracle::incircle(p[a], p[b], p[c], p[d]) == 0) ++coc;
                    }
                }
        const auto r = check_general_position(PointSet(p));
        REQUIRE(r.collinear_count == col);
        REQUIRE(r.cocircular_count == coc);
    }
}

TEST_CASE("jitter is small, seeded and keeps the size") {
    const PointSet ps({{0, 0}, {1, 0}, {2, 0}, {3, 1}});
    const PointSet a = jitter(ps, 9), b = jitter(ps, 9), c = jitter(ps, 10);
    CHECK(a.points == b.points);
    CHECK(a.points != c.points);
    for (int i = 0; i < ps.size(); ++i) {
        CHECK(std::fabs(a[i].x - ps[i].x) <= 0x1.0p-30);
        CHECK(std::fabs(a[i].y - ps[i].y) <= 0x1.0p-30);
    }
    CHECK(check_general_position(a).collinear_count == 0);
}
