#include <doctest.h>

#include "hopspan/io.hpp"
#include "hopspan/random.hpp"

using namespace hopspan;

namespace {

PointSet random_set(std::uint64_t seed, int n, double side) {
    Rng rng(seed);
    std::vector<Point2> p;
    for (int i = 0; i < n; ++i) p.push_back({rng.uniform(-side, side), rng.uniform(-side, side)});
    return PointSet(std::move(p));
}

}  // namespace

TEST_CASE("points round-trip bit for bit") {
    std::vector<Point2> p = random_set(81, 300, 20).points;
    p.push_back({0x1.fffffffffffffp-1, -0x1.0p-1074});
    p.push_back({1e300, -0.0});
    const PointSet ps(p);
    const PointSet back = parse_points(points_to_json(ps));
    REQUIRE(back.size() == ps.size());
    for (int i = 0; i < ps.size(); ++i) {
        CHECK(std::bit_cast<std::uint64_t>(back[i].x) == std::bit_cast<std::uint64_t>(ps[i].x));
        CHECK(std::bit_cast<std::uint64_t>(back[i].y) == std::bit_cast<std::uint64_t>(ps[i].y));
    }
    CHECK(points_fingerprint(back) == points_fingerprint(ps));
}

TEST_CASE("accepted point formats") {
    const PointSet a = parse_points(R"({"points": [[0.5, "0x1.8p+0"], ["-2", 3]]})");
    CHECK(a.points == std::vector<Point2>{{0.5, 1.5}, {-2, 3}});
    const PointSet b = parse_points("# header\n0.5 1.5\n\n-2 3  # trailing\n");
    CHECK(b.points == a.points);
    CHECK(parse_points("0x1p-2 1e-3\n").points == std::vector<Point2>{{0.25, 1e-3}});
}

TEST_CASE("malformed point files") {
    CHECK_THROWS_AS(parse_points(R"({"points": [[1]]})"), ParseError);
    CHECK_THROWS_AS(parse_points(R"({"points": [[1, "abc"]]})"), ParseError);
    CHECK_THROWS_AS(parse_points(R"({"pts": []})"), ParseError);
    CHECK_THROWS_AS(parse_points(R"({"points": [[1, 2)"), ParseError);
    CHECK_THROWS_AS(parse_points("1 2 3\n"), ParseError);
    CHECK_THROWS_AS(parse_points("1\n"), ParseError);
    CHECK_THROWS_AS(parse_points("1 nan\n"), Error);
}

TEST_CASE("plane spanner round-trip") {
    const PointSet ps = random_set(82, 400, 6);
    const SpannerBundle b = build_plane_spanner(ps);
    const Json j = spanner_to_json(b, ps);
    CHECK(spanner_kind(j) == "plane");
    const SpannerBundle r = spanner_from_json(Json::parse(dump(j)), ps);
    CHECK(r.dt_edges == b.dt_edges);
    CHECK(r.attachment_edges == b.attachment_edges);
    CHECK(r.hub.members == b.hub.members);
    CHECK(r.grid.offset_x == b.grid.offset_x);
    CHECK(r.grid.offset_y == b.grid.offset_y);
    CHECK(r.stats.hubs == b.stats.hubs);
    CHECK(r.stats.udg_edges == b.stats.udg_edges);
    CHECK(dump(spanner_to_json(r, ps)) == dump(j));
}

TEST_CASE("hex spanner round-trip") {
    const PointSet ps = random_set(83, 300, 5);
    const HexSpanner s = build_hex_spanner(ps);
    const Json j = hex_spanner_to_json(s, ps);
    CHECK(spanner_kind(j) == "hex");
    const HexSpanner r = hex_spanner_from_json(Json::parse(dump(j)), ps);
    CHECK(r.centers == s.centers);
    CHECK(r.star_edges == s.star_edges);
    CHECK(r.link_edges == s.link_edges);
    CHECK(r.hex.offset == s.hex.offset);
}

TEST_CASE("spanner files are tied to their points") {
    const PointSet ps = random_set(84, 50, 3);
    const Json j = spanner_to_json(build_plane_spanner(ps), ps);
    std::vector<Point2> moved = ps.points;
    moved[7].x = std::nextafter(moved[7].x, 10.0);
    CHECK_THROWS_AS(spanner_from_json(j, PointSet(moved)), PreconditionError);
    moved.pop_back();
    CHECK_THROWS_AS(spanner_from_json(j, PointSet(moved)), PreconditionError);
    Json bad = j;
    bad["dt_edges"].push_back({0, 5000});
    CHECK_THROWS(spanner_from_json(bad, ps));
    CHECK_THROWS_AS(spanner_kind(Json::object()), ParseError);
}
