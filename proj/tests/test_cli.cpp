#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "hopspan/cli.hpp"
#include "hopspan/io.hpp"

using namespace hopspan;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "hopspan");
    std::vector<char*> argv;
    for (std::string& a : args) argv.push_back(a.data());
    std::ostringstream out, err;
    const int code = run_cli(int(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("hopspan_cli_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("gen") {
    TempDir d;
    REQUIRE(run({"gen", "--n", "1", "--seed", "3", "--out", d / "one.json"}).code == 0);
    CHECK(parse_points(read_text_file(d / "one.json")).size() == 1);

    REQUIRE(run({"gen", "--n", "500", "--width", "10", "--height", "10", "--seed", "3", "--out", d / "a.json"}).code == 0);
    REQUIRE(run({"gen", "--n", "500", "--width", "10", "--height", "10", "--seed", "3", "--out", d / "b.json"}).code == 0);
    CHECK(read_text_file(d / "a.json") == read_text_file(d / "b.json"));
    const PointSet ps = parse_points(read_text_file(d / "a.json"));
    REQUIRE(ps.size() == 500);
    for (int i = 0; i < ps.size(); ++i)
        for (int j = i + 1; j < ps.size(); ++j) REQUIRE(distance(ps[i], ps[j]) >= 1e-6);
    CHECK(check_general_position(ps).clean());

    CHECK(run({"gen", "--n", "5"}).code == 2);  // seed required
    CHECK(run({"gen", "--n", "0", "--seed", "1"}).code == 2);
    // a gap no region can satisfy exhausts the sampling budget
    CHECK(run({"gen", "--n", "50", "--width", "1", "--height", "1", "--min-gap", "0.5", "--seed", "1"}).code == 1);
}

TEST_CASE("build, verify and render a two-point instance") {
    TempDir d;
    write_text_file(d / "two.txt", "0.2 0.2\n1.1 0.2\n");
    REQUIRE(run({"build", "--in", d / "two.txt", "--out", d / "plane.json"}).code == 0);
    const Json plane = Json::parse(read_text_file(d / "plane.json"));
    CHECK(plane["dt_edges"].size() + plane["attachment_edges"].size() == 1);
    CHECK(plane["stats"]["max_hops"] == 1);

    REQUIRE(run({"build", "--kind", "hex", "--in", d / "two.txt", "--out", d / "hex.json"}).code == 0);
    const Json hex = Json::parse(read_text_file(d / "hex.json"));
    CHECK(hex["star_edges"].size() + hex["link_edges"].size() == 1);

    Run v = run({"verify", "--in", d / "two.txt", "--spanner", d / "plane.json"});
    CHECK(v.code == 0);
    CHECK(v.out.find("planarity: PASS") != std::string::npos);
    CHECK(run({"verify", "--in", d / "two.txt", "--spanner", d / "hex.json"}).code == 0);

    REQUIRE(run({"render", "--in", d / "two.txt", "--spanner", d / "plane.json", "--svg", d / "a.svg"}).code == 0);
    const std::string svg = read_text_file(d / "a.svg");
    std::size_t lines = 0;
    for (std::size_t at = svg.find("<line"); at != std::string::npos; at = svg.find("<line", at + 1)) ++lines;
    CHECK(lines == 1);
    CHECK(svg.find("<svg") != std::string::npos);
}

TEST_CASE("verify catches broken spanners") {
    TempDir d;
    REQUIRE(run({"gen", "--n", "300", "--width", "8", "--height", "8", "--seed", "5", "--out", d / "p.json"}).code == 0);
    REQUIRE(run({"build", "--in", d / "p.json", "--out", d / "s.json"}).code == 0);
    REQUIRE(run({"verify", "--in", d / "p.json", "--spanner", d / "s.json", "--out", d / "r.json"}).code == 0);
    CHECK(Json::parse(read_text_file(d / "r.json"))["ok"] == true);

    SUBCASE("tight bound") {
        const Run r = run({"verify", "--in", d / "p.json", "--spanner", d / "s.json", "--checks", "stretch",
                           "--bound", "1", "--out", d / "r1.json"});
        CHECK(r.code == 1);
        const Json rep = Json::parse(read_text_file(d / "r1.json"));
        CHECK(rep["checks"]["stretch"]["ok"] == false);
        CHECK(!rep["checks"]["stretch"]["violating_edges"].empty());
    }
    SUBCASE("injected crossing") {
        const PointSet ps = parse_points(read_text_file(d / "p.json"));
        Json s = Json::parse(read_text_file(d / "s.json"));
        // find two disjoint dt edges whose endpoint swap gives a crossing edge
        bool done = false;
        for (const auto& e : s["dt_edges"]) {
            for (const auto& f : s["dt_edges"]) {
                const int a = e[0], b = e[1], c = f[0], g = f[1];
                if (done || a == c || a == g || b == c || b == g) continue;
                if (segments_properly_cross(ps[a], ps[c], ps[b], ps[g])) {
                    s["dt_edges"].push_back({std::min(a, c), std::max(a, c)});
                    done = true;
                }
            }
        }
        REQUIRE(done);
        write_text_file(d / "bad.json", dump(s));
        const Run r = run({"verify", "--in", d / "p.json", "--spanner", d / "bad.json", "--checks", "planarity",
                           "--out", d / "r2.json"});
        CHECK(r.code == 1);
        CHECK(r.out.find("planarity: FAIL") != std::string::npos);
        const Json rep = Json::parse(read_text_file(d / "r2.json"));
        CHECK(!rep["checks"]["planarity"]["pairs"].empty());
    }
    SUBCASE("mismatched points") {
        REQUIRE(run({"gen", "--n", "300", "--width", "8", "--height", "8", "--seed", "6", "--out", d / "q.json"}).code == 0);
        CHECK(run({"verify", "--in", d / "q.json", "--spanner", d / "s.json"}).code == 2);
    }
    SUBCASE("usage errors") {
        CHECK(run({"verify", "--in", d / "p.json", "--spanner", d / "s.json", "--checks", "bogus"}).code == 2);
        CHECK(run({"verify", "--in", d / "missing.json", "--spanner", d / "s.json"}).code == 2);
        CHECK(run({"frobnicate"}).code == 2);
        CHECK(run({}).code == 2);
    }
}

TEST_CASE("jittered build") {
    TempDir d;
    write_text_file(d / "line.txt", "0 0\n0.5 0\n1 0\n1.5 0\n");
    CHECK(run({"build", "--in", d / "line.txt", "--jitter", "--out", d / "s.json"}).code == 2);
    const Run r = run({"build", "--in", d / "line.txt", "--jitter", "--seed", "4", "--jittered-out",
                       d / "j.json", "--out", d / "s.json"});
    REQUIRE(r.code == 0);
    CHECK(r.err.find("not in general position") != std::string::npos);
    CHECK(run({"verify", "--in", d / "j.json", "--spanner", d / "s.json"}).code == 0);
}

TEST_CASE("lemmas") {
    TempDir d;
    const Run r = run({"lemmas", "--suite", "diskcell", "--trials", "10000", "--seed", "7", "--out", d / "l.json"});
    CHECK(r.code == 0);
    CHECK(Json::parse(read_text_file(d / "l.json"))["ok"] == true);
    const Run p = run({"lemmas", "--suite", "delaunaypath", "--trials", "200", "--seed", "7"});
    CHECK(p.code == 0);
    CHECK(p.out.find("delaunaypath.disk_through_pq: PASS") != std::string::npos);
    CHECK(p.out.find("delaunaypath.diametral_truncated: PASS") != std::string::npos);
    CHECK(run({"lemmas", "--suite", "nope", "--seed", "7"}).code == 2);
    CHECK(run({"lemmas", "--suite", "triplet"}).code == 2);
}
