// Acceptance run: one PASS/FAIL line per criterion, plus a JSON report with
// per-instance statistics.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "hopspan/checks.hpp"
#include "hopspan/cli.hpp"
#include "hopspan/io.hpp"
#include "hopspan/random.hpp"
#include "hopspan/sparse.hpp"
#include "hopspan/visibility.hpp"
#include "oracles.hpp"

using namespace hopspan;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Line {
    int id;
    bool ok;
    std::string text;
};

std::vector<Line> lines;

void report(int id, bool ok, const std::string& text) {
    lines.push_back({id, ok, text});
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << text << std::endl;
}

struct Instance {
    int index;
    std::size_t n;
    double degree, side;
    std::uint64_t seed;
    PointSet ps;
};

std::vector<Instance> make_instances(std::uint64_t base, int count) {
    static const std::size_t ns[] = {50, 200, 500, 2000};
    static const double degs[] = {3, 8, 15};
    std::vector<Instance> out;
    for (int i = 0; i < count; ++i) {
        const std::size_t n = ns[i % 4];
        const double deg = degs[(i / 4) % 3];
        const double side = std::sqrt(double(n) * std::numbers::pi / deg);
        const std::uint64_t seed = Rng::derive(base, std::uint64_t(i));
        out.push_back({i, n, deg, side, seed, generate_points(n, side, side, seed)});
    }
    return out;
}

std::string check_line(const std::vector<CheckResult>& rs, bool& ok) {
    std::ostringstream s;
    ok = !rs.empty();
    for (const CheckResult& r : rs) {
        ok = ok && r.ok();
        s << " " << r.name << "=" << r.violations << "/" << r.trials << "(worst " << r.worst << ")";
    }
    return s.str();
}

void plane_and_hex(const std::vector<Instance>& instances, Json& out) {
    bool plane_ok = true, hex_ok = true;
    std::size_t crossings = 0, long_edges = 0, stretch_viol = 0, prop_fail = 0;
    int worst_hops = 0, worst_hubs = 0;
    double worst_2000 = 0;
    std::size_t hex_viol = 0, hex_worst_partners = 0;
    double hex_worst_ratio = 0;
    int hex_worst_hops = 0;
    Json rows = Json::array();
    for (const Instance& in : instances) {
        const auto t0 = Clock::now();
        const SpannerBundle b = build_plane_spanner(in.ps);
        const Graph udg = build_udg(in.ps);
        const PlanarityReport pl = verify_planarity(b, in.ps);
        const LengthReport ln = verify_lengths(b, in.ps);
        const PropertyReport pr = verify_properties(in.ps, udg, b.grid, b.hub);
        const StretchReport st = verify_stretch(b.graph(), udg, kPlaneStretchBound);
        const double secs = seconds_since(t0);
        if (in.n == 2000) worst_2000 = std::max(worst_2000, secs);
        crossings += pl.crossings;
        long_edges += ln.dt_violations.size() + ln.attachment_violations.size();
        stretch_viol += st.violation_count;
        if (!pr.ok()) ++prop_fail;
        worst_hops = std::max(worst_hops, st.max_hops);
        worst_hubs = std::max(worst_hubs, pr.max_per_cell);
        plane_ok = plane_ok && pl.ok() && ln.ok() && pr.ok() && st.ok();

        const HexSpanner h = build_hex_spanner(in.ps);
        const HexReport hr = verify_hex(h, in.ps);
        if (!hr.ok()) ++hex_viol;
        hex_ok = hex_ok && hr.ok();
        hex_worst_partners = std::max(hex_worst_partners, hr.max_link_partners);
        hex_worst_ratio = std::max(hex_worst_ratio, double(hr.edge_count) / double(in.n));
        hex_worst_hops = std::max(hex_worst_hops, hr.stretch.max_hops);

        rows.push_back({{"index", in.index},
                        {"n", in.n},
                        {"degree", in.degree},
                        {"side", in.side},
                        {"seed", in.seed},
                        {"udg_edges", udg.edge_count()},
                        {"hubs", b.hub.members.size()},
                        {"max_hubs_per_cell", pr.max_per_cell},
                        {"dt_edges", b.dt_edges.size()},
                        {"attachment_edges", b.attachment_edges.size()},
                        {"coverage_repairs", b.stats.coverage_repairs},
                        {"crossings", pl.crossings},
                        {"max_dt_length", std::sqrt(ln.max_dt_squared)},
                        {"max_attachment_length", std::sqrt(ln.max_attachment_squared)},
                        {"properties_ok", pr.ok()},
                        {"max_hops", st.max_hops},
                        {"stretch_violations", st.violation_count},
                        {"plane_seconds", secs},
                        {"hex_edges", hr.edge_count},
                        {"hex_cells", hr.nonempty_cells},
                        {"hex_max_hops", hr.stretch.max_hops},
                        {"hex_max_link_partners", hr.max_link_partners},
                        {"hex_ok", hr.ok()}});
    }
    out["instances"] = rows;
    const bool fast = worst_2000 < 60.0;
    std::ostringstream s1;
    s1 << instances.size() << " instances; crossings " << crossings << ", long edges " << long_edges
       << ", property failures " << prop_fail << ", stretch violations " << stretch_viol
       << " (bound 341); max hops " << worst_hops << ", max hubs/cell " << worst_hubs
       << " (bound 20); slowest n=2000 build+verify " << worst_2000 << " s (limit 60)";
    report(1, plane_ok && fast, s1.str());
    std::ostringstream s2;
    s2 << instances.size() << " instances; failing " << hex_viol << "; max edges/n " << hex_worst_ratio
       << " (bound 9, and n+8c checked per instance); max hops " << hex_worst_hops
       << " (bound 5); max link partners " << hex_worst_partners << " (bound 18)";
    report(2, hex_ok, s2.str());
}

bool oracle_equivalences(std::uint64_t seed, std::string& text) {
    Rng rng(Rng::derive(seed, 7));
    std::size_t dt_bad = 0, udg_bad = 0, vis_bad = 0, queries = 0;
    for (int k = 0; k < 100; ++k) {
        const int n = 3 + int(rng.below(38));
        std::vector<Point2> p;
        const double side = rng.uniform(0.5, 4);
        for (int i = 0; i < n; ++i) p.push_back({rng.uniform(0, side), rng.uniform(0, side)});
        const Triangulation t = delaunay(PointSet(p));
        if (std::set<Edge>(t.edges.begin(), t.edges.end()) != oracle::delaunay_edges(p)) ++dt_bad;
    }
    for (int k = 0; k < 100; ++k) {
        const int n = 1 + int(rng.below(200));
        std::vector<Point2> p;
        const double side = rng.uniform(0.5, 8);
        for (int i = 0; i < n; ++i) p.push_back({rng.uniform(0, side), rng.uniform(0, side)});
        const Graph g = build_udg(PointSet(p));
        if (std::set<Edge>(g.edges().begin(), g.edges().end()) != oracle::udg_edges(p)) ++udg_bad;
    }
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
            if (queries == 1000) break;
            ++queries;
            if (idx.closest_visible(ps[f]) != oracle::closest_visible(p, graph, dt.edges, ps[f])) ++vis_bad;
        }
    }
    std::ostringstream s;
    s << "Delaunay vs empty-circle oracle " << dt_bad << "/100 mismatches; UDG vs all-pairs " << udg_bad
      << "/100; closest visible vs full scan " << vis_bad << "/" << queries;
    text = s.str();
    return dt_bad == 0 && udg_bad == 0 && vis_bad == 0;
}

int cli(std::vector<std::string> args) {
    args.insert(args.begin(), "hopspan");
    std::vector<char*> argv;
    for (std::string& a : args) argv.push_back(a.data());
    std::ostringstream out, err;
    return run_cli(int(argv.size()), argv.data(), out, err);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

bool determinism(std::string& text) {
    const fs::path root = fs::temp_directory_path() / ("hopspan_accept_" + std::to_string(::getpid()));
    std::vector<std::string> names;
    for (int round = 0; round < 2; ++round) {
        const fs::path d = root / std::to_string(round);
        fs::create_directories(d);
        auto f = [&](const char* name) { return (d / name).string(); };
        const std::vector<std::vector<std::string>> cmds = {
            {"gen", "--n", "700", "--width", "14", "--height", "14", "--seed", "42", "--out", f("p.json")},
            {"build", "--in", f("p.json"), "--out", f("plane.json")},
            {"build", "--kind", "hex", "--in", f("p.json"), "--out", f("hex.json")},
            {"build", "--in", f("p.json"), "--jitter", "--seed", "9", "--jittered-out", f("pj.json"), "--out",
             f("plane_j.json")},
            {"verify", "--in", f("p.json"), "--spanner", f("plane.json"), "--out", f("verify.json")},
            {"verify", "--in", f("p.json"), "--spanner", f("hex.json"), "--out", f("verify_hex.json")},
            {"lemmas", "--suite", "all", "--trials", "300", "--seed", "5", "--out", f("lemmas.json")},
            {"render", "--in", f("p.json"), "--spanner", f("plane.json"), "--svg", f("plane.svg")},
            {"render", "--in", f("p.json"), "--spanner", f("hex.json"), "--svg", f("hex.svg")},
        };
        for (const auto& c : cmds) {
            if (cli(c) != 0) {
                text = "command failed: " + c[0];
                fs::remove_all(root);
                return false;
            }
        }
        if (round == 0) {
            for (const auto& e : fs::directory_iterator(d)) names.push_back(e.path().filename().string());
        }
    }
    std::size_t differing = 0;
    for (const std::string& n : names) {
        if (slurp(root / "0" / n) != slurp(root / "1" / n)) ++differing;
    }
    fs::remove_all(root);
    text = std::to_string(names.size()) + " output files from 9 commands run twice; " +
           std::to_string(differing) + " differ";
    return differing == 0 && names.size() == 10;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance run"};
    std::uint64_t seed = 20240611;
    int instances = 200;
    std::string report_path = "acceptance_report.json";
    app.add_option("--seed", seed, "base seed")->capture_default_str();
    app.add_option("--instances", instances, "number of spanner instances")->capture_default_str();
    app.add_option("--report", report_path, "per-instance JSON report")->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    Json out;
    out["seed"] = seed;
    const auto t0 = Clock::now();

    plane_and_hex(make_instances(seed, instances), out);

    bool ok;
    std::string s = check_line(check_delaunay_paths(10000, seed), ok);
    report(3, ok, "disk-confined Delaunay paths:" + s);

    s = check_line({check_visible_attachment(1000, seed)}, ok);
    report(4, ok, "closest-visible attachment:" + s);

    s = check_line({check_convex_reach(100000, seed)}, ok);
    report(5, ok, "convex reach (worst is reach/bound):" + s);

    std::vector<CheckResult> cells = check_lemma4(10000, seed);
    for (auto v : {check_lemma5(10000, seed), check_lemma6(10000, seed)}) cells.insert(cells.end(), v.begin(), v.end());
    s = check_line(cells, ok);
    for (const CheckResult& r : cells) ok = ok && r.trials >= 20000 && r.worst <= r.bound;
    report(6, ok, "disk-cell counts:" + s);

    ok = oracle_equivalences(seed, s);
    report(7, ok, s);

    ok = determinism(s);
    report(8, ok, s);

    TripletAssignment north = default_triplets();
    north[Quadrant::NW].far = {0, 2};
    TripletAssignment west = default_triplets();
    west[Quadrant::NW].far = {-2, 0};
    const bool d = verify_triplet_certificate(default_triplets());
    const bool n = verify_triplet_certificate(north);
    const bool w = verify_triplet_certificate(west);
    report(9, d && !n && !w,
           std::string("default ") + (d ? "true" : "false") + ", NW far (0,2) " + (n ? "true" : "false") +
               ", NW far (-2,0) " + (w ? "true" : "false"));

    bool all = true;
    Json crit = Json::array();
    for (const Line& l : lines) {
        all = all && l.ok;
        crit.push_back({{"criterion", l.id}, {"ok", l.ok}, {"summary", l.text}});
    }
    out["criteria"] = crit;
    out["seconds"] = seconds_since(t0);
    write_text_file(report_path, dump(out));
    std::cout << (all ? "ALL PASS" : "SOME CRITERIA FAILED") << " in " << seconds_since(t0) << " s" << std::endl;
    return all ? 0 : 1;
}
