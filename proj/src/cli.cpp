#include "hopspan/cli.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "bucket.hpp"
#include "hopspan/checks.hpp"
#include "hopspan/io.hpp"
#include "hopspan/random.hpp"
#include "hopspan/svg.hpp"

namespace hopspan {

PointSet generate_points(std::size_t n, double width, double height, std::uint64_t seed,
                         double min_gap) {
    if (n < 1) throw PreconditionError("gen: n must be at least 1");
    if (!(width > 0) || !(height > 0)) throw PreconditionError("gen: width and height must be positive");
    if (!(min_gap >= 0)) throw PreconditionError("gen: min-gap must be nonnegative");
    Rng rng(seed);
    const std::size_t budget = 100 * n;
    std::size_t drawn = 0;
    const double cell = std::max(min_gap, 0.25);
    const double gap2 = min_gap * min_gap;

    auto draw = [&]() {
        if (drawn++ >= budget) throw Error("gen: resampling exhausted after " + std::to_string(budget) + " samples");
        return Point2{rng.uniform(0.0, width), rng.uniform(0.0, height)};
    };

    std::vector<Point2> pts(n);
    std::vector<bool> pending(n, true);
    for (;;) {
        detail::BucketGrid grid;
        auto key = [&](const Point2& p) {
            return detail::BucketGrid::Key{static_cast<long>(std::floor(p.x / cell)),
                                           static_cast<long>(std::floor(p.y / cell))};
        };
        auto clear_of_others = [&](const Point2& p) {
            const auto k = key(p);
            for (long dx = -1; dx <= 1; ++dx)
                for (long dy = -1; dy <= 1; ++dy)
                    if (const auto* v = grid.find({k.x + dx, k.y + dy}))
                        for (int j : *v)
                            if (pts[j] == p || squared_distance(pts[j], p) < gap2) return false;
            return true;
        };
        for (std::size_t i = 0; i < n; ++i) {
            if (!pending[i]) grid.insert(key(pts[i]), static_cast<int>(i));
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (!pending[i]) continue;
            Point2 p = draw();
            while (!clear_of_others(p)) p = draw();
            pts[i] = p;
            pending[i] = false;
            grid.insert(key(p), static_cast<int>(i));
        }
        const GeneralPositionReport r = check_general_position(PointSet(pts));
        if (r.clean()) break;
        // Redraw the highest index of every witness.
        for (const auto& t : r.collinear) pending[t[2]] = true;
        for (const auto& q : r.cocircular) pending[q[3]] = true;
        if (r.collinear_count > r.collinear.size() || r.cocircular_count > r.cocircular.size()) {
            throw Error("gen: too many general-position violations to repair");
        }
    }
    PointSet ps(std::move(pts));
    ps.general_position_checked = true;
    return ps;
}

namespace {

Json edge_pairs(const std::vector<Edge>& edges, std::size_t limit = 50) {
    Json a = Json::array();
    for (std::size_t i = 0; i < edges.size() && i < limit; ++i) a.push_back({edges[i].u, edges[i].v});
    return a;
}

std::string pass(bool ok) { return ok ? "PASS" : "FAIL"; }

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

PointSet load_points(const std::string& path) { return parse_points(read_text_file(path)); }

Json load_json(const std::string& path) {
    try {
        return Json::parse(read_text_file(path));
    } catch (const Json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void warn_general_position(const PointSet& ps, std::ostream& err) {
    const GeneralPositionReport r = check_general_position(ps);
    if (r.clean()) return;
    err << "warning: input is not in general position (" << r.duplicate_count << " duplicates, "
        << r.collinear_count << " collinear triples, " << r.cocircular_count
        << " cocircular quadruples found)\n";
}

struct Options {
    std::string in, out, spanner, svg, kind = "plane", checks, suite = "all", jittered_out;
    std::uint64_t seed = 0;
    std::size_t n = 0, trials = 10000;
    double width = 10, height = 10, min_gap = 1e-6;
    int bound = kPlaneStretchBound;
    bool jitter = false;
};

int cmd_gen(const Options& o, std::ostream& out) {
    const PointSet ps = generate_points(o.n, o.width, o.height, o.seed, o.min_gap);
    const std::string text = points_to_json(ps);
    if (o.out.empty() || o.out == "-") {
        out << text;
    } else {
        write_text_file(o.out, text);
    }
    return kExitPass;
}

int cmd_build(const Options& o, bool seed_given, std::ostream& out, std::ostream& err) {
    PointSet ps = load_points(o.in);
    if (ps.points.empty()) throw PreconditionError("build: input has no points");
    warn_general_position(ps, err);
    if (o.jitter) {
        if (!seed_given || o.jittered_out.empty()) {
            throw PreconditionError("build: --jitter needs --seed and --jittered-out");
        }
        ps = jitter(ps, o.seed);
        write_text_file(o.jittered_out, points_to_json(ps));
    }
    Json j;
    if (o.kind == "plane") {
        SpannerBundle b = build_plane_spanner(ps);
        b.stats.max_hops = verify_stretch(b, ps, kPlaneStretchBound).max_hops;
        j = spanner_to_json(b, ps);
    } else if (o.kind == "hex") {
        const HexSpanner s = build_hex_spanner(ps);
        j = hex_spanner_to_json(s, ps);
        j["stats"]["max_hops"] = verify_stretch(s.graph(), build_udg(ps), kHexStretchBound).max_hops;
    } else {
        throw PreconditionError("build: --kind must be plane or hex");
    }
    if (o.out.empty() || o.out == "-") {
        out << dump(j);
    } else {
        write_text_file(o.out, dump(j));
    }
    return kExitPass;
}

Json stretch_json(const StretchReport& r) {
    return {{"ok", r.ok()},
            {"bound", r.bound},
            {"max_hops", r.max_hops},
            {"checked_edges", r.checked_edges},
            {"violations", r.violation_count},
            {"violating_edges", edge_pairs(r.violating_edges)}};
}

int cmd_verify(const Options& o, bool bound_given, std::ostream& out) {
    const PointSet ps = load_points(o.in);
    const Json sj = load_json(o.spanner);
    const std::string kind = spanner_kind(sj);
    std::vector<std::string> checks = split_list(o.checks);
    if (checks.empty()) {
        checks = kind == "plane" ? std::vector<std::string>{"planarity", "lengths", "stretch", "properties"}
                                 : std::vector<std::string>{"hex"};
    }
    const std::set<std::string> known = {"planarity", "lengths", "stretch", "properties", "hex"};
    for (const std::string& c : checks) {
        if (!known.count(c)) throw CLI::ValidationError("--checks", "unknown check '" + c + "'");
        if ((kind == "hex") != (c == "hex") && !(kind == "hex" && (c == "stretch" || c == "planarity"))) {
            throw CLI::ValidationError("--checks", "check '" + c + "' does not apply to a " + kind + " spanner");
        }
    }

    Json report;
    report["type"] = kind;
    bool all_ok = true;
    auto record = [&](const std::string& name, bool ok, const std::string& summary, Json detail) {
        all_ok = all_ok && ok;
        out << name << ": " << pass(ok) << " (" << summary << ")\n";
        report["checks"][name] = std::move(detail);
    };

    if (kind == "plane") {
        const SpannerBundle b = spanner_from_json(sj, ps);
        for (const std::string& c : checks) {
            if (c == "planarity") {
                const PlanarityReport r = verify_planarity(b, ps);
                Json w = Json::array();
                for (std::size_t i = 0; i < r.witnesses.size() && i < 50; ++i) {
                    const auto& [e, f] = r.witnesses[i];
                    w.push_back({{e.u, e.v}, {f.u, f.v}});
                }
                std::string s = std::to_string(r.crossings) + " crossings";
                for (std::size_t i = 0; i < r.witnesses.size() && i < 5; ++i) {
                    const auto& [e, f] = r.witnesses[i];
                    s += "; (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") x (" +
                         std::to_string(f.u) + "," + std::to_string(f.v) + ")";
                }
                record(c, r.ok(), s, {{"ok", r.ok()}, {"crossings", r.crossings}, {"pairs", w}});
            } else if (c == "lengths") {
                const LengthReport r = verify_lengths(b, ps);
                record(c, r.ok(),
                       std::to_string(r.dt_violations.size()) + " long dt edges, " +
                           std::to_string(r.attachment_violations.size()) + " long attachment edges",
                       {{"ok", r.ok()},
                        {"max_dt_length", std::sqrt(r.max_dt_squared)},
                        {"max_attachment_length", std::sqrt(r.max_attachment_squared)},
                        {"dt_violations", edge_pairs(r.dt_violations)},
                        {"attachment_violations", edge_pairs(r.attachment_violations)}});
            } else if (c == "stretch") {
                const StretchReport r = verify_stretch(b, ps, o.bound);
                record(c, r.ok(),
                       "max hops " + std::to_string(r.max_hops) + ", bound " + std::to_string(r.bound) +
                           ", " + std::to_string(r.violation_count) + " violations",
                       stretch_json(r));
            } else if (c == "properties") {
                const PropertyReport r = verify_properties(ps, build_udg(ps), b.grid, b.hub);
                Json p4 = Json::array();
                for (const SubCellId& s : r.p4_witnesses) {
                    p4.push_back({s.cell.col, s.cell.row, to_string(s.quadrant)});
                }
                record(c, r.ok(),
                       std::string("P1 ") + pass(r.p1) + " (max " + std::to_string(r.max_per_cell) +
                           " per cell), P2 " + pass(r.p2) + ", P3 " + pass(r.p3) + ", P4 " + pass(r.p4),
                       {{"ok", r.ok()},
                        {"p1", r.p1},
                        {"p2", r.p2},
                        {"p3", r.p3},
                        {"p4", r.p4},
                        {"max_hubs_per_cell", r.max_per_cell},
                        {"p2_violations", r.p2_witnesses.size()},
                        {"p3_violations", r.p3_witnesses.size()},
                        {"p4_witnesses", p4}});
            }
        }
    } else {
        const HexSpanner s = hex_spanner_from_json(sj, ps);
        for (const std::string& c : checks) {
            if (c == "hex") {
                const HexReport r = verify_hex(s, ps);
                std::ostringstream sum;
                sum << r.edge_count << " edges for " << ps.size() << " points and " << r.nonempty_cells
                    << " cells, max hops " << r.stretch.max_hops << ", max link partners "
                    << r.max_link_partners;
                record(c, r.ok(), sum.str(),
                       {{"ok", r.ok()},
                        {"edge_count", r.edge_count},
                        {"nonempty_cells", r.nonempty_cells},
                        {"within_9n", r.within_9n},
                        {"within_n_plus_8c", r.within_n_plus_8c},
                        {"edges_in_udg", r.edges_in_udg},
                        {"max_link_partners", r.max_link_partners},
                        {"stretch", stretch_json(r.stretch)}});
            } else if (c == "stretch") {
                const StretchReport r =
                    verify_stretch(s.graph(), build_udg(ps), bound_given ? o.bound : kHexStretchBound);
                record(c, r.ok(),
                       "max hops " + std::to_string(r.max_hops) + ", bound " + std::to_string(r.bound),
                       stretch_json(r));
            } else if (c == "planarity") {
                const PlanarityReport r = verify_planarity(s.all_edges(), ps);
                record(c, r.ok(), std::to_string(r.crossings) + " crossings (not claimed plane)",
                       {{"ok", r.ok()}, {"crossings", r.crossings}});
            }
        }
    }
    report["ok"] = all_ok;
    if (!o.out.empty()) write_text_file(o.out, dump(report));
    return all_ok ? kExitPass : kExitFail;
}

int cmd_lemmas(const Options& o, std::ostream& out) {
    static const std::vector<std::string> suites = {"pair", "xset", "chain", "convex",
                                                    "delaunaypath", "visibility", "triplet"};
    std::vector<std::string> chosen;
    if (o.suite == "all") {
        chosen = suites;
    } else if (o.suite == "diskcell") {
        chosen = {"pair", "xset", "chain"};
    } else if (std::find(suites.begin(), suites.end(), o.suite) != suites.end()) {
        chosen = {o.suite};
    } else {
        throw CLI::ValidationError("--suite", "unknown suite '" + o.suite + "'");
    }
    std::vector<CheckResult> results;
    auto add = [&](std::vector<CheckResult> r) { results.insert(results.end(), r.begin(), r.end()); };
    for (const std::string& s : chosen) {
        if (s == "pair") add(check_lemma4(o.trials, o.seed));
        if (s == "xset") add(check_lemma5(o.trials, o.seed));
        if (s == "chain") add(check_lemma6(o.trials, o.seed));
        if (s == "convex") add({check_convex_reach(o.trials, o.seed)});
        if (s == "delaunaypath") add(check_delaunay_paths(o.trials, o.seed));
        if (s == "visibility") add({check_visible_attachment(o.trials, o.seed)});
        if (s == "triplet") add({check_triplets()});
    }
    bool all_ok = true;
    Json report = Json::array();
    for (const CheckResult& r : results) {
        all_ok = all_ok && r.ok();
        out << r.name << ": " << pass(r.ok()) << " trials=" << r.trials << " violations=" << r.violations
            << " worst=" << r.worst << " bound=" << r.bound << "\n";
        report.push_back({{"name", r.name},
                          {"ok", r.ok()},
                          {"trials", r.trials},
                          {"violations", r.violations},
                          {"worst", r.worst},
                          {"bound", r.bound}});
    }
    if (!o.out.empty()) {
        write_text_file(o.out, dump(Json{{"seed", o.seed}, {"ok", all_ok}, {"results", report}}));
    }
    return all_ok ? kExitPass : kExitFail;
}

int cmd_render(const Options& o) {
    const PointSet ps = load_points(o.in);
    std::optional<SpannerBundle> plane;
    std::optional<HexSpanner> hex;
    if (!o.spanner.empty()) {
        const Json sj = load_json(o.spanner);
        if (spanner_kind(sj) == "plane") {
            plane = spanner_from_json(sj, ps);
        } else {
            hex = hex_spanner_from_json(sj, ps);
        }
    }
    write_text_file(o.svg, render_svg(ps, plane ? &*plane : nullptr, hex ? &*hex : nullptr));
    return kExitPass;
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Plane hop spanners for unit disk graphs"};
    app.require_subcommand(1);
    Options o;

    auto* gen = app.add_subcommand("gen", "generate a seeded random point set");
    gen->add_option("--n", o.n, "number of points")->required()->check(CLI::PositiveNumber);
    gen->add_option("--width", o.width, "region width")->capture_default_str();
    gen->add_option("--height", o.height, "region height")->capture_default_str();
    auto* gen_seed = gen->add_option("--seed", o.seed, "random seed")->required();
    (void)gen_seed;
    gen->add_option("--min-gap", o.min_gap, "minimum pairwise distance")->capture_default_str();
    gen->add_option("--out", o.out, "output points file (default stdout)");

    auto* build = app.add_subcommand("build", "build a spanner from a points file");
    build->add_option("--in", o.in, "points file")->required();
    build->add_option("--out", o.out, "output spanner file (default stdout)");
    build->add_option("--kind", o.kind, "plane or hex")->check(CLI::IsMember({"plane", "hex"}))->capture_default_str();
    auto* build_seed = build->add_option("--seed", o.seed, "jitter seed");
    build->add_flag("--jitter", o.jitter, "perturb the input by at most 2^-30 before building");
    build->add_option("--jittered-out", o.jittered_out, "where to write the perturbed points");

    auto* verify = app.add_subcommand("verify", "verify a spanner against its points");
    verify->add_option("--in", o.in, "points file")->required();
    verify->add_option("--spanner", o.spanner, "spanner file")->required();
    verify->add_option("--checks", o.checks, "comma list of planarity,lengths,stretch,properties,hex");
    auto* bound_opt = verify->add_option("--bound", o.bound, "hop bound for the stretch check")->capture_default_str();
    verify->add_option("--out", o.out, "machine-readable JSON report");

    auto* lemmas = app.add_subcommand("lemmas", "run the randomized geometric checkers");
    lemmas->add_option("--suite", o.suite,
                       "all, diskcell (= pair, xset, chain), convex, delaunaypath, visibility, triplet")
        ->capture_default_str();
    lemmas->add_option("--trials", o.trials, "trials per statement")->capture_default_str();
    lemmas->add_option("--seed", o.seed, "random seed")->required();
    lemmas->add_option("--out", o.out, "machine-readable JSON report");

    auto* render = app.add_subcommand("render", "draw points and a spanner as SVG");
    render->add_option("--in", o.in, "points file")->required();
    render->add_option("--spanner", o.spanner, "spanner file");
    render->add_option("--svg", o.svg, "output SVG file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(o, out);
        if (build->parsed()) return cmd_build(o, build_seed->count() > 0, out, err);
        if (verify->parsed()) return cmd_verify(o, bound_opt->count() > 0, out);
        if (lemmas->parsed()) return cmd_lemmas(o, out);
        if (render->parsed()) return cmd_render(o);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}

}  // namespace hopspan
